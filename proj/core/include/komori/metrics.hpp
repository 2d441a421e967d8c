#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace komori {

// All metrics tokenize with normalize() unless `raw` is set, in which case
// text is split on ASCII whitespace and compared verbatim.

/// Corpus WER: total word-level edits over total reference words.
/// Throws LengthMismatch or EmptyReference.
double wer(std::span<const std::string> refs, std::span<const std::string> hyps,
           bool raw = false);

/// Corpus CER over the normalized strings, spaces included.
double cer(std::span<const std::string> refs, std::span<const std::string> hyps,
           bool raw = false);

/// Mean per-pair ROUGE-N F1 with clipped n-gram counts.
double rouge_n(std::span<const std::string> refs, std::span<const std::string> hyps,
               std::size_t n, bool raw = false);

/// Mean per-pair F1 of the token-level longest common subsequence.
double rouge_l(std::span<const std::string> refs, std::span<const std::string> hyps,
               bool raw = false);

/// Summary-level ROUGE-L: each '\n'-separated reference segment is scored by
/// the union of its LCS hits against every hypothesis segment. Identical to
/// rouge_l when no text contains a newline.
double rouge_lsum(std::span<const std::string> refs, std::span<const std::string> hyps,
                  bool raw = false);

struct MetricSet {
  bool wer = true;
  bool cer = true;
  bool rouge1 = true;
  bool rouge2 = true;
  bool rougeL = true;
  bool rougeLsum = true;
};

struct EvalScores {
  std::optional<double> wer;
  std::optional<double> cer;
  std::optional<double> rouge1;
  std::optional<double> rouge2;
  std::optional<double> rougeL;
  std::optional<double> rougeLsum;
  std::size_t n_pairs = 0;
};

EvalScores evaluate(std::span<const std::string> refs, std::span<const std::string> hyps,
                    const MetricSet& which = {}, bool raw = false);

}  // namespace komori

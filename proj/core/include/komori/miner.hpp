#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "komori/fuzzy_index.hpp"
#include "komori/lexicon.hpp"

namespace komori {

enum class FilterMode { exact, fuzzy };

struct FilterConfig {
  /// Minimum fraction of a sentence's tokens that must be covered.
  double coverage_threshold = 0.80;
  /// Minimum word similarity in percent (fuzzy mode).
  double similarity_threshold = 80.0;
  FilterMode mode = FilterMode::exact;
  std::size_t min_tokens = 1;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  std::size_t threads = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct WordMatch {
  std::string token;
  std::string word;
  double similarity = 0.0;

  bool operator==(const WordMatch&) const = default;
};

struct FilterRecord {
  std::size_t line_no = 0;
  std::string original;
  std::size_t tokens = 0;
  std::size_t matched = 0;
  double coverage = 0.0;
  bool retained = false;
  std::vector<WordMatch> matches;

  bool operator==(const FilterRecord&) const = default;
};

struct FilterStats {
  std::size_t lines = 0;
  std::size_t retained = 0;
  std::size_t total_tokens = 0;
  std::size_t unique_tokens = 0;
  /// Token lookups answered from the per-corpus memo.
  std::size_t cache_hits = 0;
  /// Edit-distance computations performed inside the index (fuzzy only).
  std::uint64_t distance_evaluations = 0;
};

struct FilterResult {
  std::vector<FilterRecord> records;
  FilterStats stats;
};

/// Keeps sentences whose share of tokens found verbatim in `lexicon` reaches
/// cfg.coverage_threshold. One record per input sentence, in input order;
/// sentence i gets line_no first_line + i. Ill-formed UTF-8 lines produce an
/// empty, rejected record.
FilterResult filter_exact(std::span<const std::string> corpus, const Lexicon& lexicon,
                          const FilterConfig& cfg, std::size_t first_line = 1);

/// As filter_exact, except a token counts as covered when the index holds a
/// word with similarity >= cfg.similarity_threshold. Each distinct token is
/// looked up once per call.
FilterResult filter_fuzzy(std::span<const std::string> corpus, const BkTree& index,
                          const FilterConfig& cfg, std::size_t first_line = 1);

/// Originals of the retained records, in order.
std::vector<std::string> retained_only(std::span<const FilterRecord> records);

}  // namespace komori

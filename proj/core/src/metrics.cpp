#include "komori/metrics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "komori/editdist.hpp"
#include "komori/error.hpp"
#include "komori/text_norm.hpp"
#include "komori/utf8.hpp"

namespace komori {
namespace {

using Tokens = std::vector<std::string>;

Tokens split_whitespace(std::string_view text) {
  Tokens out;
  std::size_t i = 0;
  constexpr std::string_view ws = " \t\n\r\v\f";
  while (i < text.size()) {
    const auto begin = text.find_first_not_of(ws, i);
    if (begin == std::string_view::npos) break;
    auto end = text.find_first_of(ws, begin);
    if (end == std::string_view::npos) end = text.size();
    out.emplace_back(text.substr(begin, end - begin));
    i = end;
  }
  return out;
}

Tokens tokenize(std::string_view text, bool raw) {
  return raw ? split_whitespace(text) : normalize(text).surfaces();
}

std::vector<Tokens> segments(std::string_view text, bool raw) {
  std::vector<Tokens> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    Tokens seg = tokenize(text.substr(start, end - start), raw);
    if (!seg.empty()) out.push_back(std::move(seg));
    start = end + 1;
  }
  return out;
}

void check_lengths(std::span<const std::string> refs, std::span<const std::string> hyps) {
  if (refs.size() != hyps.size()) throw LengthMismatch(refs.size(), hyps.size());
}

// Maps both token sequences onto shared integer ids so the scalar-level
// edit distance can run over words.
std::pair<std::u32string, std::u32string> intern(const Tokens& a, const Tokens& b) {
  std::unordered_map<std::string, char32_t> ids;
  auto encode = [&](const Tokens& tokens) {
    std::u32string out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
      out.push_back(ids.emplace(t, static_cast<char32_t>(ids.size())).first->second);
    }
    return out;
  };
  auto x = encode(a);
  auto y = encode(b);
  return {std::move(x), std::move(y)};
}

double f1(std::size_t hits, std::size_t hyp_units, std::size_t ref_units) {
  if (hits == 0 || hyp_units == 0 || ref_units == 0) return 0.0;
  const double precision = static_cast<double>(hits) / static_cast<double>(hyp_units);
  const double recall = static_cast<double>(hits) / static_cast<double>(ref_units);
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<std::vector<std::size_t>> lcs_table(const Tokens& ref, const Tokens& hyp) {
  std::vector<std::vector<std::size_t>> t(ref.size() + 1, std::vector<std::size_t>(hyp.size() + 1));
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      t[i][j] = ref[i - 1] == hyp[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t;
}

std::size_t lcs_length(const Tokens& ref, const Tokens& hyp) {
  return lcs_table(ref, hyp)[ref.size()][hyp.size()];
}

// Reference positions on one LCS path.
std::vector<std::size_t> lcs_positions(const Tokens& ref, const Tokens& hyp) {
  const auto t = lcs_table(ref, hyp);
  std::vector<std::size_t> positions;
  std::size_t i = ref.size();
  std::size_t j = hyp.size();
  while (i > 0 && j > 0) {
    if (ref[i - 1] == hyp[j - 1]) {
      positions.push_back(i - 1);
      --i;
      --j;
    } else if (t[i][j - 1] > t[i - 1][j]) {
      --j;
    } else {
      --i;
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

std::size_t union_lcs_hits(const std::vector<Tokens>& ref, const std::vector<Tokens>& hyp) {
  std::map<std::string, std::size_t> ref_counts;
  std::map<std::string, std::size_t> hyp_counts;
  for (const auto& seg : ref) for (const auto& t : seg) ++ref_counts[t];
  for (const auto& seg : hyp) for (const auto& t : seg) ++hyp_counts[t];

  std::size_t hits = 0;
  for (const auto& r : ref) {
    std::vector<bool> in_union(r.size(), false);
    for (const auto& h : hyp) {
      for (std::size_t pos : lcs_positions(r, h)) in_union[pos] = true;
    }
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      if (!in_union[pos]) continue;
      auto& rc = ref_counts[r[pos]];
      auto& hc = hyp_counts[r[pos]];
      if (rc > 0 && hc > 0) {
        ++hits;
        --rc;
        --hc;
      }
    }
  }
  return hits;
}

std::map<Tokens, std::size_t> ngrams(const Tokens& tokens, std::size_t n) {
  std::map<Tokens, std::size_t> counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Tokens(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                    tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

std::size_t total(const std::vector<Tokens>& segs) {
  std::size_t n = 0;
  for (const auto& s : segs) n += s.size();
  return n;
}

template <typename PairScore>
double mean_over_pairs(std::span<const std::string> refs, std::span<const std::string> hyps,
                       PairScore&& score) {
  check_lengths(refs, hyps);
  if (refs.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < refs.size(); ++i) sum += score(refs[i], hyps[i]);
  return sum / static_cast<double>(refs.size());
}

}  // namespace

double wer(std::span<const std::string> refs, std::span<const std::string> hyps, bool raw) {
  check_lengths(refs, hyps);
  std::size_t errors = 0;
  std::size_t words = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const Tokens ref = tokenize(refs[i], raw);
    if (ref.empty()) throw EmptyReference(i);
    const auto [r, h] = intern(ref, tokenize(hyps[i], raw));
    errors += levenshtein(r, h);
    words += ref.size();
  }
  return words == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(words);
}

double cer(std::span<const std::string> refs, std::span<const std::string> hyps, bool raw) {
  check_lengths(refs, hyps);
  std::size_t errors = 0;
  std::size_t chars = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const std::u32string ref = utf8::decode(raw ? refs[i] : normalize(refs[i]).normalized);
    const std::u32string hyp = utf8::decode(raw ? hyps[i] : normalize(hyps[i]).normalized);
    if (ref.empty()) throw EmptyReference(i);
    errors += levenshtein(ref, hyp);
    chars += ref.size();
  }
  return chars == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(chars);
}

double rouge_n(std::span<const std::string> refs, std::span<const std::string> hyps,
               std::size_t n, bool raw) {
  return mean_over_pairs(refs, hyps, [&](const std::string& ref, const std::string& hyp) {
    const auto r = ngrams(tokenize(ref, raw), n);
    const auto h = ngrams(tokenize(hyp, raw), n);
    std::size_t overlap = 0;
    std::size_t ref_total = 0;
    std::size_t hyp_total = 0;
    for (const auto& [gram, count] : r) {
      ref_total += count;
      if (const auto it = h.find(gram); it != h.end()) overlap += std::min(count, it->second);
    }
    for (const auto& [gram, count] : h) hyp_total += count;
    return f1(overlap, hyp_total, ref_total);
  });
}

double rouge_l(std::span<const std::string> refs, std::span<const std::string> hyps, bool raw) {
  return mean_over_pairs(refs, hyps, [&](const std::string& ref, const std::string& hyp) {
    const Tokens r = tokenize(ref, raw);
    const Tokens h = tokenize(hyp, raw);
    return f1(lcs_length(r, h), h.size(), r.size());
  });
}

double rouge_lsum(std::span<const std::string> refs, std::span<const std::string> hyps,
                  bool raw) {
  return mean_over_pairs(refs, hyps, [&](const std::string& ref, const std::string& hyp) {
    const auto r = segments(ref, raw);
    const auto h = segments(hyp, raw);
    return f1(union_lcs_hits(r, h), total(h), total(r));
  });
}

EvalScores evaluate(std::span<const std::string> refs, std::span<const std::string> hyps,
                    const MetricSet& which, bool raw) {
  check_lengths(refs, hyps);
  EvalScores scores;
  scores.n_pairs = refs.size();
  if (which.wer) scores.wer = wer(refs, hyps, raw);
  if (which.cer) scores.cer = cer(refs, hyps, raw);
  if (which.rouge1) scores.rouge1 = rouge_n(refs, hyps, 1, raw);
  if (which.rouge2) scores.rouge2 = rouge_n(refs, hyps, 2, raw);
  if (which.rougeL) scores.rougeL = rouge_l(refs, hyps, raw);
  if (which.rougeLsum) scores.rougeLsum = rouge_lsum(refs, hyps, raw);
  return scores;
}

}  // namespace komori

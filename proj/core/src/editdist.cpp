#include "komori/editdist.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "komori/error.hpp"
#include "komori/utf8.hpp"

namespace komori {
namespace {

// Common prefixes and suffixes never change the distance.
void trim_common(std::u32string_view& a, std::u32string_view& b) {
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  a.remove_prefix(prefix);
  b.remove_prefix(prefix);
  std::size_t suffix = 0;
  while (suffix < a.size() && suffix < b.size() &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  a.remove_suffix(suffix);
  b.remove_suffix(suffix);
}

// Match masks for a pattern of at most 64 scalars: a small open-addressing
// table on the stack. Only the occupancy bits are cleared up front.
class PatternMasks {
 public:
  explicit PatternMasks(std::u32string_view pattern) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      std::size_t h = pattern[i] & (kSlots - 1);
      while (occupied(h) && keys_[h] != pattern[i]) h = (h + 1) & (kSlots - 1);
      if (!occupied(h)) {
        used_[h / 64] |= std::uint64_t{1} << (h % 64);
        keys_[h] = pattern[i];
        masks_[h] = 0;
      }
      masks_[h] |= std::uint64_t{1} << i;
    }
  }

  std::uint64_t mask(char32_t c) const {
    for (std::size_t h = c & (kSlots - 1); occupied(h); h = (h + 1) & (kSlots - 1)) {
      if (keys_[h] == c) return masks_[h];
    }
    return 0;
  }

 private:
  static constexpr std::size_t kSlots = 128;

  bool occupied(std::size_t h) const { return (used_[h / 64] >> (h % 64)) & 1U; }

  std::array<std::uint64_t, kSlots / 64> used_{};
  std::array<char32_t, kSlots> keys_;
  std::array<std::uint64_t, kSlots> masks_;
};

// Bit-parallel distance (Myers, Hyyro's formulation) for a pattern of
// 1..64 scalars. Stops once the distance provably exceeds `bound`.
template <typename Masks>
std::optional<std::size_t> bit_parallel(const Masks& peq, std::size_t n, std::u32string_view b,
                                        std::size_t bound) {
  const std::uint64_t last = std::uint64_t{1} << (n - 1);
  std::uint64_t pv = ~std::uint64_t{0};
  std::uint64_t mv = 0;
  std::size_t score = n;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const std::uint64_t eq = peq.mask(b[j]);
    const std::uint64_t xv = eq | mv;
    const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
    std::uint64_t ph = mv | ~(xh | pv);
    std::uint64_t mh = pv & xh;
    if (ph & last) ++score;
    if (mh & last) --score;
    ph = (ph << 1) | 1;
    mh <<= 1;
    pv = mh | ~(xv | ph);
    mv = ph & xv;
    // Each remaining column lowers the score by at most one.
    const std::size_t remaining = b.size() - j - 1;
    if (score > bound && score - bound > remaining) return std::nullopt;
  }
  if (score > bound) return std::nullopt;
  return score;
}

constexpr std::size_t kWordBits = 64;

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  trim_common(a, b);
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return b.size();
  if (a.size() <= kWordBits) return *bit_parallel(PatternMasks(a), a.size(), b, b.size());

  // One row over the shorter string; `diagonal` holds the top-left cell.
  std::vector<std::size_t> row(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;

  for (std::size_t j = 1; j <= b.size(); ++j) {
    std::size_t diagonal = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      const std::size_t above = row[i];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[i] = std::min({substitute, above + 1, row[i - 1] + 1});
      diagonal = above;
    }
  }
  return row[a.size()];
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(utf8::decode(a), utf8::decode(b));
}

std::optional<std::size_t> levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                               std::size_t max_distance) {
  trim_common(a, b);
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (m - n > max_distance) return std::nullopt;
  if (n == 0) return m;
  if (n <= kWordBits) return bit_parallel(PatternMasks(a), n, b, max_distance);

  // The distance never exceeds m, so a larger bound only widens the band.
  const std::size_t k = std::min(max_distance, m);
  const std::size_t inf = k + 1;

  // Rows run over b, columns over a. Cells with |i - j| > k are treated as
  // inf; the cell just right of each row's band is written explicitly so the
  // next row never reads a stale value.
  std::vector<std::size_t> prev(n + 1, inf);
  std::vector<std::size_t> cur(n + 1, inf);
  for (std::size_t i = 0; i <= std::min(n, k); ++i) prev[i] = i;

  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t lo = j > k ? j - k : 1;
    const std::size_t hi = std::min(n, j + k);
    cur[lo - 1] = lo == 1 ? std::min(j, inf) : inf;
    std::size_t row_min = cur[lo - 1];
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t substitute = prev[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t best = std::min({substitute, prev[i] + 1, cur[i - 1] + 1});
      cur[i] = std::min(best, inf);
      row_min = std::min(row_min, cur[i]);
    }
    if (hi < n) cur[hi + 1] = inf;
    if (row_min > k) return std::nullopt;
    std::swap(prev, cur);
  }
  if (prev[n] > k) return std::nullopt;
  return prev[n];
}

std::optional<std::size_t> levenshtein_bounded(std::string_view a, std::string_view b,
                                               std::size_t max_distance) {
  return levenshtein_bounded(utf8::decode(a), utf8::decode(b), max_distance);
}

EditPattern::EditPattern(std::u32string_view pattern) : pattern_(pattern) {
  if (pattern_.size() > kWordBits) return;
  for (std::size_t i = 0; i < pattern_.size(); ++i) {
    const char32_t c = pattern_[i];
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (c < latin_.size()) {
      latin_[c] |= bit;
      continue;
    }
    auto it = std::find_if(wide_.begin(), wide_.end(), [c](const auto& e) { return e.first == c; });
    if (it == wide_.end()) it = wide_.insert(wide_.end(), {c, 0});
    it->second |= bit;
  }
}

std::size_t EditPattern::distance(std::u32string_view text) const {
  return *bounded(text, std::max(pattern_.size(), text.size()));
}

std::optional<std::size_t> EditPattern::bounded(std::u32string_view text,
                                                std::size_t max_distance) const {
  const std::size_t n = pattern_.size();
  const std::size_t gap = n > text.size() ? n - text.size() : text.size() - n;
  if (gap > max_distance) return std::nullopt;
  if (n == 0) return text.size();
  if (n > kWordBits) return levenshtein_bounded(pattern_, text, max_distance);
  return bit_parallel(*this, n, text, max_distance);
}

double normalized_from_raw(std::size_t raw, std::size_t len_a, std::size_t len_b) {
  const std::size_t longest = std::max(len_a, len_b);
  if (longest == 0) throw BothEmpty();
  return 100.0 * static_cast<double>(raw) / static_cast<double>(longest);
}

double normalized_distance(std::u32string_view a, std::u32string_view b) {
  if (a.empty() && b.empty()) throw BothEmpty();
  return normalized_from_raw(levenshtein(a, b), a.size(), b.size());
}

double normalized_distance(std::string_view a, std::string_view b) {
  return normalized_distance(utf8::decode(a), utf8::decode(b));
}

double similarity(std::u32string_view a, std::u32string_view b) {
  return 100.0 - normalized_distance(a, b);
}

double similarity(std::string_view a, std::string_view b) {
  return similarity(utf8::decode(a), utf8::decode(b));
}

EditCost edit_cost(std::u32string_view a, std::u32string_view b) {
  const std::size_t raw = levenshtein(a, b);
  return {raw, normalized_from_raw(raw, a.size(), b.size())};
}

}  // namespace komori

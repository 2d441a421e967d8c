#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace komori {

// Character unit everywhere below is the Unicode scalar value. The
// std::string_view overloads decode UTF-8 first; callers are expected to
// have NFC-normalized their input (normalize() does).

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Levenshtein distance if it is at most `max_distance`, otherwise nullopt.
/// Only a diagonal band of width 2*max_distance+1 is evaluated and the scan
/// stops as soon as every cell in a row exceeds the bound.
std::optional<std::size_t> levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                               std::size_t max_distance);
std::optional<std::size_t> levenshtein_bounded(std::string_view a, std::string_view b,
                                               std::size_t max_distance);

/// A word compiled once and compared against many others. Words of up to 64
/// scalars use a bit-parallel scan; longer ones fall back to the banded DP.
class EditPattern {
 public:
  explicit EditPattern(std::u32string_view pattern);

  std::size_t size() const { return pattern_.size(); }
  std::u32string_view scalars() const { return pattern_; }

  std::size_t distance(std::u32string_view text) const;
  std::optional<std::size_t> bounded(std::u32string_view text, std::size_t max_distance) const;

  std::uint64_t mask(char32_t c) const {
    if (c < latin_.size()) return latin_[c];
    for (const auto& [scalar, bits] : wide_) {
      if (scalar == c) return bits;
    }
    return 0;
  }

 private:
  std::u32string pattern_;
  std::array<std::uint64_t, 256> latin_{};
  std::vector<std::pair<char32_t, std::uint64_t>> wide_;
};

/// 100 * raw / max(len_a, len_b). Throws BothEmpty when both lengths are 0.
double normalized_from_raw(std::size_t raw, std::size_t len_a, std::size_t len_b);

/// Lexical distance in [0, 100]: edit distance over the longer word's length,
/// scaled to percent. 0 for identical words. Throws BothEmpty.
double normalized_distance(std::u32string_view a, std::u32string_view b);
double normalized_distance(std::string_view a, std::string_view b);

/// 100 - normalized_distance(a, b). Throws BothEmpty.
double similarity(std::u32string_view a, std::u32string_view b);
double similarity(std::string_view a, std::string_view b);

struct EditCost {
  std::size_t raw = 0;
  double normalized = 0.0;
};

EditCost edit_cost(std::u32string_view a, std::u32string_view b);

}  // namespace komori

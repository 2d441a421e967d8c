#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "komori/lexicon.hpp"

namespace komori {

struct Token {
  std::string surface;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

/// A sentence in canonical form. `normalized` is exactly the tokens joined by
/// single spaces, lowercase (full case folding) and NFC.
struct NormalizedText {
  std::string original;
  std::string normalized;
  std::vector<Token> tokens;

  std::vector<std::string> surfaces() const;
};

/// Canonicalizes one sentence of UTF-8 text:
///
///   U+2019 -> U+0027, NFC, full case folding, NFC again, then every scalar
///   that is not a letter, decimal digit, combining mark or apostrophe becomes
///   a space. Whitespace runs collapse, and apostrophes at either end of a
///   token are stripped ("'mimi'" -> "mimi", "ng'ombe" unchanged).
///
/// Ill-formed UTF-8 decodes to U+FFFD, which is dropped as punctuation.
/// The result is idempotent: normalize(normalize(x).normalized) has the same
/// normalized text as normalize(x).
NormalizedText normalize(std::string_view raw);

/// Deduplicated union of all tokens in `texts`.
Lexicon word_set(std::span<const NormalizedText> texts);

}  // namespace komori

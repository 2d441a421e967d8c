#include "komori/text_norm.hpp"

#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace komori {
namespace {

constexpr UChar32 kApostrophe = 0x27;
constexpr UChar32 kRightSingleQuote = 0x2019;

const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
    return n;
  }();
  return *instance;
}

icu::UnicodeString to_nfc(const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(text, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  return out;
}

bool is_word_char(UChar32 c) {
  return c == kApostrophe || (U_GET_GC_MASK(c) & (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) != 0;
}

// NFC, full case folding, NFC. Folding can leave text that folds further
// once recomposed, so repeat to a fixpoint.
icu::UnicodeString canonical_case(icu::UnicodeString text) {
  text = to_nfc(text);
  for (int round = 0; round < 4; ++round) {
    icu::UnicodeString next = text;
    next.foldCase(U_FOLD_CASE_DEFAULT);
    next = to_nfc(next);
    if (next == text) break;
    text = std::move(next);
  }
  return text;
}

std::string finish_token(const icu::UnicodeString& token) {
  std::string out;
  to_nfc(token).toUTF8String(out);
  return out;
}

}  // namespace

std::vector<std::string> NormalizedText::surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

NormalizedText normalize(std::string_view raw) {
  NormalizedText result;
  result.original = std::string(raw);

  icu::UnicodeString text =
      icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  text.findAndReplace(icu::UnicodeString(kRightSingleQuote), icu::UnicodeString(kApostrophe));
  text = canonical_case(std::move(text));

  icu::UnicodeString current;
  auto flush = [&] {
    int32_t begin = 0;
    int32_t end = current.length();
    while (begin < end && current.char32At(begin) == kApostrophe) ++begin;
    while (end > begin && current.char32At(end - 1) == kApostrophe) --end;
    if (begin < end) {
      std::string surface = finish_token(current.tempSubStringBetween(begin, end));
      if (!result.normalized.empty()) result.normalized += ' ';
      result.normalized += surface;
      result.tokens.push_back({std::move(surface), result.tokens.size()});
    }
    current.remove();
  };

  for (int32_t i = 0; i < text.length(); i = text.moveIndex32(i, 1)) {
    const UChar32 c = text.char32At(i);
    if (is_word_char(c)) {
      current.append(c);
    } else {
      flush();
    }
  }
  flush();
  return result;
}

Lexicon word_set(std::span<const NormalizedText> texts) {
  Lexicon lexicon;
  for (const auto& text : texts) {
    for (const auto& token : text.tokens) lexicon.words.insert(token.surface);
  }
  return lexicon;
}

}  // namespace komori

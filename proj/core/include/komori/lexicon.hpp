#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace komori {

/// Opaque, case-sensitive language identifier such as "sw" or "zdj".
using LanguageId = std::string;

/// One concept of a multilingual list, keyed by its pivot-language gloss.
/// A language mapped to an empty variant list has no attested form.
struct ConceptEntry {
  std::string gloss;
  std::map<LanguageId, std::vector<std::string>> forms;

  /// Variants for `lang`, empty if missing or undeclared.
  std::span<const std::string> variants(const LanguageId& lang) const;

  bool operator==(const ConceptEntry&) const = default;
};

struct ConceptList {
  std::string name;
  std::vector<LanguageId> languages;
  std::vector<ConceptEntry> entries;

  bool has_language(const LanguageId& lang) const;

  bool operator==(const ConceptList&) const = default;
};

struct Lexicon {
  LanguageId language;
  std::set<std::string> words;

  bool contains(const std::string& word) const { return words.contains(word); }
  std::size_t size() const noexcept { return words.size(); }
  bool empty() const noexcept { return words.empty(); }

  bool operator==(const Lexicon&) const = default;
};

/// Separates alternative forms inside one concept-list cell.
inline constexpr char kVariantDelimiter = '|';

/// A tabular record: cell 0 is the gloss, cell i (i >= 1) belongs to
/// languages[i - 1].
struct TableRow {
  std::size_t line_no = 0;
  std::vector<std::string> cells;
};

/// Builds a concept list from already-split rows. Every variant is passed
/// through normalize() and must come out as exactly one token.
///
/// Throws DuplicateGloss or MalformedRow, naming the source line.
ConceptList load_concept_list(std::string name, std::span<const TableRow> rows,
                              std::vector<LanguageId> languages);

/// Parses the TSV concept-list format: a header `gloss<TAB>lang1<TAB>...`
/// followed by one concept per line, `|`-separated variants, empty cell for
/// a missing form. A leading BOM is tolerated.
ConceptList read_concept_list(std::istream& in, std::string name);

/// Inverse of read_concept_list for already-normalized lists.
void write_concept_list(std::ostream& out, const ConceptList& list);

/// Fraction of entries with at least one variant for `lang`. Zero for an
/// empty list. Throws UnknownLanguage.
double coverage(const ConceptList& list, const LanguageId& lang);

/// One word per line; every line is normalized and all of its tokens are
/// added. Blank lines are skipped.
Lexicon read_lexicon(std::istream& in, LanguageId language = {});

/// Sorted, one word per line, trailing newline after every word.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

}  // namespace komori

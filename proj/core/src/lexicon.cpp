#include "komori/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "komori/error.hpp"
#include "komori/lines.hpp"
#include "komori/text_norm.hpp"

namespace komori {
namespace {

std::vector<std::string> split(std::string_view line, char delimiter) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> parse_cell(const std::string& cell, std::size_t line_no) {
  std::vector<std::string> variants;
  for (const auto& piece : split(cell, kVariantDelimiter)) {
    const NormalizedText text = normalize(piece);
    if (text.tokens.empty()) continue;
    if (text.tokens.size() > 1) {
      throw MalformedRow(line_no, "variant '" + piece + "' is not a single word");
    }
    const std::string& word = text.tokens.front().surface;
    if (std::find(variants.begin(), variants.end(), word) == variants.end()) {
      variants.push_back(word);
    }
  }
  return variants;
}

}  // namespace

std::span<const std::string> ConceptEntry::variants(const LanguageId& lang) const {
  const auto it = forms.find(lang);
  if (it == forms.end()) return {};
  return it->second;
}

bool ConceptList::has_language(const LanguageId& lang) const {
  return std::find(languages.begin(), languages.end(), lang) != languages.end();
}

ConceptList load_concept_list(std::string name, std::span<const TableRow> rows,
                              std::vector<LanguageId> languages) {
  ConceptList list;
  list.name = std::move(name);
  list.languages = std::move(languages);

  std::unordered_set<std::string> seen;
  for (const auto& row : rows) {
    if (row.cells.size() != list.languages.size() + 1) {
      throw MalformedRow(row.line_no, "expected " + std::to_string(list.languages.size() + 1) +
                                          " cells, found " + std::to_string(row.cells.size()));
    }
    ConceptEntry entry;
    entry.gloss = std::string(trim(row.cells.front()));
    if (entry.gloss.empty()) throw MalformedRow(row.line_no, "empty gloss");
    if (!seen.insert(entry.gloss).second) throw DuplicateGloss(entry.gloss, row.line_no);

    for (std::size_t i = 0; i < list.languages.size(); ++i) {
      entry.forms[list.languages[i]] = parse_cell(row.cells[i + 1], row.line_no);
    }
    list.entries.push_back(std::move(entry));
  }
  return list;
}

ConceptList read_concept_list(std::istream& in, std::string name) {
  const std::vector<std::string> lines = read_lines(in);
  if (lines.empty()) throw MalformedRow(1, "missing header");

  const std::vector<std::string> header = split(lines.front(), '\t');
  if (header.size() < 2 || trim(header.front()) != "gloss") {
    throw MalformedRow(1, "header must be 'gloss<TAB>lang1[<TAB>lang2...]'");
  }
  std::vector<LanguageId> languages;
  for (std::size_t i = 1; i < header.size(); ++i) {
    std::string id(trim(header[i]));
    if (id.empty()) throw MalformedRow(1, "empty language id in header");
    if (std::find(languages.begin(), languages.end(), id) != languages.end()) {
      throw MalformedRow(1, "language '" + id + "' declared twice");
    }
    languages.push_back(std::move(id));
  }

  std::vector<TableRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    rows.push_back({i + 1, split(lines[i], '\t')});
  }
  return load_concept_list(std::move(name), rows, std::move(languages));
}

void write_concept_list(std::ostream& out, const ConceptList& list) {
  out << "gloss";
  for (const auto& lang : list.languages) out << '\t' << lang;
  out << '\n';
  for (const auto& entry : list.entries) {
    out << entry.gloss;
    for (const auto& lang : list.languages) {
      out << '\t';
      const auto variants = entry.variants(lang);
      for (std::size_t i = 0; i < variants.size(); ++i) {
        if (i > 0) out << kVariantDelimiter;
        out << variants[i];
      }
    }
    out << '\n';
  }
}

double coverage(const ConceptList& list, const LanguageId& lang) {
  if (!list.has_language(lang)) throw UnknownLanguage(lang);
  if (list.entries.empty()) return 0.0;
  const auto present = std::count_if(list.entries.begin(), list.entries.end(),
                                     [&](const ConceptEntry& e) { return !e.variants(lang).empty(); });
  return static_cast<double>(present) / static_cast<double>(list.entries.size());
}

Lexicon read_lexicon(std::istream& in, LanguageId language) {
  Lexicon lexicon;
  lexicon.language = std::move(language);
  for (const auto& line : read_lines(in)) {
    for (auto& token : normalize(line).tokens) lexicon.words.insert(std::move(token.surface));
  }
  return lexicon;
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& word : lexicon.words) out << word << '\n';
}

}  // namespace komori

#include "komori/lexstat.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include "komori/editdist.hpp"
#include "komori/error.hpp"
#include "komori/utf8.hpp"

namespace komori {

DistanceMatrix::DistanceMatrix(std::string list_name, std::vector<LanguageId> languages)
    : list_name_(std::move(list_name)),
      languages_(std::move(languages)),
      values_(languages_.size() * languages_.size(), 0.0),
      support_(languages_.size() * languages_.size(), 0) {}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value, std::size_t support) {
  values_[i * size() + j] = value;
  values_[j * size() + i] = value;
  support_[i * size() + j] = support;
  support_[j * size() + i] = support;
}

std::optional<std::size_t> DistanceMatrix::index_of(const LanguageId& lang) const {
  const auto it = std::find(languages_.begin(), languages_.end(), lang);
  if (it == languages_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - languages_.begin());
}

std::optional<double> concept_distance(const ConceptEntry& entry, const LanguageId& a,
                                       const LanguageId& b) {
  const auto left = entry.variants(a);
  const auto right = entry.variants(b);
  if (left.empty() || right.empty()) return std::nullopt;

  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : left) {
    const std::u32string xs = utf8::decode(x);
    for (const auto& y : right) {
      best = std::min(best, normalized_distance(xs, utf8::decode(y)));
    }
  }
  return best;
}

LanguageDistance language_distance(const ConceptList& list, const LanguageId& a,
                                   const LanguageId& b) {
  if (!list.has_language(a)) throw UnknownLanguage(a);
  if (!list.has_language(b)) throw UnknownLanguage(b);

  std::vector<double> distances;
  distances.reserve(list.entries.size());
  for (const auto& entry : list.entries) {
    if (const auto d = concept_distance(entry, a, b)) distances.push_back(*d);
  }
  if (distances.empty()) throw NoComparablePairs(a, b);

  // Summing in sorted order makes the mean independent of concept order.
  std::sort(distances.begin(), distances.end());
  double sum = 0.0;
  for (double d : distances) sum += d;
  return {sum / static_cast<double>(distances.size()), distances.size()};
}

DistanceMatrix distance_matrix(const ConceptList& list) {
  if (list.languages.size() < 2) {
    throw DomainError("a distance matrix needs at least two languages");
  }
  DistanceMatrix matrix(list.name, list.languages);
  for (std::size_t i = 0; i < list.languages.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto d = language_distance(list, list.languages[i], list.languages[j]);
      matrix.set(i, j, d.value, d.support);
    }
    std::size_t self_support = 0;
    for (const auto& entry : list.entries) {
      if (!entry.variants(list.languages[i]).empty()) ++self_support;
    }
    matrix.set(i, i, 0.0, self_support);
  }
  return matrix;
}

void write_matrix_tsv(std::ostream& out, const DistanceMatrix& matrix) {
  out << "language";
  for (const auto& lang : matrix.languages()) out << '\t' << lang;
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << matrix.languages()[i];
    for (std::size_t j = 0; j <= i; ++j) {
      std::snprintf(buf, sizeof buf, "%.6f", matrix.value(i, j));
      out << '\t' << buf;
    }
    out << '\n';
  }
}

}  // namespace komori

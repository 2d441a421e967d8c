#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "komori/lexicon.hpp"

namespace komori {

/// Square language-by-language matrix of mean normalized distances.
/// Row-major storage; `support` counts the concepts each cell averages over.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(std::string list_name, std::vector<LanguageId> languages);

  const std::string& list_name() const noexcept { return list_name_; }
  const std::vector<LanguageId>& languages() const noexcept { return languages_; }
  std::size_t size() const noexcept { return languages_.size(); }

  double value(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
  std::size_t support(std::size_t i, std::size_t j) const { return support_[i * size() + j]; }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value, std::size_t support);

  std::optional<std::size_t> index_of(const LanguageId& lang) const;

private:
  std::string list_name_;
  std::vector<LanguageId> languages_;
  std::vector<double> values_;
  std::vector<std::size_t> support_;
};

/// Smallest normalized distance over the cross product of both languages'
/// variants, or nullopt if either side has none.
std::optional<double> concept_distance(const ConceptEntry& entry, const LanguageId& a,
                                       const LanguageId& b);

struct LanguageDistance {
  double value = 0.0;
  std::size_t support = 0;
};

/// Mean concept_distance over concepts attested in both languages.
///
/// A concept missing on either side is imputed with the mean of the attested
/// pairs. That leaves the mean unchanged, so only attested pairs are averaged.
///
/// Throws UnknownLanguage, or NoComparablePairs when support would be 0.
LanguageDistance language_distance(const ConceptList& list, const LanguageId& a,
                                   const LanguageId& b);

/// All pairwise language distances, zero diagonal. Requires at least two
/// languages (DomainError otherwise); propagates NoComparablePairs.
DistanceMatrix distance_matrix(const ConceptList& list);

/// Lower-triangular TSV: a header `language<TAB>id1<TAB>id2...`, then one
/// row per language holding its distances up to and including the diagonal,
/// each printed with six decimals.
void write_matrix_tsv(std::ostream& out, const DistanceMatrix& matrix);

}  // namespace komori

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "komori/lexicon.hpp"

namespace komori {

struct FuzzyMatch {
  std::string query;
  std::string match;
  std::size_t raw_distance = 0;
  /// 100 - 100 * raw_distance / max(|query|, |match|).
  double similarity = 0.0;

  bool operator==(const FuzzyMatch&) const = default;
};

/// Per-call instrumentation. Not thread-shared: pass one per thread.
struct QueryStats {
  std::uint64_t distance_evaluations = 0;
  std::uint64_t nodes_visited = 0;
};

/// Largest edit distance a lexicon word can have from a query of
/// `query_length` scalars while still reaching `min_similarity` percent.
///
/// similarity >= s  <=>  D <= (1 - s) * max(|w|, |c|)  and |c| <= |w| + D,
/// so D <= |w| * (1 - s) / s. At s = 80 this is floor(|w| / 4).
/// Returns SIZE_MAX when min_similarity is 0 (every word qualifies).
std::size_t similarity_radius(std::size_t query_length, double min_similarity);

/// Burkhard-Keller tree over a lexicon. Every word below the edge labelled d
/// is at Levenshtein distance exactly d from the edge's parent word, so a
/// radius-r query only needs to descend edges in [d(q, node) - r, d(q, node) + r].
///
/// Immutable once built; concurrent queries are safe.
class BkTree {
public:
  /// Inserts the lexicon's words in sorted order, which fixes the tree
  /// shape across runs. Throws EmptyLexicon.
  static BkTree build(const Lexicon& lexicon);

  /// Returns false if the word was already present. Words must be
  /// non-empty.
  bool insert(std::string_view word);

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  /// Every indexed word within `radius` edits of `word`, ordered by
  /// distance then word.
  std::vector<FuzzyMatch> query_radius(std::string_view word, std::size_t radius,
                                       QueryStats* stats = nullptr) const;

  /// Highest-similarity word with similarity >= min_similarity. Ties go to
  /// the shorter candidate, then the lexicographically smaller one.
  /// nullopt for an empty query or when nothing qualifies.
  std::optional<FuzzyMatch> best_similar(std::string_view word, double min_similarity,
                                         QueryStats* stats = nullptr) const;

  /// Indexed words in insertion order.
  std::vector<std::string> words() const;

  /// Checks the metric-tree property on every edge. Quadratic in the
  /// subtree sizes; meant for tests.
  bool verify() const;

private:
  struct Edge {
    std::uint32_t distance;
    std::uint32_t child;
  };
  struct Node {
    std::string word;
    std::u32string scalars;
    std::vector<Edge> children;  // sorted by distance
  };

  template <typename Visit>
  void search(std::u32string_view query, std::size_t radius, QueryStats* stats,
              Visit&& visit) const;

  std::vector<Node> nodes_;
};

}  // namespace komori

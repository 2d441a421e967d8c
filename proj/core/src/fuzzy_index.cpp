#include "komori/fuzzy_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "komori/editdist.hpp"
#include "komori/error.hpp"
#include "komori/utf8.hpp"

namespace komori {
namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kUnbounded - b ? kUnbounded : a + b;
}

// Better candidate: higher similarity, then shorter, then smaller word.
bool ranks_before(double sim_a, std::size_t len_a, const std::string& a, double sim_b,
                  std::size_t len_b, const std::string& b) {
  if (sim_a != sim_b) return sim_a > sim_b;
  if (len_a != len_b) return len_a < len_b;
  return a < b;
}

}  // namespace

std::size_t similarity_radius(std::size_t query_length, double min_similarity) {
  if (!(min_similarity > 0.0)) return kUnbounded;
  if (min_similarity >= 100.0) return 0;
  const double bound =
      static_cast<double>(query_length) * (100.0 - min_similarity) / min_similarity;
  // Rounding slack only widens the search; matches are re-checked exactly.
  return static_cast<std::size_t>(std::floor(bound * (1.0 + 1e-12) + 1e-9));
}

BkTree BkTree::build(const Lexicon& lexicon) {
  if (lexicon.empty()) throw EmptyLexicon();
  BkTree tree;
  tree.nodes_.reserve(lexicon.size());
  // std::set iterates in sorted order.
  for (const auto& word : lexicon.words) tree.insert(word);
  return tree;
}

bool BkTree::insert(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("cannot index an empty word");
  std::u32string scalars = utf8::decode(word);
  if (nodes_.empty()) {
    nodes_.push_back({std::string(word), std::move(scalars), {}});
    return true;
  }
  if (nodes_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("BK-tree node limit reached");
  }

  std::uint32_t current = 0;
  while (true) {
    const auto d = static_cast<std::uint32_t>(levenshtein(scalars, nodes_[current].scalars));
    if (d == 0) return false;
    auto& children = nodes_[current].children;
    const auto it = std::lower_bound(children.begin(), children.end(), d,
                                     [](const Edge& e, std::uint32_t v) { return e.distance < v; });
    if (it != children.end() && it->distance == d) {
      current = it->child;
      continue;
    }
    const auto index = static_cast<std::uint32_t>(nodes_.size());
    children.insert(it, Edge{d, index});
    nodes_.push_back({std::string(word), std::move(scalars), {}});
    return true;
  }
}

template <typename Visit>
void BkTree::search(std::u32string_view query, std::size_t radius, QueryStats* stats,
                    Visit&& visit) const {
  if (nodes_.empty()) return;
  const EditPattern pattern(query);
  std::vector<std::uint32_t> pending{0};
  while (!pending.empty()) {
    const Node& node = nodes_[pending.back()];
    pending.pop_back();

    const std::size_t widest = node.children.empty() ? 0 : node.children.back().distance;
    // Past radius + widest edge neither this node nor any child can qualify.
    const auto d = pattern.bounded(node.scalars, saturating_add(radius, widest));
    if (stats != nullptr) {
      ++stats->nodes_visited;
      ++stats->distance_evaluations;
    }
    if (!d) continue;
    if (*d <= radius) visit(node, *d);

    const std::size_t lo = *d > radius ? *d - radius : 0;
    const std::size_t hi = saturating_add(*d, radius);
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      if (it->distance >= lo && it->distance <= hi) pending.push_back(it->child);
    }
  }
}

std::vector<FuzzyMatch> BkTree::query_radius(std::string_view word, std::size_t radius,
                                             QueryStats* stats) const {
  const std::u32string query = utf8::decode(word);
  std::vector<FuzzyMatch> matches;
  search(query, radius, stats, [&](const Node& node, std::size_t d) {
    const double sim = 100.0 - normalized_from_raw(d, query.size(), node.scalars.size());
    matches.push_back({std::string(word), node.word, d, sim});
  });
  std::sort(matches.begin(), matches.end(), [](const FuzzyMatch& a, const FuzzyMatch& b) {
    return std::tie(a.raw_distance, a.match) < std::tie(b.raw_distance, b.match);
  });
  return matches;
}

std::optional<FuzzyMatch> BkTree::best_similar(std::string_view word, double min_similarity,
                                               QueryStats* stats) const {
  const std::u32string query = utf8::decode(word);
  if (query.empty()) return std::nullopt;

  const Node* best = nullptr;
  std::size_t best_distance = 0;
  double best_similarity = 0.0;
  search(query, similarity_radius(query.size(), min_similarity), stats,
         [&](const Node& node, std::size_t d) {
           const double sim = 100.0 - normalized_from_raw(d, query.size(), node.scalars.size());
           if (sim < min_similarity) return;
           if (best == nullptr || ranks_before(sim, node.scalars.size(), node.word,
                                               best_similarity, best->scalars.size(), best->word)) {
             best = &node;
             best_distance = d;
             best_similarity = sim;
           }
         });
  if (best == nullptr) return std::nullopt;
  return FuzzyMatch{std::string(word), best->word, best_distance, best_similarity};
}

std::vector<std::string> BkTree::words() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto& node : nodes_) out.push_back(node.word);
  return out;
}

bool BkTree::verify() const {
  for (const auto& node : nodes_) {
    for (const auto& edge : node.children) {
      std::vector<std::uint32_t> subtree{edge.child};
      while (!subtree.empty()) {
        const Node& member = nodes_[subtree.back()];
        subtree.pop_back();
        if (levenshtein(node.scalars, member.scalars) != edge.distance) return false;
        for (const auto& e : member.children) subtree.push_back(e.child);
      }
    }
  }
  return true;
}

}  // namespace komori

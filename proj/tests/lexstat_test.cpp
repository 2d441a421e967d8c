#include "komori/lexstat.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "komori/error.hpp"
#include "support/oracles.hpp"

namespace komori {
namespace {

ConceptEntry entry(std::vector<std::string> a, std::vector<std::string> b) {
  return ConceptEntry{"c", {{"A", std::move(a)}, {"B", std::move(b)}}};
}

TEST(ConceptDistance, MinimumOverVariants) {
  EXPECT_EQ(concept_distance(entry({"djwai", "dzundzu"}, {"dzundzu"}), "A", "B"),
            std::optional<double>{0.0});
  EXPECT_EQ(concept_distance(entry({}, {"yai"}), "A", "B"), std::nullopt);
  EXPECT_EQ(concept_distance(entry({"yai"}, {}), "A", "B"), std::nullopt);
  EXPECT_NEAR(*concept_distance(entry({"abc"}, {"abd"}), "A", "B"), 100.0 / 3.0, 1e-9);
  EXPECT_EQ(concept_distance(entry({"abc"}, {"abd"}), "A", "Z"), std::nullopt);
}

ConceptList list_of(std::vector<LanguageId> langs, std::vector<ConceptEntry> entries) {
  return ConceptList{"toy", std::move(langs), std::move(entries)};
}

TEST(LanguageDistance, MeanOverAttestedPairs) {
  const auto list = list_of({"A", "B"}, {
      ConceptEntry{"one", {{"A", {"abcde"}}, {"B", {"abcdx"}}}},   // 20
      ConceptEntry{"two", {{"A", {"abcde"}}, {"B", {"abcxy"}}}},   // 40
      ConceptEntry{"three", {{"A", {"abcde"}}, {"B", {}}}},
  });
  const auto d = language_distance(list, "A", "B");
  EXPECT_NEAR(d.value, 30.0, 1e-12);
  EXPECT_EQ(d.support, 2u);
}

TEST(LanguageDistance, IdenticalListsAreZero) {
  const auto list = list_of({"A", "B"}, {
      ConceptEntry{"one", {{"A", {"mimi"}}, {"B", {"mimi"}}}},
      ConceptEntry{"two", {{"A", {"wewe"}}, {"B", {"wewe"}}}},
  });
  const auto d = language_distance(list, "A", "B");
  EXPECT_EQ(d.value, 0.0);
  EXPECT_EQ(d.support, 2u);
}

TEST(LanguageDistance, Errors) {
  const auto list = list_of({"A", "B"}, {ConceptEntry{"one", {{"A", {"mimi"}}, {"B", {}}}}});
  EXPECT_THROW(language_distance(list, "A", "B"), NoComparablePairs);
  EXPECT_THROW(language_distance(list, "A", "C"), UnknownLanguage);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(DistanceMatrix, ToyFixtureMatchesFrozenTsv) {
  std::ifstream in(KOMORI_TEST_DATA_DIR "/toy_concepts.tsv");
  const auto matrix = distance_matrix(read_concept_list(in, "toy"));
  std::ostringstream out;
  write_matrix_tsv(out, matrix);
  EXPECT_EQ(out.str(), slurp(KOMORI_TEST_DATA_DIR "/toy_matrix_expected.tsv"));
  EXPECT_EQ(matrix.support(1, 0), 5u);
  EXPECT_EQ(matrix.support(2, 0), 4u);
  EXPECT_EQ(matrix.support(2, 1), 4u);
}

TEST(DistanceMatrix, RepeatedLanguageIsZeroOffDiagonal) {
  const auto list = list_of({"sw", "sw2"}, {
      ConceptEntry{"egg", {{"sw", {"yai"}}, {"sw2", {"yai"}}}},
      ConceptEntry{"dog", {{"sw", {"mbwa"}}, {"sw2", {"mbwa"}}}},
  });
  const auto m = distance_matrix(list);
  EXPECT_EQ(m.value(0, 1), 0.0);
  EXPECT_EQ(m.value(1, 0), 0.0);
}

TEST(DistanceMatrix, Errors) {
  const auto empty_column = list_of({"sw", "zdj"}, {
      ConceptEntry{"egg", {{"sw", {"yai"}}, {"zdj", {}}}},
      ConceptEntry{"dog", {{"sw", {"mbwa"}}, {"zdj", {}}}},
  });
  try {
    distance_matrix(empty_column);
    FAIL();
  } catch (const NoComparablePairs& e) {
    EXPECT_EQ(e.first(), "zdj");
    EXPECT_EQ(e.second(), "sw");
  }
  EXPECT_THROW(distance_matrix(list_of({"sw"}, {})), DomainError);
}

ConceptList random_list(std::mt19937_64& rng, std::size_t n_langs, std::size_t n_concepts) {
  ConceptList list;
  list.name = "random";
  for (std::size_t l = 0; l < n_langs; ++l) list.languages.push_back("L" + std::to_string(l));
  std::bernoulli_distribution missing(0.25);
  std::uniform_int_distribution<int> n_variants(1, 3);
  for (std::size_t c = 0; c < n_concepts; ++c) {
    ConceptEntry e{"c" + std::to_string(c), {}};
    for (const auto& lang : list.languages) {
      auto& forms = e.forms[lang];
      // The first concept is attested everywhere so every pair has support.
      if (c > 0 && missing(rng)) continue;
      for (int v = n_variants(rng); v > 0; --v) {
        forms.push_back(testing::random_word(rng, "abmuz", 1, 7));
      }
    }
    list.entries.push_back(std::move(e));
  }
  return list;
}

double oracle_concept_distance(const ConceptEntry& e, const LanguageId& a, const LanguageId& b,
                               bool& present) {
  const auto& x = e.forms.at(a);
  const auto& y = e.forms.at(b);
  present = !x.empty() && !y.empty();
  double best = 100.0;
  for (const auto& u : x) {
    for (const auto& v : y) {
      best = std::min(best, 100.0 * static_cast<double>(testing::levenshtein_oracle(u, v)) /
                                static_cast<double>(std::max(u.size(), v.size())));
    }
  }
  return best;
}

TEST(DistanceMatrixProperty, SymmetryDiagonalAndImputation) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const auto list = random_list(rng, 4, 15);
    const auto m = distance_matrix(list);
    for (std::size_t i = 0; i < m.size(); ++i) {
      ASSERT_EQ(m.value(i, i), 0.0);
      for (std::size_t j = 0; j < m.size(); ++j) {
        ASSERT_EQ(m.value(i, j), m.value(j, i));
        ASSERT_EQ(m.support(i, j), m.support(j, i));
        ASSERT_GE(m.value(i, j), 0.0);
        ASSERT_LE(m.value(i, j), 100.0);
        if (i == j) continue;

        // Impute every missing pair with the attested mean, then average all.
        std::vector<std::optional<double>> per_concept;
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto& e : list.entries) {
          bool present = false;
          const double d = oracle_concept_distance(e, list.languages[i], list.languages[j], present);
          per_concept.push_back(present ? std::optional<double>(d) : std::nullopt);
          if (present) {
            sum += d;
            ++count;
          }
        }
        const double attested_mean = sum / static_cast<double>(count);
        double imputed_sum = 0.0;
        for (const auto& d : per_concept) imputed_sum += d.value_or(attested_mean);
        ASSERT_NEAR(m.value(i, j), imputed_sum / static_cast<double>(per_concept.size()), 1e-9);
        ASSERT_EQ(m.support(i, j), count);
      }
    }
  }
}

TEST(DistanceMatrixProperty, RemovingConceptsNeverRaisesSupport) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    auto list = random_list(rng, 3, 12);
    const auto before = distance_matrix(list);
    list.entries.pop_back();
    const auto after = distance_matrix(list);
    for (std::size_t i = 0; i < before.size(); ++i) {
      for (std::size_t j = 0; j < before.size(); ++j) {
        ASSERT_LE(after.support(i, j), before.support(i, j));
      }
    }
  }
}

TEST(DistanceMatrixProperty, PermutationInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto list = random_list(rng, 4, 15);
    const auto base = distance_matrix(list);

    auto shuffled = list;
    std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
    std::shuffle(shuffled.languages.begin(), shuffled.languages.end(), rng);
    const auto permuted = distance_matrix(shuffled);

    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = 0; j < base.size(); ++j) {
        const auto pi = *permuted.index_of(base.languages()[i]);
        const auto pj = *permuted.index_of(base.languages()[j]);
        ASSERT_EQ(base.value(i, j), permuted.value(pi, pj));
        ASSERT_EQ(base.support(i, j), permuted.support(pi, pj));
      }
    }
  }
}

}  // namespace
}  // namespace komori

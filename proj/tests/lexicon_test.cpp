#include "komori/lexicon.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "komori/error.hpp"

namespace komori {
namespace {

using Variants = std::vector<std::string>;

TEST(LoadConceptList, VariantsAndMissingCells) {
  const std::vector<TableRow> rows{
      {2, {"egg", "yai", "djwai|dzundzu"}},
      {3, {"dog", "", "mbwa"}},
  };
  const ConceptList list = load_concept_list("toy", rows, {"sw", "zdj"});
  ASSERT_EQ(list.entries.size(), 2u);
  EXPECT_EQ(list.entries[0].gloss, "egg");
  EXPECT_EQ(list.entries[0].forms.at("sw"), Variants{"yai"});
  EXPECT_EQ(list.entries[0].forms.at("zdj"), (Variants{"djwai", "dzundzu"}));
  EXPECT_TRUE(list.entries[1].forms.at("sw").empty());
  EXPECT_EQ(list.entries[1].forms.at("zdj"), Variants{"mbwa"});
}

TEST(LoadConceptList, NormalizesVariants) {
  const std::vector<TableRow> rows{{2, {"cow", "Ng’ombe | NG'OMBE||", "ng'ombe"}}};
  const ConceptList list = load_concept_list("toy", rows, {"sw", "zdj"});
  EXPECT_EQ(list.entries[0].forms.at("sw"), Variants{"ng'ombe"});
}

TEST(LoadConceptList, DuplicateGlossNamesLine) {
  const std::vector<TableRow> rows{{2, {"egg", "yai", "djwai"}}, {3, {"egg", "yai", "dzundzu"}}};
  try {
    load_concept_list("toy", rows, {"sw", "zdj"});
    FAIL() << "expected DuplicateGloss";
  } catch (const DuplicateGloss& e) {
    EXPECT_EQ(e.gloss(), "egg");
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadConceptList, MalformedRows) {
  const std::vector<TableRow> short_row{{4, {"egg", "yai"}}};
  EXPECT_THROW(load_concept_list("toy", short_row, {"sw", "zdj"}), MalformedRow);
  const std::vector<TableRow> no_gloss{{2, {"  ", "yai", "djwai"}}};
  EXPECT_THROW(load_concept_list("toy", no_gloss, {"sw", "zdj"}), MalformedRow);
  const std::vector<TableRow> phrase{{2, {"egg", "yai bichi", "djwai"}}};
  EXPECT_THROW(load_concept_list("toy", phrase, {"sw", "zdj"}), MalformedRow);
}

TEST(ReadConceptList, ParsesTsvWithBomAndCrlf) {
  std::istringstream in("\xEF\xBB\xBFgloss\tsw\tzdj\r\negg\tyai\tdjwai|dzundzu\r\n\r\ndog\t\tmbwa\r\n");
  const ConceptList list = read_concept_list(in, "toy");
  EXPECT_EQ(list.languages, (std::vector<LanguageId>{"sw", "zdj"}));
  ASSERT_EQ(list.entries.size(), 2u);
  EXPECT_EQ(list.entries[1].gloss, "dog");
}

TEST(ReadConceptList, BadHeaders) {
  std::istringstream empty("");
  EXPECT_THROW(read_concept_list(empty, "x"), MalformedRow);
  std::istringstream no_gloss("word\tsw\n");
  EXPECT_THROW(read_concept_list(no_gloss, "x"), MalformedRow);
  std::istringstream dup("gloss\tsw\tsw\n");
  EXPECT_THROW(read_concept_list(dup, "x"), MalformedRow);
}

TEST(ReadConceptList, ErrorsCarrySourceLine) {
  std::istringstream in("gloss\tsw\tzdj\negg\tyai\tdjwai\nfish\tsamaki\nfire\tmoto\tmoto\n");
  try {
    read_concept_list(in, "x");
    FAIL();
  } catch (const MalformedRow& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ReadConceptList, CommittedFixtureLoads) {
  std::ifstream in(KOMORI_TEST_DATA_DIR "/toy_concepts.tsv");
  const ConceptList list = read_concept_list(in, "toy");
  EXPECT_EQ(list.languages.size(), 3u);
  EXPECT_EQ(list.entries.size(), 5u);
  EXPECT_EQ(list.entries[0].forms.at("zdj"), (Variants{"djwai", "dzundzu"}));
}

ConceptList random_list(std::mt19937_64& rng) {
  const std::vector<LanguageId> langs{"sw", "zdj", "ndz", "mwa"};
  std::uniform_int_distribution<int> variants(0, 3);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> letter(0, 4);
  std::vector<TableRow> rows;
  for (int c = 0; c < 12; ++c) {
    TableRow row{static_cast<std::size_t>(c + 2), {"concept " + std::to_string(c)}};
    for (std::size_t l = 0; l < langs.size(); ++l) {
      std::string cell;
      for (int v = variants(rng); v > 0; --v) {
        if (!cell.empty()) cell += '|';
        for (int i = len(rng); i > 0; --i) cell += static_cast<char>("abkmu"[letter(rng)]);
      }
      row.cells.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  return load_concept_list("random", rows, langs);
}

TEST(ConceptListProperty, SerializationRoundTrips) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const ConceptList list = random_list(rng);
    std::stringstream buffer;
    write_concept_list(buffer, list);
    ASSERT_EQ(read_concept_list(buffer, "random"), list);
  }
}

TEST(Coverage, Counts) {
  const std::vector<TableRow> rows{
      {2, {"a", "x", "x"}}, {3, {"b", "x", ""}}, {4, {"c", "x", "x"}}, {5, {"d", "x", "x"}}};
  const ConceptList list = load_concept_list("toy", rows, {"sw", "zdj"});
  EXPECT_DOUBLE_EQ(coverage(list, "sw"), 1.0);
  EXPECT_DOUBLE_EQ(coverage(list, "zdj"), 0.75);
  EXPECT_THROW(coverage(list, "fr"), UnknownLanguage);

  const std::vector<TableRow> none{{2, {"a", "", "x"}}, {3, {"b", "", "x"}}};
  EXPECT_DOUBLE_EQ(coverage(load_concept_list("toy", none, {"sw", "zdj"}), "sw"), 0.0);
}

TEST(CoverageProperty, AddingAVariantNeverLowersCoverage) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    ConceptList list = random_list(rng);
    for (const auto& lang : list.languages) {
      const double before = coverage(list, lang);
      auto& entry = list.entries[trial % list.entries.size()];
      entry.forms[lang].push_back("zz");
      ASSERT_GE(coverage(list, lang), before);
    }
  }
}

TEST(Lexicon, ReadsAndWritesSortedWords) {
  std::istringstream in("Mimi\nwewe\n\nmimi\nng’ombe dume\n");
  const Lexicon lexicon = read_lexicon(in, "zdj");
  EXPECT_EQ(lexicon.words, (std::set<std::string>{"dume", "mimi", "ng'ombe", "wewe"}));
  std::ostringstream out;
  write_lexicon(out, lexicon);
  EXPECT_EQ(out.str(), "dume\nmimi\nng'ombe\nwewe\n");
}

}  // namespace
}  // namespace komori

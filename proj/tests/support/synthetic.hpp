#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "support/oracles.hpp"

namespace komori::testing {

/// Random lowercase lexicon of exactly `size` distinct words.
inline std::set<std::string> synthetic_lexicon(std::mt19937_64& rng, std::size_t size,
                                               std::size_t min_len = 3, std::size_t max_len = 9) {
  std::set<std::string> words;
  while (words.size() < size) words.insert(random_word(rng, "abdegikmnosuwyz", min_len, max_len));
  return words;
}

/// Sentences mixing lexicon words, lightly mutated lexicon words, and
/// unrelated noise, so that coverage varies across lines.
inline std::vector<std::string> synthetic_corpus(std::mt19937_64& rng,
                                                 const std::set<std::string>& lexicon,
                                                 std::size_t lines, std::size_t min_tokens,
                                                 std::size_t max_tokens) {
  const std::vector<std::string> pool(lexicon.begin(), lexicon.end());
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> length(min_tokens, max_tokens);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> letter(0, 25);
  std::vector<std::string> corpus;
  corpus.reserve(lines);
  for (std::size_t i = 0; i < lines; ++i) {
    // Per-line bias: some lines are mostly lexicon words, some mostly noise.
    const int bias = kind(rng);
    std::string sentence;
    for (std::size_t t = length(rng); t > 0; --t) {
      std::string word;
      const int k = kind(rng);
      if (k < bias) {
        word = pool[pick(rng)];
        if (k % 3 == 0 && word.size() > 2) {
          std::uniform_int_distribution<std::size_t> pos(0, word.size() - 1);
          word[pos(rng)] = static_cast<char>('a' + letter(rng));
        }
      } else {
        word = random_word(rng, "cfhjlpqrtvx", 2, 8);
      }
      if (!sentence.empty()) sentence += ' ';
      sentence += word;
    }
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

}  // namespace komori::testing

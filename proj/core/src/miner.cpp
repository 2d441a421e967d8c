#include "komori/miner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "komori/text_norm.hpp"
#include "komori/utf8.hpp"

namespace komori {
namespace {

std::size_t worker_count(std::size_t requested, std::size_t work) {
  std::size_t n = requested == 0 ? std::thread::hardware_concurrency() : requested;
  return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(work, 1));
}

// Runs fn(i) for i in [0, n) over contiguous chunks. Each index is touched
// by exactly one worker, so fn may write slot i of a presized vector.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
  const std::size_t workers = worker_count(threads, n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

// Tokens of each line; ill-formed UTF-8 lines get none.
std::vector<std::vector<std::string>> tokenize_corpus(std::span<const std::string> corpus,
                                                      std::size_t threads) {
  std::vector<std::vector<std::string>> tokens(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    if (!utf8::is_valid(corpus[i])) return;
    tokens[i] = normalize(corpus[i]).surfaces();
  });
  return tokens;
}

FilterRecord make_record(std::size_t line_no, const std::string& original,
                         std::size_t token_count, std::vector<WordMatch> matches,
                         const FilterConfig& cfg) {
  FilterRecord r;
  r.line_no = line_no;
  r.original = original;
  r.tokens = token_count;
  r.matched = matches.size();
  r.coverage = token_count == 0
                   ? 0.0
                   : static_cast<double>(r.matched) / static_cast<double>(token_count);
  r.retained = token_count >= cfg.min_tokens && r.coverage >= cfg.coverage_threshold;
  r.matches = std::move(matches);
  return r;
}

void finish_stats(FilterResult& result) {
  result.stats.lines = result.records.size();
  result.stats.retained = static_cast<std::size_t>(
      std::count_if(result.records.begin(), result.records.end(),
                    [](const FilterRecord& r) { return r.retained; }));
}

}  // namespace

void FilterConfig::validate() const {
  if (!(coverage_threshold >= 0.0 && coverage_threshold <= 1.0)) {
    throw std::invalid_argument("coverage threshold must be within [0, 1]");
  }
  if (!(similarity_threshold >= 0.0 && similarity_threshold <= 100.0)) {
    throw std::invalid_argument("similarity threshold must be within [0, 100]");
  }
  if (min_tokens < 1) throw std::invalid_argument("min_tokens must be at least 1");
}

FilterResult filter_exact(std::span<const std::string> corpus, const Lexicon& lexicon,
                          const FilterConfig& cfg, std::size_t first_line) {
  cfg.validate();
  const auto tokens = tokenize_corpus(corpus, cfg.threads);

  FilterResult result;
  result.records.resize(corpus.size());
  parallel_for(corpus.size(), cfg.threads, [&](std::size_t i) {
    std::vector<WordMatch> matches;
    for (const auto& token : tokens[i]) {
      if (lexicon.contains(token)) matches.push_back({token, token, 100.0});
    }
    result.records[i] = make_record(first_line + i, corpus[i], tokens[i].size(),
                                    std::move(matches), cfg);
  });

  std::unordered_map<std::string_view, char> distinct;
  for (const auto& line : tokens) {
    result.stats.total_tokens += line.size();
    for (const auto& t : line) distinct.emplace(t, 0);
  }
  result.stats.unique_tokens = distinct.size();
  finish_stats(result);
  return result;
}

FilterResult filter_fuzzy(std::span<const std::string> corpus, const BkTree& index,
                          const FilterConfig& cfg, std::size_t first_line) {
  cfg.validate();
  const auto tokens = tokenize_corpus(corpus, cfg.threads);

  // Distinct tokens in first-seen order, each looked up once.
  std::unordered_map<std::string_view, std::size_t> slot;
  std::vector<std::string_view> distinct;
  std::size_t total = 0;
  for (const auto& line : tokens) {
    total += line.size();
    for (const auto& t : line) {
      if (slot.emplace(t, distinct.size()).second) distinct.push_back(t);
    }
  }

  std::vector<std::optional<FuzzyMatch>> lookups(distinct.size());
  std::vector<QueryStats> query_stats(distinct.size());
  parallel_for(distinct.size(), cfg.threads, [&](std::size_t i) {
    lookups[i] = index.best_similar(distinct[i], cfg.similarity_threshold, &query_stats[i]);
  });

  FilterResult result;
  result.records.resize(corpus.size());
  parallel_for(corpus.size(), cfg.threads, [&](std::size_t i) {
    std::vector<WordMatch> matches;
    for (const auto& token : tokens[i]) {
      const auto& hit = lookups[slot.at(token)];
      if (hit) matches.push_back({token, hit->match, hit->similarity});
    }
    result.records[i] = make_record(first_line + i, corpus[i], tokens[i].size(),
                                    std::move(matches), cfg);
  });

  result.stats.total_tokens = total;
  result.stats.unique_tokens = distinct.size();
  result.stats.cache_hits = total - distinct.size();
  for (const auto& s : query_stats) result.stats.distance_evaluations += s.distance_evaluations;
  finish_stats(result);
  return result;
}

std::vector<std::string> retained_only(std::span<const FilterRecord> records) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (r.retained) out.push_back(r.original);
  }
  return out;
}

}  // namespace komori

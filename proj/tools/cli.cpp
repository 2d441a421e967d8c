#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "komori/error.hpp"
#include "komori/fuzzy_index.hpp"
#include "komori/lexicon.hpp"
#include "komori/lexstat.hpp"
#include "komori/lines.hpp"
#include "komori/metrics.hpp"
#include "komori/miner.hpp"
#include "komori/text_norm.hpp"

namespace komori::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = KOMORI_VERSION;

/// Bad flags, unreadable inputs, unwritable outputs.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("komori", std::move(sink));
  logger->set_pattern("[%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("KOMORI_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  return logger;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return in;
}

std::vector<std::string> read_file_lines(const std::string& path) {
  auto in = open_input(path);
  return read_lines(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
  if (!file.flush()) throw UsageError("failed writing '" + path + "'");
}

/// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

/// A corpus file: plain one-sentence-per-line text, or a TSV whose `column`
/// holds the sentence. In TSV mode `rows` keeps every original line.
struct Corpus {
  std::optional<std::string> header;
  std::vector<std::string> rows;
  std::vector<std::string> sentences;
  std::size_t first_line = 1;
};

Corpus load_corpus(const std::string& path, const std::string& column) {
  Corpus corpus;
  corpus.rows = read_file_lines(path);
  if (column.empty()) {
    corpus.sentences = corpus.rows;
    return corpus;
  }
  if (corpus.rows.empty()) throw UsageError("'" + path + "' has no header row");
  corpus.header = corpus.rows.front();
  corpus.rows.erase(corpus.rows.begin());
  corpus.first_line = 2;

  const auto names = split_tabs(*corpus.header);
  const auto it = std::find(names.begin(), names.end(), column);
  if (it == names.end()) throw UsageError("column '" + column + "' not found in '" + path + "'");
  const auto index = static_cast<std::size_t>(it - names.begin());

  corpus.sentences.reserve(corpus.rows.size());
  for (const auto& row : corpus.rows) {
    auto cells = split_tabs(row);
    corpus.sentences.push_back(index < cells.size() ? std::move(cells[index]) : std::string());
  }
  return corpus;
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

json record_json(const FilterRecord& r) {
  json matches = json::array();
  for (const auto& m : r.matches) matches.push_back(json::array({m.token, m.word, m.similarity}));
  json j;
  j["line_no"] = r.line_no;
  j["retained"] = r.retained;
  j["coverage"] = round6(r.coverage);
  j["tokens"] = r.tokens;
  j["matched"] = r.matched;
  j["matches"] = std::move(matches);
  return j;
}

json report_header(const std::string& subcommand, json inputs) {
  json report;
  report["subcommand"] = subcommand;
  report["tool_version"] = kVersion;
  report["inputs"] = std::move(inputs);
  return report;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct MatrixArgs {
  std::string list_file;
  std::string out;
  std::string name;
};

int cmd_distance_matrix(const MatrixArgs& args, std::ostream& out, spdlog::logger& log) {
  Stopwatch clock;
  auto in = open_input(args.list_file);
  const std::string name =
      args.name.empty() ? std::filesystem::path(args.list_file).stem().string() : args.name;
  const ConceptList list = read_concept_list(in, name);
  const DistanceMatrix matrix = distance_matrix(list);

  std::ostringstream tsv;
  write_matrix_tsv(tsv, matrix);
  emit(args.out, tsv.str(), out);
  log.info("{}: {} concepts, {} languages", name, list.entries.size(), list.languages.size());

  if (!args.out.empty()) {
    json report = report_header("distance-matrix", {{"list_file", args.list_file}});
    report["config"] = {{"list_name", name}};
    json coverage_by_lang = json::object();
    for (const auto& lang : list.languages) coverage_by_lang[lang] = coverage(list, lang);
    json support = json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        support.push_back({{"a", matrix.languages()[i]},
                           {"b", matrix.languages()[j]},
                           {"support", matrix.support(i, j)}});
      }
    }
    report["counts"] = {{"concepts", list.entries.size()},
                        {"languages", list.languages.size()},
                        {"coverage", std::move(coverage_by_lang)},
                        {"pair_support", std::move(support)}};
    report["wall_time_s"] = clock.seconds();
    write_file(args.out + ".report.json", dump(report));
  }
  return kExitOk;
}

struct LexiconArgs {
  std::string corpus_file;
  std::string out;
  std::string column;
};

int cmd_build_lexicon(const LexiconArgs& args, std::ostream& out, spdlog::logger& log) {
  Stopwatch clock;
  const Corpus corpus = load_corpus(args.corpus_file, args.column);
  std::vector<NormalizedText> texts;
  texts.reserve(corpus.sentences.size());
  std::size_t token_count = 0;
  for (const auto& s : corpus.sentences) {
    texts.push_back(normalize(s));
    token_count += texts.back().tokens.size();
  }
  const Lexicon lexicon = word_set(texts);

  std::ostringstream body;
  write_lexicon(body, lexicon);
  emit(args.out, body.str(), out);
  log.info("{} lines, {} tokens, {} types", corpus.sentences.size(), token_count, lexicon.size());

  if (!args.out.empty()) {
    json report = report_header("build-lexicon", {{"corpus_file", args.corpus_file}});
    report["config"] = {{"column", args.column}};
    report["counts"] = {{"lines_in", corpus.sentences.size()},
                        {"tokens", token_count},
                        {"types", lexicon.size()}};
    report["wall_time_s"] = clock.seconds();
    write_file(args.out + ".report.json", dump(report));
  }
  return kExitOk;
}

struct FilterArgs {
  std::string corpus_file;
  std::string lexicon_file;
  std::string out;
  std::string column;
  bool dedup = false;
  FilterConfig cfg;
};

int cmd_filter(const FilterArgs& args, std::ostream& /*out*/, spdlog::logger& log) {
  Stopwatch clock;
  args.cfg.validate();
  const Corpus corpus = load_corpus(args.corpus_file, args.column);
  auto lexicon_in = open_input(args.lexicon_file);
  const Lexicon lexicon = read_lexicon(lexicon_in);

  FilterResult result;
  if (args.cfg.mode == FilterMode::fuzzy) {
    const BkTree index = BkTree::build(lexicon);
    result = filter_fuzzy(corpus.sentences, index, args.cfg, corpus.first_line);
  } else {
    result = filter_exact(corpus.sentences, lexicon, args.cfg, corpus.first_line);
  }

  std::ostringstream retained;
  std::ostringstream records;
  std::size_t written = 0;
  std::unordered_set<std::string> seen;
  if (corpus.header) retained << *corpus.header << '\n';
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& record = result.records[i];
    records << record_json(record).dump() << '\n';
    if (!record.retained) continue;
    if (args.dedup && !seen.insert(record.original).second) continue;
    retained << corpus.rows[i] << '\n';
    ++written;
  }
  write_file(args.out + ".retained.txt", retained.str());
  write_file(args.out + ".records.jsonl", records.str());

  const auto& stats = result.stats;
  log.info("{} of {} lines retained ({} written)", stats.retained, stats.lines, written);

  const bool fuzzy = args.cfg.mode == FilterMode::fuzzy;
  json report = report_header(fuzzy ? "filter-fuzzy" : "filter-exact",
                              {{"corpus_file", args.corpus_file},
                               {"lexicon_file", args.lexicon_file}});
  json config = {{"coverage", args.cfg.coverage_threshold}};
  if (fuzzy) config["similarity"] = args.cfg.similarity_threshold;
  config["min_tokens"] = args.cfg.min_tokens;
  config["column"] = args.column;
  config["dedup"] = args.dedup;
  config["threads"] = args.cfg.threads;
  report["config"] = std::move(config);
  json counts = {{"lines_in", stats.lines},
                 {"lines_retained", stats.retained},
                 {"lines_written", written},
                 {"lexicon_words", lexicon.size()},
                 {"tokens", stats.total_tokens},
                 {"unique_tokens", stats.unique_tokens},
                 {"cache_hits", stats.cache_hits}};
  if (fuzzy) counts["distance_evaluations"] = stats.distance_evaluations;
  report["counts"] = std::move(counts);
  report["wall_time_s"] = clock.seconds();
  write_file(args.out + ".report.json", dump(report));
  return kExitOk;
}

struct EvalArgs {
  std::string refs_file;
  std::string hyps_file;
  std::string out;
  std::vector<std::string> metrics;
  bool raw = false;
};

MetricSet parse_metrics(const std::vector<std::string>& names) {
  if (names.empty()) return {};
  MetricSet set{false, false, false, false, false, false};
  for (const auto& name : names) {
    if (name == "wer") set.wer = true;
    else if (name == "cer") set.cer = true;
    else if (name == "rouge1") set.rouge1 = true;
    else if (name == "rouge2") set.rouge2 = true;
    else if (name == "rougeL") set.rougeL = true;
    else if (name == "rougeLsum") set.rougeLsum = true;
    else throw UsageError("unknown metric '" + name + "'");
  }
  return set;
}

int cmd_eval(const EvalArgs& args, std::ostream& out, spdlog::logger& log) {
  Stopwatch clock;
  const MetricSet which = parse_metrics(args.metrics);
  const auto refs = read_file_lines(args.refs_file);
  const auto hyps = read_file_lines(args.hyps_file);
  const EvalScores scores = evaluate(refs, hyps, which, args.raw);

  json result = json::object();
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) result[key] = *v;
  };
  put("wer", scores.wer);
  put("cer", scores.cer);
  put("rouge1", scores.rouge1);
  put("rouge2", scores.rouge2);
  put("rougeL", scores.rougeL);
  put("rougeLsum", scores.rougeLsum);
  result["n_pairs"] = scores.n_pairs;
  emit(args.out, dump(result), out);
  log.info("scored {} pairs", scores.n_pairs);

  if (!args.out.empty()) {
    json report = report_header("eval", {{"refs_file", args.refs_file},
                                         {"hyps_file", args.hyps_file}});
    report["config"] = {{"metrics", args.metrics}, {"raw", args.raw}};
    report["counts"] = {{"pairs", scores.n_pairs}};
    report["wall_time_s"] = clock.seconds();
    write_file(args.out + ".report.json", dump(report));
  }
  return kExitOk;
}

void add_filter_options(CLI::App& cmd, FilterArgs& args, bool fuzzy) {
  cmd.add_option("corpus", args.corpus_file, "Corpus, one sentence per line (or TSV with --column)")
      ->required();
  cmd.add_option("lexicon", args.lexicon_file, "Target-language lexicon, one word per line")
      ->required();
  cmd.add_option("--out", args.out, "Output prefix for .retained.txt, .records.jsonl, .report.json")
      ->required();
  cmd.add_option("--coverage", args.cfg.coverage_threshold,
                 "Minimum fraction of covered tokens (default 0.80)")
      ->check(CLI::Range(0.0, 1.0));
  if (fuzzy) {
    cmd.add_option("--similarity", args.cfg.similarity_threshold,
                   "Minimum word similarity in percent (default 80)")
        ->check(CLI::Range(0.0, 100.0));
  }
  cmd.add_option("--min-tokens", args.cfg.min_tokens, "Shortest sentence that can be retained")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--column", args.column, "TSV mode: filter on this column, keep whole rows");
  cmd.add_flag("--dedup", args.dedup, "Write each retained sentence once");
  cmd.add_option("--threads", args.cfg.threads, "Worker threads (0 = all cores)");
  args.cfg.mode = fuzzy ? FilterMode::fuzzy : FilterMode::exact;
  args.cfg.threads = 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto logger = make_logger(err);

  CLI::App app{"Lexical-distance corpus mining for low-resource languages", "komori"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  MatrixArgs matrix_args;
  auto* matrix_cmd = app.add_subcommand("distance-matrix", "Pairwise lexical distances of a concept list");
  matrix_cmd->add_option("list", matrix_args.list_file, "Concept-list TSV")->required();
  matrix_cmd->add_option("--out", matrix_args.out, "Matrix TSV path (stdout if omitted)");
  matrix_cmd->add_option("--name", matrix_args.name, "List name (defaults to the file stem)");

  LexiconArgs lexicon_args;
  auto* lexicon_cmd = app.add_subcommand("build-lexicon", "Unique normalized words of a corpus");
  lexicon_cmd->add_option("corpus", lexicon_args.corpus_file, "Corpus, one sentence per line")
      ->required();
  lexicon_cmd->add_option("--out", lexicon_args.out, "Lexicon path (stdout if omitted)");
  lexicon_cmd->add_option("--column", lexicon_args.column, "TSV mode: read this column");

  FilterArgs exact_args;
  auto* exact_cmd = app.add_subcommand("filter-exact", "Keep sentences covered by exact lexicon hits");
  add_filter_options(*exact_cmd, exact_args, false);

  FilterArgs fuzzy_args;
  auto* fuzzy_cmd = app.add_subcommand("filter-fuzzy", "Keep sentences covered by similar lexicon words");
  add_filter_options(*fuzzy_cmd, fuzzy_args, true);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "WER, CER and ROUGE of parallel reference/hypothesis files");
  eval_cmd->add_option("refs", eval_args.refs_file, "References, one per line")->required();
  eval_cmd->add_option("hyps", eval_args.hyps_file, "Hypotheses, one per line")->required();
  eval_cmd->add_option("--metrics", eval_args.metrics,
                       "Subset of wer,cer,rouge1,rouge2,rougeL,rougeLsum (default all)")
      ->delimiter(',');
  eval_cmd->add_flag("--raw", eval_args.raw, "Score whitespace tokens without normalization");
  eval_cmd->add_option("--out", eval_args.out, "JSON path (stdout if omitted)");

  std::vector<std::string> argv_storage = args;
  if (argv_storage.empty()) argv_storage.emplace_back("komori");
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }

  try {
    if (*matrix_cmd) return cmd_distance_matrix(matrix_args, out, *logger);
    if (*lexicon_cmd) return cmd_build_lexicon(lexicon_args, out, *logger);
    if (*exact_cmd) return cmd_filter(exact_args, out, *logger);
    if (*fuzzy_cmd) return cmd_filter(fuzzy_args, out, *logger);
    if (*eval_cmd) return cmd_eval(eval_args, out, *logger);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace komori::cli

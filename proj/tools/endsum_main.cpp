#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "endsum/corpus.hpp"
#include "endsum/errors.hpp"
#include "endsum/format.hpp"
#include "endsum/manifest.hpp"
#include "endsum/rouge.hpp"
#include "endsum/scoring.hpp"
#include "endsum/simgraph.hpp"
#include "endsum/summarizer.hpp"
#include "endsum/version.hpp"
#include "json.hpp"

namespace {

using namespace endsum;

struct PreprocessFlags {
  std::string keyword_mode = "stopword";
  std::string lemmas;
  std::string stopwords;
  std::string pos_lexicon;

  NormalizerConfig to_config() const {
    NormalizerConfig config;
    if (keyword_mode == "pos") {
      config.keyword_mode = KeywordMode::kPosFilter;
    } else if (keyword_mode == "stopword") {
      config.keyword_mode = KeywordMode::kStopwordFallback;
    } else {
      throw ConfigError("unknown keyword mode: " + keyword_mode);
    }
    if (!lemmas.empty()) config.lemma_lexicon = lemmas;
    if (!stopwords.empty()) config.stopword_list = stopwords;
    if (!pos_lexicon.empty()) config.pos_lexicon = pos_lexicon;
    return config;
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--keyword-mode", keyword_mode,
                    "Keyword extraction mode: pos | stopword")
        ->check(CLI::IsMember({"pos", "stopword"}))
        ->capture_default_str();
    cmd->add_option("--lemmas", lemmas, "Lemma lexicon (token<TAB>lemma)");
    cmd->add_option("--stopwords", stopwords,
                    "Stopword list, one per line (default: built-in)");
    cmd->add_option("--pos-lexicon", pos_lexicon,
                    "POS lexicon (token<TAB>NOUN|VERB|ADJ|OTHER)");
  }

  void echo_params(RunManifest& manifest) const {
    const auto path_or_null = [](const std::string& p) {
      return p.empty() ? std::string("null") : nlohmann::json(p).dump();
    };
    manifest.params.emplace_back("keyword_mode", nlohmann::json(keyword_mode).dump());
    manifest.params.emplace_back("lemmas", path_or_null(lemmas));
    manifest.params.emplace_back("stopwords", path_or_null(stopwords));
    manifest.params.emplace_back("pos_lexicon", path_or_null(pos_lexicon));
  }
};

std::string json_number(double v) { return nlohmann::json(v).dump(); }

Corpus load_corpus(const std::string& path, const Normalizer& normalizer) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file: " + path);
  ParseResult result = parse_corpus(in, normalizer);
  if (result.skipped.total() > 0) {
    std::cerr << "note: skipped " << result.skipped.retweets << " retweet(s), "
              << result.skipped.empty << " empty, " << result.skipped.keywordless
              << " keywordless\n";
  }
  return std::move(result.corpus);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

// A candidate file is either the summarizer's JSONL output or plain text.
// JSONL is recognized by its first non-blank line being a JSON object with
// a string "text" field; the texts are then evaluated in file order.
std::string candidate_text(const std::string& path) {
  std::string raw = read_file(path);
  std::istringstream in(raw);
  std::string line;
  std::optional<bool> jsonl;
  std::vector<std::string> texts;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!jsonl.has_value()) {
      nlohmann::json probe = nlohmann::json::parse(line, nullptr, false);
      jsonl = probe.is_object() && probe.contains("text") && probe["text"].is_string();
      if (!*jsonl) break;
    }
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() || !record.contains("text") ||
        !record["text"].is_string()) {
      throw ParseError("candidate line " + std::to_string(line_no) +
                       ": malformed record");
    }
    texts.push_back(record["text"].get<std::string>());
  }
  if (!jsonl.value_or(false)) return raw;
  std::string joined;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i) joined += '\n';
    joined += texts[i];
  }
  return joined;
}

std::string manifest_path_for(const std::string& output, const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  return std::filesystem::path(output).replace_extension(".manifest.json").string();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw ConfigError("failed writing output file: " + path);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct SummarizeOptions {
  std::string input;
  std::string output;
  std::uint32_t length = 0;
  double alpha = 0.5, beta = 0.5, gamma = 0.5;
  std::string algorithm = "endsum";
  std::string dump_overlaps;
  std::string dump_scores;
  std::string manifest_path;
  PreprocessFlags preprocess;
};

void cmd_summarize(const SummarizeOptions& opts) {
  Timer timer;
  EnDConfig config{opts.alpha, opts.beta, opts.gamma, opts.length};
  config.validate();

  Normalizer normalizer(opts.preprocess.to_config());
  Corpus corpus = load_corpus(opts.input, normalizer);
  if (corpus.size() == 0) throw DataError("no candidates after preprocessing");

  SummaryState summary;
  if (opts.algorithm == "endsum") {
    OverlapTable table = build_overlap_table(corpus);
    if (!opts.dump_overlaps.empty()) {
      std::ofstream dump(opts.dump_overlaps, std::ios::binary);
      if (!dump) throw ConfigError("cannot open output file: " + opts.dump_overlaps);
      table.write_csv(dump);
    }
    EntropyScores entropies = entropy_scores(table, config.gamma);
    if (!opts.dump_scores.empty()) {
      std::ofstream dump(opts.dump_scores, std::ios::binary);
      if (!dump) throw ConfigError("cannot open output file: " + opts.dump_scores);
      write_entropy_csv(dump, entropies, corpus);
    }
    summary = summarize(corpus, entropies, config);
  } else {
    summary = baseline_frequency(corpus, config.summary_length);
  }

  std::ostringstream out;
  write_summary_jsonl(out, summary, corpus);
  write_text_file(opts.output, out.str());

  RunManifest manifest;
  manifest.command = "summarize";
  manifest.inputs.push_back({"input", opts.input, sha256_file(opts.input)});
  manifest.params.emplace_back("algorithm", nlohmann::json(opts.algorithm).dump());
  manifest.params.emplace_back("alpha", json_number(opts.alpha));
  manifest.params.emplace_back("beta", json_number(opts.beta));
  manifest.params.emplace_back("gamma", json_number(opts.gamma));
  manifest.params.emplace_back("length", std::to_string(opts.length));
  opts.preprocess.echo_params(manifest);
  manifest.duration_ms = timer.elapsed_ms();
  write_text_file(manifest_path_for(opts.output, opts.manifest_path),
                  manifest.to_json() + "\n");
}

struct EvaluateOptions {
  std::string candidate;
  std::string reference;
  std::string manifest_path;
  PreprocessFlags preprocess;
};

void cmd_evaluate(const EvaluateOptions& opts) {
  Timer timer;
  Normalizer normalizer(opts.preprocess.to_config());
  std::string cand = candidate_text(opts.candidate);
  std::string ref = read_file(opts.reference);
  RougeReport report = evaluate(cand, ref, normalizer);
  std::cout << to_json(report) << "\n";

  if (!opts.manifest_path.empty()) {
    RunManifest manifest;
    manifest.command = "evaluate";
    manifest.inputs.push_back({"candidate", opts.candidate, sha256_file(opts.candidate)});
    manifest.inputs.push_back({"reference", opts.reference, sha256_file(opts.reference)});
    opts.preprocess.echo_params(manifest);
    manifest.duration_ms = timer.elapsed_ms();
    write_text_file(opts.manifest_path, manifest.to_json() + "\n");
  }
}

struct SweepOptions {
  std::string input;
  std::string reference;
  std::string output;
  std::uint32_t length = 0;
  std::vector<double> alphas{0.5};
  std::vector<double> betas{0.5};
  std::vector<double> gammas{0.5};
  std::string manifest_path;
  PreprocessFlags preprocess;
};

void cmd_sweep(const SweepOptions& opts) {
  Timer timer;
  if (opts.alphas.empty() || opts.betas.empty() || opts.gammas.empty()) {
    throw ConfigError("sweep grid must not be empty");
  }
  Normalizer normalizer(opts.preprocess.to_config());
  Corpus corpus = load_corpus(opts.input, normalizer);
  if (corpus.size() == 0) throw DataError("no candidates after preprocessing");
  std::string ref = read_file(opts.reference);

  OverlapTable table = build_overlap_table(corpus);
  std::map<double, EntropyScores> entropy_cache;

  std::ostringstream csv;
  csv << "alpha,beta,gamma,L,rouge1_f1,rouge2_f1,rougeL_f1\n";
  for (double alpha : opts.alphas) {
    for (double beta : opts.betas) {
      for (double gamma : opts.gammas) {
        EnDConfig config{alpha, beta, gamma, opts.length};
        config.validate();
        auto cached = entropy_cache.find(gamma);
        if (cached == entropy_cache.end()) {
          cached = entropy_cache.emplace(gamma, entropy_scores(table, gamma)).first;
        }
        SummaryState summary = summarize(corpus, cached->second, config);
        std::string cand;
        for (std::size_t i = 0; i < summary.picks.size(); ++i) {
          if (i) cand += '\n';
          cand += corpus.tweets[summary.picks[i].index].raw_text;
        }
        RougeReport report = evaluate(cand, ref, normalizer);
        csv << json_number(alpha) << ',' << json_number(beta) << ','
            << json_number(gamma) << ',' << opts.length << ','
            << fixed6(report.rouge1.f1) << ',' << fixed6(report.rouge2.f1) << ','
            << fixed6(report.rougeL.f1) << '\n';
      }
    }
  }

  if (opts.output.empty()) {
    std::cout << csv.str();
  } else {
    write_text_file(opts.output, csv.str());
  }

  if (!opts.output.empty() || !opts.manifest_path.empty()) {
    RunManifest manifest;
    manifest.command = "sweep";
    manifest.inputs.push_back({"input", opts.input, sha256_file(opts.input)});
    manifest.inputs.push_back({"reference", opts.reference, sha256_file(opts.reference)});
    const auto grid = [](const std::vector<double>& values) {
      std::string out = "[";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += json_number(values[i]);
      }
      return out + "]";
    };
    manifest.params.emplace_back("alphas", grid(opts.alphas));
    manifest.params.emplace_back("betas", grid(opts.betas));
    manifest.params.emplace_back("gammas", grid(opts.gammas));
    manifest.params.emplace_back("length", std::to_string(opts.length));
    opts.preprocess.echo_params(manifest);
    manifest.duration_ms = timer.elapsed_ms();
    write_text_file(manifest_path_for(opts.output, opts.manifest_path),
                    manifest.to_json() + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-and-diversity extractive summarizer for short-message corpora"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + std::string(kVersion));
  app.require_subcommand(1);

  SummarizeOptions sum_opts;
  CLI::App* sum = app.add_subcommand("summarize", "Select a summary from a JSONL corpus");
  sum->add_option("--input", sum_opts.input, "Corpus JSONL file")->required();
  sum->add_option("--output", sum_opts.output, "Summary JSONL output path")->required();
  sum->add_option("--length", sum_opts.length, "Number of tweets to select")->required();
  sum->add_option("--alpha", sum_opts.alpha, "Entropy weight")->capture_default_str();
  sum->add_option("--beta", sum_opts.beta, "Diversity weight")->capture_default_str();
  sum->add_option("--gamma", sum_opts.gamma, "Entropy exponent")->capture_default_str();
  sum->add_option("--algorithm", sum_opts.algorithm,
                  "Selection algorithm: endsum | baseline")
      ->check(CLI::IsMember({"endsum", "baseline"}))
      ->capture_default_str();
  sum->add_option("--dump-overlaps", sum_opts.dump_overlaps,
                  "Write the overlap table as CSV to this path");
  sum->add_option("--dump-scores", sum_opts.dump_scores,
                  "Write per-tweet entropies as CSV to this path");
  sum->add_option("--manifest", sum_opts.manifest_path,
                  "Manifest path (default: output path with .manifest.json)");
  sum_opts.preprocess.add_flags(sum);

  EvaluateOptions eval_opts;
  CLI::App* eval =
      app.add_subcommand("evaluate", "Report ROUGE-1/2/L F1 against a reference");
  eval->add_option("--candidate", eval_opts.candidate,
                   "Candidate summary (JSONL output or plain text)")
      ->required();
  eval->add_option("--reference", eval_opts.reference,
                   "Reference summary, plain text, one tweet per line")
      ->required();
  eval->add_option("--manifest", eval_opts.manifest_path,
                   "Also write a run manifest to this path");
  eval_opts.preprocess.add_flags(eval);

  SweepOptions sweep_opts;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Grid-run summarize+evaluate over α, β, γ");
  sweep->add_option("--input", sweep_opts.input, "Corpus JSONL file")->required();
  sweep->add_option("--reference", sweep_opts.reference,
                    "Reference summary, plain text")
      ->required();
  sweep->add_option("--length", sweep_opts.length, "Number of tweets to select")
      ->required();
  sweep->add_option("--alphas", sweep_opts.alphas, "Comma-separated entropy weights")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--betas", sweep_opts.betas, "Comma-separated diversity weights")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--gammas", sweep_opts.gammas, "Comma-separated entropy exponents")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--output", sweep_opts.output,
                    "CSV output path (default: standard output)");
  sweep->add_option("--manifest", sweep_opts.manifest_path,
                    "Manifest path (default: CSV path with .manifest.json)");
  sweep_opts.preprocess.add_flags(sweep);

  try {
    app.parse(argc, argv);
    if (sum->parsed()) cmd_summarize(sum_opts);
    if (eval->parsed()) cmd_evaluate(eval_opts);
    if (sweep->parsed()) cmd_sweep(sweep_opts);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

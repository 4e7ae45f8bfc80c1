#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gramtok/analysis.hpp"
#include "gramtok/codec.hpp"
#include "gramtok/corpus.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "gramtok/vocab.hpp"
#include "json.hpp"

#ifndef GRAMTOK_VERSION
#define GRAMTOK_VERSION "0.0.0"
#endif

namespace gramtok::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Config {
  std::string language;
  std::string base_path;
  std::string corpus_path;
  std::string vocab_path;
  std::string pairs_path;
  std::string in_path;
  std::string out_path;
  std::string report_path;
  std::string record_id;
  std::string mode = "exact";
  std::size_t shard_size = 1000;
  std::size_t threshold = 50;
  std::optional<double> cut;
  bool chisq = false;
  bool verbose = false;
};

class Streams {
 public:
  Streams(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  std::string read_input(const std::string& path) {
    if (!path.empty() && path != "-") return read_file(path);
    return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
  }

  void write_output(const std::string& path, std::string_view bytes) {
    if (!path.empty() && path != "-") {
      write_file(path, bytes);
      return;
    }
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out_.flush();
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

MergedVocab load_checked_vocab(const Config& cfg) {
  MergedVocab vocab = load_vocab(cfg.vocab_path);
  if (vocab.language() != cfg.language) {
    throw Error(ErrorCode::FormatError, "vocab language '" + vocab.language() +
                                            "' does not match configured language '" +
                                            cfg.language + "'");
  }
  return vocab;
}

std::string first_nonblank_line(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw Error(ErrorCode::FormatError, "no sequence object in input");
}

int cmd_build_vocab(const Config& cfg, Streams& io) {
  const Language& language = Language::get(cfg.language);
  BaseVocab base = load_base_vocab(cfg.base_path);
  auto records = load_corpus(cfg.corpus_path);
  std::vector<SourceText> sources;
  sources.reserve(records.size());
  for (auto& r : records) sources.push_back(std::move(r.source));
  RuleVocabBuild built = build_rule_vocab(sources, language);
  if (cfg.verbose) {
    io.err() << "parsed " << built.files_parsed << " files, skipped " << built.files_skipped
             << '\n';
  }
  MergedVocab vocab = merge_vocabs(std::move(base), std::move(built.rules), cfg.language);
  save_vocab(vocab, cfg.out_path);

  ordered_json summary;
  summary["m"] = vocab.m();
  summary["s"] = vocab.s();
  summary["k"] = vocab.k();
  summary["total"] = vocab.total();
  summary["files_parsed"] = built.files_parsed;
  summary["files_skipped"] = built.files_skipped;
  io.out() << summary.dump() << '\n';
  return kExitOk;
}

int cmd_encode(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  EncodeMode mode = parse_mode(cfg.mode);
  SourceText source{io.read_input(cfg.in_path), cfg.in_path.empty() ? "<stdin>" : cfg.in_path};
  std::string id = !cfg.record_id.empty() ? cfg.record_id
                   : cfg.in_path.empty()  ? std::string("stdin")
                                          : cfg.in_path;
  TokenSequence seq = encode(source, vocab, mode);
  io.write_output(cfg.out_path, sequence_to_json(id, seq) + "\n");
  return kExitOk;
}

int cmd_decode(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  auto [id, seq] = sequence_from_json(first_nonblank_line(io.read_input(cfg.in_path)), vocab);
  SourceText source = decode(seq, vocab);
  io.write_output(cfg.out_path, source.bytes);
  return kExitOk;
}

int cmd_explain(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  auto [id, seq] = sequence_from_json(first_nonblank_line(io.read_input(cfg.in_path)), vocab);
  io.write_output(cfg.out_path, explain(seq.ids, vocab));
  return kExitOk;
}

int cmd_check_prefix(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  auto [id, seq] = sequence_from_json(first_nonblank_line(io.read_input(cfg.in_path)), vocab);
  PrefixState state = is_valid_prefix(seq.ids, vocab);
  ordered_json doc;
  doc["status"] = std::string(to_string(state.status));
  doc["position"] = state.position;
  doc["invalid_position"] =
      state.invalid_position ? ordered_json(*state.invalid_position) : ordered_json(nullptr);
  doc["reason"] = state.reason;
  doc["stack"] = state.stack;
  io.write_output(cfg.out_path, doc.dump() + "\n");
  return kExitOk;
}

int cmd_filter_corpus(const Config& cfg, Streams& io) {
  const Language& language = Language::get(cfg.language);
  FilterResult result = filter_corpus(load_corpus(cfg.corpus_path), language);
  write_file(cfg.out_path, corpus_to_jsonl(result.records));
  io.write_output(cfg.report_path, filter_report_to_json(result.report));
  return kExitOk;
}

int cmd_export_dataset(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  ExportConfig config{cfg.out_path, cfg.shard_size, parse_mode(cfg.mode)};
  auto records = load_corpus(cfg.corpus_path);
  ExportManifest manifest = export_dataset(records, vocab, config);
  if (cfg.verbose) {
    io.err() << "wrote " << manifest.records << " records in " << manifest.shards.size()
             << " shards\n";
  }
  io.out() << manifest_to_json(manifest);
  return kExitOk;
}

int cmd_stats(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  auto records = load_corpus(cfg.corpus_path);
  io.write_output(cfg.out_path, stats_to_json(corpus_stats(records, vocab)));
  return kExitOk;
}

int cmd_analyze_pairs(const Config& cfg, Streams& io) {
  MergedVocab vocab = load_checked_vocab(cfg);
  BaseVocab base = cfg.base_path.empty() ? vocab.base() : load_base_vocab(cfg.base_path);
  auto pairs = load_pairs_jsonl(cfg.pairs_path);
  EDReport report = pair_report(pairs, vocab, base, cfg.threshold);
  for (const auto& r : report.pairs) {
    if (!r.distance) io.err() << "warning: pair '" << r.problem_id << "' skipped: " << r.error << '\n';
  }
  std::optional<ContingencyResult> contingency;
  std::optional<ChiSquareResult> chi;
  if (cfg.chisq) {
    contingency = build_contingency(report, pairs, cfg.cut);
    chi = chi_square(contingency->table);
  }
  io.write_output(cfg.out_path, report_to_json(report, contingency, chi));
  return kExitOk;
}

}  // namespace

std::string version() { return GRAMTOK_VERSION; }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("GRAMTOK_LANGUAGE"); env && *env) {
    cfg.language = env;
  } else {
    cfg.language = "python";
  }

  CLI::App app{"Grammar-rule code tokenizer"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.add_option("--language", cfg.language, "Grammar (overrides GRAMTOK_LANGUAGE)");
  app.add_flag("-v,--verbose", cfg.verbose, "Report progress on stderr");

  auto mode_check = CLI::IsMember({"exact", "canonical"});

  auto* build = app.add_subcommand("build-vocab", "Build the merged vocabulary from a corpus");
  build->add_option("--base", cfg.base_path, "Base vocab JSON")->required()->check(CLI::ExistingFile);
  build->add_option("--corpus", cfg.corpus_path, "Corpus directory or JSONL")->required()->check(CLI::ExistingPath);
  build->add_option("--out", cfg.out_path, "Output vocab file")->required();

  auto* enc = app.add_subcommand("encode", "Encode one source file into a sequence object");
  enc->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  enc->add_option("--mode", cfg.mode)->check(mode_check);
  enc->add_option("--in", cfg.in_path, "Source file (default stdin)");
  enc->add_option("--out", cfg.out_path, "Output file (default stdout)");
  enc->add_option("--id", cfg.record_id, "Sequence id");

  auto* dec = app.add_subcommand("decode", "Decode an exact-mode sequence object to source");
  dec->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  dec->add_option("--in", cfg.in_path);
  dec->add_option("--out", cfg.out_path);

  auto* expl = app.add_subcommand("explain", "List the tokens of a sequence object");
  expl->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  expl->add_option("--in", cfg.in_path);
  expl->add_option("--out", cfg.out_path);

  auto* prefix = app.add_subcommand("check-prefix", "Validate a (partial) sequence object");
  prefix->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  prefix->add_option("--in", cfg.in_path);
  prefix->add_option("--out", cfg.out_path);

  auto* filter = app.add_subcommand("filter-corpus", "Deduplicate and syntax-filter a corpus");
  filter->add_option("--corpus", cfg.corpus_path)->required()->check(CLI::ExistingPath);
  filter->add_option("--out", cfg.out_path, "Filtered JSONL")->required();
  filter->add_option("--report", cfg.report_path, "Report file (default stdout)");

  auto* exp = app.add_subcommand("export-dataset", "Encode a filtered corpus into shards");
  exp->add_option("--corpus", cfg.corpus_path)->required()->check(CLI::ExistingPath);
  exp->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  exp->add_option("--mode", cfg.mode)->check(mode_check);
  exp->add_option("--shard-size", cfg.shard_size)->check(CLI::PositiveNumber);
  exp->add_option("--out-dir", cfg.out_path)->required();

  auto* stats = app.add_subcommand("stats", "Length statistics for a corpus");
  stats->add_option("--corpus", cfg.corpus_path)->required()->check(CLI::ExistingPath);
  stats->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  stats->add_option("--out", cfg.out_path);

  auto* pairs = app.add_subcommand("analyze-pairs", "Edit distances over error/correct pairs");
  pairs->add_option("--pairs", cfg.pairs_path)->required()->check(CLI::ExistingFile);
  pairs->add_option("--vocab", cfg.vocab_path)->required()->check(CLI::ExistingFile);
  pairs->add_option("--base", cfg.base_path, "Base vocab for token-level ED (default: vocab's base)")
      ->check(CLI::ExistingFile);
  pairs->add_option("--threshold", cfg.threshold, "Token ED upper bound (exclusive)");
  pairs->add_option("--cut", cfg.cut, "Amplification cut (default: median)");
  pairs->add_flag("--chisq", cfg.chisq, "Add contingency table and chi-square test");
  pairs->add_option("--out", cfg.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Streams io(in, out, err);
  try {
    Language::get(cfg.language);
    if (build->parsed()) return cmd_build_vocab(cfg, io);
    if (enc->parsed()) return cmd_encode(cfg, io);
    if (dec->parsed()) return cmd_decode(cfg, io);
    if (expl->parsed()) return cmd_explain(cfg, io);
    if (prefix->parsed()) return cmd_check_prefix(cfg, io);
    if (filter->parsed()) return cmd_filter_corpus(cfg, io);
    if (exp->parsed()) return cmd_export_dataset(cfg, io);
    if (stats->parsed()) return cmd_stats(cfg, io);
    if (pairs->parsed()) return cmd_analyze_pairs(cfg, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace gramtok::cli

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gramtok/codec.hpp"
#include "gramtok/syntax.hpp"
#include "gramtok/vocab.hpp"

namespace gramtok {

struct CorpusRecord {
  std::string id;
  SourceText source;
};

/// Every regular file under `dir`, sorted by relative path (which is the id).
std::vector<CorpusRecord> load_corpus_dir(const std::filesystem::path& dir);
/// One `{"id": str, "content": str}` object per line; blank lines skipped.
std::vector<CorpusRecord> load_corpus_jsonl(const std::filesystem::path& file);
/// Directory or JSONL file, chosen by what `path` is. Throws FormatError on
/// duplicate ids.
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path);
/// Inverse of load_corpus_jsonl. Throws FormatError for non-UTF-8 content.
std::string corpus_to_jsonl(std::span<const CorpusRecord> records);

/// input_count == duplicate_count + syntax_rejected_count + kept_count.
struct FilterReport {
  std::size_t input_count = 0;
  std::size_t duplicate_count = 0;
  std::size_t syntax_rejected_count = 0;
  std::size_t kept_count = 0;
  /// Ids of every removed record, in input order.
  std::vector<std::string> rejected_ids;

  bool operator==(const FilterReport&) const = default;
};

struct FilterResult {
  std::vector<CorpusRecord> records;
  FilterReport report;
};

/// Keeps the first occurrence of each exact byte string.
FilterResult dedup(std::vector<CorpusRecord> records);
/// Keeps records that parse without errors.
FilterResult syntax_filter(std::vector<CorpusRecord> records,
                           const Language& language = Language::python());
/// dedup followed by syntax_filter with one combined report.
FilterResult filter_corpus(std::vector<CorpusRecord> records,
                           const Language& language = Language::python());

std::string filter_report_to_json(const FilterReport& report);

struct ExportConfig {
  std::filesystem::path out_dir;
  std::size_t shard_size = 1000;
  EncodeMode mode = EncodeMode::canonical;
};

struct ExportManifest {
  std::vector<std::string> shards;
  std::size_t records = 0;
  EncodeMode mode = EncodeMode::canonical;
  std::string vocab_digest;
};

/// Writes `shard-NNNNN.jsonl` files (sequence lines in input order) and
/// `manifest.json` into config.out_dir. Encoding errors are rethrown with
/// the offending record id in the message.
ExportManifest export_dataset(std::span<const CorpusRecord> records,
                              const MergedVocab& vocab, const ExportConfig& config);
std::string manifest_to_json(const ExportManifest& manifest);

struct RecordStats {
  std::string id;
  std::size_t base_tokens = 0;
  std::size_t grammar_canonical = 0;
  std::size_t grammar_exact = 0;
  std::size_t internal_nodes = 0;
  std::optional<double> canonical_ratio;  // canonical / base
  std::optional<double> exact_ratio;      // exact / base
};

struct Summary {
  double mean = 0;
  double median = 0;
  std::size_t max = 0;
};

struct StatsReport {
  std::vector<RecordStats> records;
  std::optional<Summary> base_tokens;
  std::optional<Summary> grammar_canonical;
  std::optional<Summary> grammar_exact;
  /// Ratios of corpus totals.
  std::optional<double> canonical_ratio;
  std::optional<double> exact_ratio;
  std::size_t distinct_rules_seen = 0;
  std::size_t rule_vocab_size = 0;
  std::optional<double> rule_coverage;
};

/// Summary of a list of counts; nullopt when empty.
std::optional<Summary> summarize(std::span<const std::size_t> values);

StatsReport corpus_stats(std::span<const CorpusRecord> records, const MergedVocab& vocab);
std::string stats_to_json(const StatsReport& report);

}  // namespace gramtok

#include "gramtok/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_set>

#include "gramtok/bpe.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "gramtok/parallel.hpp"
#include "json.hpp"

namespace gramtok {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void check_unique_ids(const std::vector<CorpusRecord>& records) {
  std::unordered_set<std::string_view> ids;
  for (const auto& r : records) {
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::FormatError, "duplicate record id '" + r.id + "'");
    }
  }
}

std::string dump_strict(const ordered_json& doc, int indent = -1) {
  try {
    return doc.dump(indent);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("cannot serialize: ") + e.what());
  }
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json summary_json(const std::optional<Summary>& s) {
  if (!s) return nullptr;
  ordered_json out;
  out["mean"] = s->mean;
  out["median"] = s->median;
  out["max"] = s->max;
  return out;
}

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string with_record(const std::string& id, const Error& e) {
  std::string what = e.what();
  auto colon = what.find(": ");
  std::string detail = colon == std::string::npos ? what : what.substr(colon + 2);
  return "record '" + id + "': " + detail;
}

}  // namespace

std::vector<CorpusRecord> load_corpus_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::IoError, dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::vector<std::pair<std::string, fs::path>> named;
  named.reserve(files.size());
  for (const auto& f : files) named.emplace_back(fs::relative(f, dir).generic_string(), f);
  std::sort(named.begin(), named.end());

  std::vector<CorpusRecord> records;
  records.reserve(named.size());
  for (auto& [id, path] : named) {
    records.push_back({id, SourceText{read_file(path), path.string()}});
  }
  return records;
}

std::vector<CorpusRecord> load_corpus_jsonl(const std::filesystem::path& file) {
  std::istringstream in(read_file(file));
  std::vector<CorpusRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::FormatError,
                  file.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc.contains("content") ||
        !doc.at("id").is_string() || !doc.at("content").is_string()) {
      throw Error(ErrorCode::FormatError, file.string() + ":" + std::to_string(line_no) +
                                              ": expected {\"id\": str, \"content\": str}");
    }
    auto id = doc.at("id").get<std::string>();
    records.push_back({id, SourceText{doc.at("content").get<std::string>(), id}});
  }
  check_unique_ids(records);
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) return load_corpus_dir(path);
  return load_corpus_jsonl(path);
}

std::string corpus_to_jsonl(std::span<const CorpusRecord> records) {
  std::string out;
  for (const auto& r : records) {
    ordered_json doc;
    doc["id"] = r.id;
    doc["content"] = r.source.bytes;
    out += dump_strict(doc);
    out += '\n';
  }
  return out;
}

FilterResult dedup(std::vector<CorpusRecord> records) {
  FilterResult result;
  result.report.input_count = records.size();
  std::unordered_set<std::string> seen;
  for (auto& r : records) {
    if (!seen.insert(r.source.bytes).second) {
      ++result.report.duplicate_count;
      result.report.rejected_ids.push_back(r.id);
      continue;
    }
    result.records.push_back(std::move(r));
  }
  result.report.kept_count = result.records.size();
  return result;
}

FilterResult syntax_filter(std::vector<CorpusRecord> records, const Language& language) {
  auto valid = parallel_map(records.size(), [&](std::size_t i) -> char {
    return validate_syntax(records[i].source, language) ? 1 : 0;
  });
  FilterResult result;
  result.report.input_count = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!valid[i]) {
      ++result.report.syntax_rejected_count;
      result.report.rejected_ids.push_back(records[i].id);
      continue;
    }
    result.records.push_back(std::move(records[i]));
  }
  result.report.kept_count = result.records.size();
  return result;
}

FilterResult filter_corpus(std::vector<CorpusRecord> records, const Language& language) {
  std::vector<std::string> input_order;
  input_order.reserve(records.size());
  for (const auto& r : records) input_order.push_back(r.id);

  FilterResult first = dedup(std::move(records));
  FilterResult second = syntax_filter(std::move(first.records), language);

  FilterResult result;
  result.records = std::move(second.records);
  result.report.input_count = first.report.input_count;
  result.report.duplicate_count = first.report.duplicate_count;
  result.report.syntax_rejected_count = second.report.syntax_rejected_count;
  result.report.kept_count = second.report.kept_count;

  std::unordered_set<std::string> rejected(first.report.rejected_ids.begin(),
                                           first.report.rejected_ids.end());
  rejected.insert(second.report.rejected_ids.begin(), second.report.rejected_ids.end());
  for (const auto& id : input_order) {
    if (rejected.count(id)) result.report.rejected_ids.push_back(id);
  }
  return result;
}

std::string filter_report_to_json(const FilterReport& report) {
  ordered_json doc;
  doc["input_count"] = report.input_count;
  doc["duplicate_count"] = report.duplicate_count;
  doc["syntax_rejected_count"] = report.syntax_rejected_count;
  doc["kept_count"] = report.kept_count;
  doc["rejected_ids"] = report.rejected_ids;
  return dump_strict(doc, 2) + "\n";
}

ExportManifest export_dataset(std::span<const CorpusRecord> records,
                              const MergedVocab& vocab, const ExportConfig& config) {
  if (config.shard_size == 0) {
    throw Error(ErrorCode::FormatError, "shard size must be positive");
  }
  auto lines = parallel_map(records.size(), [&](std::size_t i) {
    try {
      return sequence_to_json(records[i].id, encode(records[i].source, vocab, config.mode));
    } catch (const Error& e) {
      throw Error(e.code(), with_record(records[i].id, e), e.position());
    }
  });

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + config.out_dir.string());

  ExportManifest manifest;
  manifest.records = records.size();
  manifest.mode = config.mode;
  manifest.vocab_digest = vocab_digest(vocab);
  for (std::size_t start = 0; start < lines.size(); start += config.shard_size) {
    char name[32];
    std::snprintf(name, sizeof name, "shard-%05zu.jsonl", manifest.shards.size());
    std::string body;
    for (std::size_t i = start; i < std::min(lines.size(), start + config.shard_size); ++i) {
      body += lines[i];
      body += '\n';
    }
    write_file(config.out_dir / name, body);
    manifest.shards.emplace_back(name);
  }
  write_file(config.out_dir / "manifest.json", manifest_to_json(manifest));
  return manifest;
}

std::string manifest_to_json(const ExportManifest& manifest) {
  ordered_json doc;
  doc["shards"] = manifest.shards;
  doc["records"] = manifest.records;
  doc["mode"] = std::string(to_string(manifest.mode));
  doc["vocab_digest"] = manifest.vocab_digest;
  return doc.dump(2) + "\n";
}

std::optional<Summary> summarize(std::span<const std::size_t> values) {
  if (values.empty()) return std::nullopt;
  std::vector<std::size_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Summary s;
  double total = 0;
  for (auto v : sorted) total += static_cast<double>(v);
  s.mean = total / static_cast<double>(sorted.size());
  std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 ? static_cast<double>(sorted[mid])
                               : (static_cast<double>(sorted[mid - 1]) + sorted[mid]) / 2.0;
  s.max = sorted.back();
  return s;
}

StatsReport corpus_stats(std::span<const CorpusRecord> records, const MergedVocab& vocab) {
  struct PerRecord {
    RecordStats stats;
    std::vector<Production> productions;
  };
  const Language& language = Language::get(vocab.language());
  auto per = parallel_map(records.size(), [&](std::size_t i) {
    const auto& r = records[i];
    PerRecord out;
    out.stats.id = r.id;
    try {
      SyntaxTree tree = parse(r.source, language);
      out.stats.base_tokens = bpe_segment(r.source.bytes, vocab.base()).size();
      out.stats.grammar_canonical = encode_tree(tree, vocab, EncodeMode::canonical).size();
      out.stats.grammar_exact = encode_tree(tree, vocab, EncodeMode::exact).size();
      out.stats.internal_nodes = count_internal_nodes(tree);
      out.productions = internal_productions_preorder(tree);
    } catch (const Error& e) {
      throw Error(e.code(), with_record(r.id, e), e.position());
    }
    out.stats.canonical_ratio = ratio(out.stats.grammar_canonical, out.stats.base_tokens);
    out.stats.exact_ratio = ratio(out.stats.grammar_exact, out.stats.base_tokens);
    return out;
  });

  StatsReport report;
  std::vector<std::size_t> base, canonical, exact;
  std::set<Production> seen;
  std::size_t base_total = 0, canonical_total = 0, exact_total = 0;
  for (auto& p : per) {
    base.push_back(p.stats.base_tokens);
    canonical.push_back(p.stats.grammar_canonical);
    exact.push_back(p.stats.grammar_exact);
    base_total += p.stats.base_tokens;
    canonical_total += p.stats.grammar_canonical;
    exact_total += p.stats.grammar_exact;
    seen.insert(p.productions.begin(), p.productions.end());
    report.records.push_back(std::move(p.stats));
  }
  report.base_tokens = summarize(base);
  report.grammar_canonical = summarize(canonical);
  report.grammar_exact = summarize(exact);
  report.canonical_ratio = ratio(canonical_total, base_total);
  report.exact_ratio = ratio(exact_total, base_total);
  report.distinct_rules_seen = seen.size();
  report.rule_vocab_size = vocab.k();
  report.rule_coverage = ratio(seen.size(), vocab.k());
  return report;
}

std::string stats_to_json(const StatsReport& report) {
  ordered_json doc;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec;
    rec["id"] = r.id;
    rec["base_tokens"] = r.base_tokens;
    rec["grammar_canonical"] = r.grammar_canonical;
    rec["grammar_exact"] = r.grammar_exact;
    rec["internal_nodes"] = r.internal_nodes;
    rec["canonical_ratio"] = optional_number(r.canonical_ratio);
    rec["exact_ratio"] = optional_number(r.exact_ratio);
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  doc["base_tokens"] = summary_json(report.base_tokens);
  doc["grammar_canonical"] = summary_json(report.grammar_canonical);
  doc["grammar_exact"] = summary_json(report.grammar_exact);
  doc["canonical_ratio"] = optional_number(report.canonical_ratio);
  doc["exact_ratio"] = optional_number(report.exact_ratio);
  doc["distinct_rules_seen"] = report.distinct_rules_seen;
  doc["rule_vocab_size"] = report.rule_vocab_size;
  doc["rule_coverage"] = optional_number(report.rule_coverage);
  return dump_strict(doc, 2) + "\n";
}

}  // namespace gramtok

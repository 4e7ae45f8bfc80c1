#include "gramtok/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gramtok/bpe.hpp"
#include "gramtok/codec.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "gramtok/parallel.hpp"
#include "json.hpp"

namespace gramtok {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kBucketWidth = 5;
constexpr std::size_t kBucketCount = 10;

template <typename Seq>
std::size_t edit_distance(const Seq& a, const Seq& b) {
  // keep the row over the shorter sequence
  if (a.size() < b.size()) return edit_distance(b, a);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

std::vector<HistogramBucket> empty_buckets() {
  std::vector<HistogramBucket> out;
  for (std::size_t i = 0; i < kBucketCount; ++i) {
    out.push_back({i * kBucketWidth, i * kBucketWidth + kBucketWidth - 1, 0});
  }
  return out;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json buckets_json(const std::vector<HistogramBucket>& buckets) {
  ordered_json out = ordered_json::array();
  for (const auto& b : buckets) {
    ordered_json entry;
    entry["lo"] = b.lo;
    entry["hi"] = b.hi;
    entry["count"] = b.count;
    out.push_back(std::move(entry));
  }
  return out;
}

ContingencyResult finish_contingency(std::vector<Observation> observations,
                                     std::optional<double> cut) {
  if (observations.size() < 4) {
    throw Error(ErrorCode::InsufficientPairs,
                "need at least 4 measurable pairs, have " +
                    std::to_string(observations.size()));
  }
  std::vector<long long> amps;
  amps.reserve(observations.size());
  for (const auto& o : observations) amps.push_back(o.amplification);
  ContingencyResult result;
  result.cut = cut ? *cut : median(amps);
  result.table = tabulate(observations, result.cut);
  result.pairs_used = observations.size();
  return result;
}

void require_outcomes(std::span<const PairRecord> pairs) {
  for (const auto& p : pairs) {
    if (!p.outcome) {
      throw Error(ErrorCode::MissingOutcome,
                  "pair '" + p.problem_id + "' has no outcome");
    }
  }
}

}  // namespace

std::size_t levenshtein(std::span<const TokenId> a, std::span<const TokenId> b) {
  return edit_distance(a, b);
}

std::size_t byte_levenshtein(std::string_view a, std::string_view b) {
  return edit_distance(a, b);
}

std::vector<PairRecord> parse_pairs_jsonl(std::string_view text) {
  std::vector<PairRecord> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto where = "pairs line " + std::to_string(line_no);
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::FormatError, where + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::FormatError, where + ": expected object");
    for (const char* key : {"problem_id", "wrong_code", "correct_code"}) {
      if (!doc.contains(key) || !doc.at(key).is_string()) {
        throw Error(ErrorCode::FormatError,
                    where + ": '" + key + "' must be a string");
      }
    }
    PairRecord p;
    p.problem_id = doc.at("problem_id").get<std::string>();
    p.error_code = {doc.at("wrong_code").get<std::string>(), p.problem_id + ":wrong"};
    p.correct_code = {doc.at("correct_code").get<std::string>(), p.problem_id + ":correct"};
    if (doc.contains("outcome") && !doc.at("outcome").is_null()) {
      if (!doc.at("outcome").is_boolean()) {
        throw Error(ErrorCode::FormatError, where + ": 'outcome' must be a boolean");
      }
      p.outcome = doc.at("outcome").get<bool>();
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<PairRecord> load_pairs_jsonl(const std::filesystem::path& path) {
  return parse_pairs_jsonl(read_file(path));
}

PairDistance pair_distances(const PairRecord& pair, const MergedVocab& vocab,
                            const BaseVocab& base) {
  if (pair.error_code.bytes.empty() || pair.correct_code.bytes.empty()) {
    throw Error(ErrorCode::SyntaxInvalid, "pair '" + pair.problem_id + "' has an empty side");
  }
  auto wrong = encode(pair.error_code, vocab, EncodeMode::canonical);
  auto correct = encode(pair.correct_code, vocab, EncodeMode::canonical);
  PairDistance d;
  d.grammar_ed = levenshtein(wrong.ids, correct.ids);
  d.token_ed = levenshtein(bpe_segment(pair.error_code.bytes, base),
                           bpe_segment(pair.correct_code.bytes, base));
  d.byte_ed = byte_levenshtein(pair.error_code.bytes, pair.correct_code.bytes);
  return d;
}

EDReport pair_report(std::span<const PairRecord> pairs, const MergedVocab& vocab,
                     const BaseVocab& base, std::size_t token_ed_threshold) {
  EDReport report;
  report.threshold = token_ed_threshold;
  report.total_pairs = pairs.size();
  report.histogram = empty_buckets();
  report.grammar_histogram = empty_buckets();

  report.pairs = parallel_map(pairs.size(), [&](std::size_t i) {
    PairResult r;
    r.problem_id = pairs[i].problem_id;
    try {
      r.distance = pair_distances(pairs[i], vocab, base);
    } catch (const Error& e) {
      r.error = e.what();
    }
    return r;
  });

  std::size_t token_sum = 0, grammar_sum = 0, byte_sum = 0;
  for (auto& r : report.pairs) {
    if (!r.distance) {
      ++report.unparseable;
      continue;
    }
    const auto& d = *r.distance;
    if (d.token_ed >= token_ed_threshold) {
      ++report.excluded_by_threshold;
      continue;
    }
    r.within_threshold = true;
    ++report.count;
    token_sum += d.token_ed;
    grammar_sum += d.grammar_ed;
    byte_sum += d.byte_ed;
    if (d.token_ed < kBucketWidth * kBucketCount) {
      ++report.histogram[d.token_ed / kBucketWidth].count;
    }
    if (d.grammar_ed < kBucketWidth * kBucketCount) {
      ++report.grammar_histogram[d.grammar_ed / kBucketWidth].count;
    } else {
      ++report.grammar_histogram_overflow;
    }
  }

  std::size_t parseable = report.total_pairs - report.unparseable;
  if (parseable > 0) {
    report.coverage = static_cast<double>(report.count) / static_cast<double>(parseable);
  }
  if (report.count > 0) {
    double n = static_cast<double>(report.count);
    report.mean_token_ed = static_cast<double>(token_sum) / n;
    report.mean_grammar_ed = static_cast<double>(grammar_sum) / n;
    report.mean_byte_ed = static_cast<double>(byte_sum) / n;
    if (token_sum > 0) {
      report.amplification = *report.mean_grammar_ed / *report.mean_token_ed;
    }
  }
  return report;
}

ChiSquareResult chi_square(const ContingencyTable& table) {
  const auto& c = table.cells;
  double rows[2] = {static_cast<double>(c[0][0] + c[0][1]),
                    static_cast<double>(c[1][0] + c[1][1])};
  double cols[2] = {static_cast<double>(c[0][0] + c[1][0]),
                    static_cast<double>(c[0][1] + c[1][1])};
  double total = rows[0] + rows[1];
  if (total == 0 || rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) {
    throw Error(ErrorCode::DegenerateTable, "contingency table has a zero margin");
  }
  ChiSquareResult result;
  result.statistic = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double expected = rows[i] * cols[j] / total;
      double diff = static_cast<double>(c[i][j]) - expected;
      result.statistic += diff * diff / expected;
    }
  }
  // chi-square(1) survival function: P(Z^2 > x) = erfc(sqrt(x / 2))
  result.p_value = std::erfc(std::sqrt(result.statistic / 2.0));
  return result;
}

double median(std::span<const long long> values) {
  if (values.empty()) return 0;
  std::vector<long long> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2) return static_cast<double>(sorted[mid]);
  return (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
}

ContingencyTable tabulate(std::span<const Observation> observations, double cut) {
  ContingencyTable table;
  for (const auto& o : observations) {
    int row = static_cast<double>(o.amplification) > cut ? 0 : 1;
    int col = o.outcome ? 0 : 1;
    ++table.cells[row][col];
  }
  return table;
}

ContingencyResult build_contingency(std::span<const PairRecord> pairs,
                                    const MergedVocab& vocab, const BaseVocab& base,
                                    std::optional<double> cut) {
  require_outcomes(pairs);
  auto distances = parallel_map(pairs.size(), [&](std::size_t i) {
    std::optional<PairDistance> d;
    try {
      d = pair_distances(pairs[i], vocab, base);
    } catch (const Error&) {
    }
    return d;
  });
  std::vector<Observation> observations;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!distances[i]) continue;
    observations.push_back({static_cast<long long>(distances[i]->grammar_ed) -
                                static_cast<long long>(distances[i]->token_ed),
                            *pairs[i].outcome});
  }
  return finish_contingency(std::move(observations), cut);
}

ContingencyResult build_contingency(const EDReport& report,
                                    std::span<const PairRecord> pairs,
                                    std::optional<double> cut) {
  if (report.pairs.size() != pairs.size()) {
    throw Error(ErrorCode::FormatError, "report and pair list differ in length");
  }
  require_outcomes(pairs);
  std::vector<Observation> observations;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& d = report.pairs[i].distance;
    if (!d) continue;
    observations.push_back({static_cast<long long>(d->grammar_ed) -
                                static_cast<long long>(d->token_ed),
                            *pairs[i].outcome});
  }
  return finish_contingency(std::move(observations), cut);
}

std::string report_to_json(const EDReport& report,
                           const std::optional<ContingencyResult>& contingency,
                           const std::optional<ChiSquareResult>& chi) {
  ordered_json doc;
  ordered_json pairs = ordered_json::array();
  for (const auto& r : report.pairs) {
    ordered_json entry;
    entry["problem_id"] = r.problem_id;
    if (r.distance) {
      entry["token_ed"] = r.distance->token_ed;
      entry["grammar_ed"] = r.distance->grammar_ed;
      entry["byte_ed"] = r.distance->byte_ed;
      entry["within_threshold"] = r.within_threshold;
    } else {
      entry["error"] = r.error;
    }
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  doc["threshold"] = report.threshold;
  doc["total_pairs"] = report.total_pairs;
  doc["unparseable"] = report.unparseable;
  doc["excluded_by_threshold"] = report.excluded_by_threshold;
  doc["count"] = report.count;
  doc["coverage"] = optional_number(report.coverage);
  doc["mean_token_ed"] = optional_number(report.mean_token_ed);
  doc["mean_grammar_ed"] = optional_number(report.mean_grammar_ed);
  doc["mean_byte_ed"] = optional_number(report.mean_byte_ed);
  doc["amplification"] = optional_number(report.amplification);
  doc["histogram"] = buckets_json(report.histogram);
  doc["grammar_histogram"] = buckets_json(report.grammar_histogram);
  doc["grammar_histogram_overflow"] = report.grammar_histogram_overflow;
  if (contingency) {
    const auto& c = contingency->table.cells;
    ordered_json table;
    table["cut"] = contingency->cut;
    table["pairs_used"] = contingency->pairs_used;
    table["table"] = {{c[0][0], c[0][1]}, {c[1][0], c[1][1]}};
    doc["contingency"] = std::move(table);
  }
  if (chi) {
    ordered_json test;
    test["statistic"] = chi->statistic;
    test["p_value"] = chi->p_value;
    doc["chi_square"] = std::move(test);
  }
  try {
    return doc.dump(2) + "\n";
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("cannot serialize report: ") + e.what());
  }
}

}  // namespace gramtok

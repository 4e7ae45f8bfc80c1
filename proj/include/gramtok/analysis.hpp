#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gramtok/syntax.hpp"
#include "gramtok/vocab.hpp"

namespace gramtok {

/// Minimal number of single-element insertions, deletions and substitutions
/// turning `a` into `b`. O(|a|·|b|) time, O(min(|a|,|b|)) memory.
std::size_t levenshtein(std::span<const TokenId> a, std::span<const TokenId> b);

/// Same distance over raw bytes.
std::size_t byte_levenshtein(std::string_view a, std::string_view b);

/// An erroneous program and its corrected version.
struct PairRecord {
  std::string problem_id;
  SourceText error_code;
  SourceText correct_code;
  /// Whether an external classifier judged the pair correctly.
  std::optional<bool> outcome;
};

/// Lines of `{"problem_id", "wrong_code", "correct_code", "outcome"?}`.
std::vector<PairRecord> load_pairs_jsonl(const std::filesystem::path& path);
std::vector<PairRecord> parse_pairs_jsonl(std::string_view text);

struct PairDistance {
  std::size_t token_ed = 0;    // over base-vocab BPE of raw bytes
  std::size_t grammar_ed = 0;  // over canonical grammar encodings
  std::size_t byte_ed = 0;     // over raw bytes
};

/// Throws SyntaxInvalid when either side fails to parse or is empty, and
/// UnknownProduction when the vocab lacks a rule.
PairDistance pair_distances(const PairRecord& pair, const MergedVocab& vocab,
                            const BaseVocab& base);

struct PairResult {
  std::string problem_id;
  std::optional<PairDistance> distance;
  /// Set when the pair could not be measured.
  std::string error;
  bool within_threshold = false;
};

struct HistogramBucket {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t count = 0;
};

/// Per-pair distances plus aggregates over pairs whose token_ed is below
/// the threshold.
struct EDReport {
  std::vector<PairResult> pairs;
  std::size_t threshold = 50;
  std::size_t total_pairs = 0;
  std::size_t unparseable = 0;
  std::size_t excluded_by_threshold = 0;
  std::size_t count = 0;  // pairs inside the threshold
  std::optional<double> coverage;  // count / parseable pairs
  std::optional<double> mean_token_ed;
  std::optional<double> mean_grammar_ed;
  std::optional<double> mean_byte_ed;
  std::optional<double> amplification;  // mean grammar / mean token
  /// Buckets [0,4], [5,9], ..., [45,49] over token_ed of restricted pairs.
  std::vector<HistogramBucket> histogram;
  /// Same buckets over grammar_ed; larger values land in the overflow count.
  std::vector<HistogramBucket> grammar_histogram;
  std::size_t grammar_histogram_overflow = 0;
};

EDReport pair_report(std::span<const PairRecord> pairs, const MergedVocab& vocab,
                     const BaseVocab& base, std::size_t token_ed_threshold = 50);

/// 2x2 counts: rows are amplification above / at-or-below the cut,
/// columns are outcome true / false.
struct ContingencyTable {
  std::array<std::array<std::size_t, 2>, 2> cells{};

  bool operator==(const ContingencyTable&) const = default;
};

struct ChiSquareResult {
  double statistic = 0;
  double p_value = 1;
};

/// Pearson statistic without continuity correction, one degree of freedom;
/// p = erfc(sqrt(statistic / 2)). Throws DegenerateTable on a zero margin.
ChiSquareResult chi_square(const ContingencyTable& table);

struct Observation {
  long long amplification = 0;
  bool outcome = false;
};

/// Counts observations into the table: row 0 when amplification > cut.
ContingencyTable tabulate(std::span<const Observation> observations, double cut);

double median(std::span<const long long> values);

struct ContingencyResult {
  ContingencyTable table;
  double cut = 0;
  std::size_t pairs_used = 0;
};

/// Amplification per pair is grammar_ed - token_ed; the default cut is its
/// median. Unmeasurable pairs are skipped. Throws MissingOutcome and
/// InsufficientPairs (fewer than 4 usable pairs).
ContingencyResult build_contingency(std::span<const PairRecord> pairs,
                                    const MergedVocab& vocab, const BaseVocab& base,
                                    std::optional<double> cut = std::nullopt);

/// Same tabulation from an existing report; `pairs` must be the input the
/// report was computed from.
ContingencyResult build_contingency(const EDReport& report,
                                    std::span<const PairRecord> pairs,
                                    std::optional<double> cut = std::nullopt);

std::string report_to_json(const EDReport& report,
                           const std::optional<ContingencyResult>& contingency = std::nullopt,
                           const std::optional<ChiSquareResult>& chi = std::nullopt);

}  // namespace gramtok

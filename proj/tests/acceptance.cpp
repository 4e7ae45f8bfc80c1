// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are pinned below.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "gramtok/analysis.hpp"
#include "gramtok/bpe.hpp"
#include "gramtok/codec.hpp"
#include "gramtok/corpus.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "support.hpp"

using namespace gramtok;

namespace {

constexpr std::size_t kMinRoundTripFiles = 200;
constexpr double kRoundTripSeconds = 10.0;
constexpr double kFigure2Factor = 2.0;
constexpr std::size_t kMinMicroPairs = 10;
constexpr double kMicroRatio = 1.5;
constexpr std::size_t kEditSampleCount = 10000;
constexpr std::size_t kChiTables = 25;
constexpr double kChiTolerance = 1e-9;
constexpr std::size_t kPrefixFixtures = 100;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome criterion_round_trip() {
  const auto& corpus = testing::fixture_corpus();
  const auto& v = testing::fixture_vocab();
  auto start = std::chrono::steady_clock::now();
  std::size_t exact = 0;
  std::string first_failure;
  for (const auto& rec : corpus) {
    try {
      if (decode(encode(rec.source, v, EncodeMode::exact), v).bytes == rec.source.bytes) {
        ++exact;
        continue;
      }
    } catch (const Error&) {
    }
    if (first_failure.empty()) first_failure = rec.id;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << exact << "/" << corpus.size() << " files byte-exact in " << secs << " s";
  if (!first_failure.empty()) d << ", first failure " << first_failure;
  return {corpus.size() >= kMinRoundTripFiles && exact == corpus.size() &&
              secs < kRoundTripSeconds,
          d.str()};
}

Outcome criterion_figure1() {
  const auto& v = testing::fixture_vocab();
  auto seq = encode(SourceText{"def get(a, b):\n    return (a + b) % 2 == 1\n", {}}, v,
                    EncodeMode::canonical);
  bool has_rule = false, has_terminal = false;
  for (auto cls : seq.classes) {
    has_rule |= cls == TokenClass::rule;
    has_terminal |= cls == TokenClass::terminal;
  }
  std::string first = !seq.ids.empty() && seq.classes[0] == TokenClass::rule
                          ? to_string(v.rule(seq.ids[0]))
                          : "<not a rule>";
  return {first == "module → function_definition" && has_rule && has_terminal,
          "first token: " + first + ", " + std::to_string(seq.size()) + " tokens"};
}

Outcome criterion_figure2() {
  auto pairs = testing::fixture_pairs("figure2.jsonl");
  auto d = pair_distances(pairs.at(0), testing::fixture_vocab(), testing::fixture_base());
  return {d.grammar_ed > d.token_ed &&
              static_cast<double>(d.grammar_ed) >= kFigure2Factor * static_cast<double>(d.token_ed),
          "token_ed " + std::to_string(d.token_ed) + ", grammar_ed " +
              std::to_string(d.grammar_ed)};
}

Outcome criterion_micro_suite() {
  auto pairs = testing::fixture_pairs("micro_suite.jsonl");
  const auto& v = testing::fixture_vocab();
  std::size_t tsum = 0, gsum = 0, measured = 0;
  std::ostringstream per;
  for (const auto& p : pairs) {
    auto d = pair_distances(p, v, testing::fixture_base());
    tsum += d.token_ed;
    gsum += d.grammar_ed;
    ++measured;
    per << " " << p.problem_id << "=" << d.token_ed << "/" << d.grammar_ed;
  }
  double ratio = tsum == 0 ? 0.0 : static_cast<double>(gsum) / static_cast<double>(tsum);
  std::ostringstream d;
  d << measured << " pairs, mean grammar/mean token = " << ratio << " (token/grammar:" << per.str()
    << ")";
  return {measured >= kMinMicroPairs && ratio >= kMicroRatio, d.str()};
}

Outcome criterion_levenshtein() {
  // every sequence of length <= 4 over {0,1,2}, all pairs
  std::vector<std::vector<std::uint32_t>> all{{}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].size() == 4) continue;
    for (std::uint32_t s = 0; s < 3; ++s) {
      auto next = all[i];
      next.push_back(s);
      all.push_back(next);
    }
  }
  std::size_t checked = 0, mismatches = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      mismatches += levenshtein(a, b) != testing::recursive_edit_distance(a, 0, b, 0);
      ++checked;
    }
  }
  // plus a random sample with lengths up to 6
  std::mt19937 rng(20240613);
  for (std::size_t n = 0; n < kEditSampleCount; ++n) {
    std::vector<std::uint32_t> a(rng() % 7), b(rng() % 7);
    for (auto& x : a) x = rng() % 3;
    for (auto& x : b) x = rng() % 3;
    mismatches += levenshtein(a, b) != testing::recursive_edit_distance(a, 0, b, 0);
    ++checked;
  }
  return {mismatches == 0, std::to_string(checked) + " pairs (" + std::to_string(all.size()) +
                               "^2 exhaustive up to length 4, " +
                               std::to_string(kEditSampleCount) + " sampled up to length 6), " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_chi_square() {
  std::mt19937 rng(7);
  double worst_stat = 0, worst_p = 0;
  std::size_t tables = 0;
  while (tables < kChiTables) {
    ContingencyTable t;
    t.cells = {{{rng() % 50, rng() % 50}, {rng() % 50, rng() % 50}}};
    double a = t.cells[0][0], b = t.cells[0][1], c = t.cells[1][0], d = t.cells[1][1];
    if (a + b == 0 || c + d == 0 || a + c == 0 || b + d == 0) continue;
    double n = a + b + c + d;
    double oracle = n * (a * d - b * c) * (a * d - b * c) / ((a + b) * (c + d) * (a + c) * (b + d));
    double oracle_p = boost::math::cdf(boost::math::complement(boost::math::chi_squared(1.0), oracle));
    auto r = chi_square(t);
    worst_stat = std::max(worst_stat, std::abs(r.statistic - oracle));
    worst_p = std::max(worst_p, std::abs(r.p_value - oracle_p));
    ++tables;
  }
  ContingencyTable prop;
  prop.cells = {{{4, 6}, {10, 15}}};
  auto null = chi_square(prop);
  bool null_ok = std::abs(null.statistic) < kChiTolerance && std::abs(null.p_value - 1) < kChiTolerance;
  std::ostringstream d;
  d << tables << " tables, max |dstat| " << worst_stat << ", max |dp| " << worst_p
    << ", proportional rows stat " << null.statistic << " p " << null.p_value;
  return {worst_stat <= kChiTolerance && worst_p <= kChiTolerance && null_ok, d.str()};
}

Outcome criterion_vocab_laws() {
  const auto& corpus = testing::fixture_corpus();
  std::vector<std::vector<SourceText>> corpora(3);
  for (const auto& rec : corpus) {
    bool generated = rec.id.rfind("gen_", 0) == 0;
    (generated ? corpora[1] : corpora[0]).push_back(rec.source);
    corpora[2].push_back(rec.source);
  }
  corpora[1].resize(100);
  testing::TempDir dir("acceptance-vocab");
  std::mt19937 rng(3);
  std::ostringstream d;
  bool ok = true;
  for (std::size_t i = 0; i < corpora.size(); ++i) {
    auto rules = build_rule_vocab(corpora[i]).rules;
    MergedVocab v(testing::fixture_base(), rules, "python");
    bool layout = v.total() == v.m() + 2 + v.k() && v.end_of_leaf() == v.m() &&
                  v.gap() == v.m() + 1;
    auto a = dir / ("a" + std::to_string(i) + ".json");
    auto b = dir / ("b" + std::to_string(i) + ".json");
    save_vocab(v, a);
    save_vocab(load_vocab(a), b);
    bool stable = read_file(a) == read_file(b);
    auto shuffled = corpora[i];
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    bool perm = build_rule_vocab(shuffled).rules == rules;
    ok &= layout && stable && perm;
    d << (i ? "; " : "") << "corpus " << i << " (" << corpora[i].size() << " files): m=" << v.m()
      << " k=" << v.k() << " total=" << v.total() << (layout ? "" : " LAYOUT")
      << (stable ? "" : " UNSTABLE") << (perm ? "" : " PERMUTATION-VARIANT");
  }
  return {ok, d.str()};
}

Outcome criterion_prefixes() {
  const auto& v = testing::fixture_vocab();
  const TokenId rule_token = static_cast<TokenId>(v.m() + 2);
  std::size_t fixtures = 0, prefixes = 0, bad_prefixes = 0, flagged = 0;
  for (const auto& rec : testing::fixture_corpus()) {
    if (fixtures == kPrefixFixtures) break;
    auto seq = encode(rec.source, v, EncodeMode::exact);
    if (seq.ids.empty()) continue;
    ++fixtures;
    for (std::size_t n = 0; n <= seq.size(); ++n) {
      auto st = is_valid_prefix(std::span(seq.ids).first(n), v);
      bool want_complete = n == seq.size();
      bad_prefixes += st.status == PrefixState::Status::invalid ||
                      (want_complete && st.status != PrefixState::Status::complete);
      ++prefixes;
    }
    // a rule token inside a terminal run violates the expected class
    std::size_t pos = 0;
    TokenId replacement = 0;  // terminal where the root rule is expected
    for (std::size_t i = 1; i < seq.size(); ++i) {
      TokenId prev = seq.ids[i - 1];
      if (v.classify(prev) == TokenClass::terminal || prev == v.gap()) {
        pos = i;
        replacement = rule_token;
        break;
      }
    }
    auto corrupted = seq.ids;
    corrupted[pos] = replacement;
    auto st = is_valid_prefix(corrupted, v);
    flagged += st.status == PrefixState::Status::invalid && st.invalid_position == pos;
  }
  std::ostringstream d;
  d << fixtures << " fixtures, " << prefixes << " prefixes (" << bad_prefixes
    << " rejected), corruptions flagged at the right position: " << flagged << "/" << fixtures;
  return {fixtures == kPrefixFixtures && bad_prefixes == 0 && flagged == fixtures, d.str()};
}

Outcome criterion_pipeline() {
  const auto& corpus = testing::fixture_corpus();
  std::vector<CorpusRecord> input;
  std::size_t want_dup = 0, want_bad = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    input.push_back(corpus[i]);
    if (i % 10 == 3) {
      input.push_back({"dup/" + corpus[i].id, corpus[i].source});
      ++want_dup;
    }
    if (i % 17 == 5) {
      input.push_back({"bad/" + std::to_string(i) + ".py",
                       SourceText{"def broken_" + std::to_string(i) + "(:\n    pass\n", {}}});
      ++want_bad;
    }
  }
  // the corpus itself holds byte-identical files (e.g. blank ones)
  std::map<std::string, int> seen;
  for (const auto& rec : corpus) want_dup += seen[rec.source.bytes]++ > 0;

  auto result = filter_corpus(input);
  const auto& r = result.report;
  bool counts = r.input_count == input.size() && r.duplicate_count == want_dup &&
                r.syntax_rejected_count == want_bad;
  bool conserved = r.input_count == r.duplicate_count + r.syntax_rejected_count + r.kept_count &&
                   r.kept_count == result.records.size();

  testing::TempDir dir("acceptance-export");
  const auto& v = testing::fixture_vocab();
  bool deterministic = true;
  std::vector<std::string> names;
  for (const char* run : {"one", "two"}) {
    auto m = export_dataset(result.records, v, {dir / run, 64, EncodeMode::canonical});
    names = m.shards;
  }
  names.push_back("manifest.json");
  for (const auto& name : names) {
    deterministic &= read_file(dir / "one" / name) == read_file(dir / "two" / name);
  }
  std::ostringstream d;
  d << "input " << r.input_count << ", duplicates " << r.duplicate_count << "/" << want_dup
    << ", malformed " << r.syntax_rejected_count << "/" << want_bad << ", kept " << r.kept_count
    << ", " << names.size() << " export files " << (deterministic ? "identical" : "DIFFER");
  return {counts && conserved && deterministic, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"round-trip", criterion_round_trip},
      {"figure-1 rule sequence", criterion_figure1},
      {"figure-2 amplification", criterion_figure2},
      {"micro-suite amplification", criterion_micro_suite},
      {"levenshtein oracle", criterion_levenshtein},
      {"chi-square oracle", criterion_chi_square},
      {"vocab laws", criterion_vocab_laws},
      {"prefix validity", criterion_prefixes},
      {"corpus pipeline", criterion_pipeline},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gramtok/bpe.hpp"
#include "gramtok/corpus.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace gramtok;
using json = nlohmann::json;

namespace {

CorpusRecord rec(std::string id, std::string text) {
  return CorpusRecord{std::move(id), SourceText{std::move(text), {}}};
}

std::vector<std::string> ids_of(const std::vector<CorpusRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) out.push_back(r.id);
  return out;
}

}  // namespace

TEST_CASE("dedup keeps first occurrences") {
  auto r = dedup({rec("a", "x = 1\n"), rec("b", "y = 2\n"), rec("c", "x = 1\n")});
  CHECK(ids_of(r.records) == std::vector<std::string>{"a", "b"});
  CHECK(r.report.input_count == 3);
  CHECK(r.report.duplicate_count == 1);
  CHECK(r.report.kept_count == 2);
  CHECK(r.report.rejected_ids == std::vector<std::string>{"c"});
}

TEST_CASE("filter_corpus combines both stages") {
  auto r = filter_corpus({rec("a", "x = 1\n"), rec("b", "x = 1\n"), rec("c", "def f(:\n"),
                          rec("d", "y = 2\n")});
  CHECK(ids_of(r.records) == std::vector<std::string>{"a", "d"});
  CHECK(r.report.input_count == 4);
  CHECK(r.report.duplicate_count == 1);
  CHECK(r.report.syntax_rejected_count == 1);
  CHECK(r.report.kept_count == 2);
  CHECK(r.report.rejected_ids == std::vector<std::string>{"b", "c"});
  auto doc = json::parse(filter_report_to_json(r.report));
  CHECK(doc["kept_count"] == 2);
  CHECK(doc["rejected_ids"] == json::array({"b", "c"}));
}

TEST_CASE("filter counts are conserved on random corpora and filtering is idempotent") {
  const auto& corpus = testing::fixture_corpus();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CorpusRecord> input;
    std::size_t want_dup = 0, want_bad = 0;
    std::set<std::string> seen;
    for (int i = 0; i < 40; ++i) {
      std::string id = "r" + std::to_string(i);
      switch (rng() % 4) {
        case 0:
          input.push_back(rec(id, "def broken(:\n    " + std::to_string(rng()) + "\n"));
          break;
        default: input.push_back(rec(id, corpus[rng() % 60].source.bytes)); break;
      }
      const auto& text = input.back().source.bytes;
      if (!seen.insert(text).second) {
        ++want_dup;
      } else if (text.rfind("def broken(:", 0) == 0) {
        ++want_bad;
      }
    }
    auto r = filter_corpus(input);
    CHECK(r.report.input_count == 40);
    CHECK(r.report.duplicate_count == want_dup);
    CHECK(r.report.syntax_rejected_count == want_bad);
    CHECK(r.report.input_count == r.report.duplicate_count +
                                      r.report.syntax_rejected_count + r.report.kept_count);
    CHECK(r.records.size() == r.report.kept_count);
    CHECK(r.report.rejected_ids.size() == 40 - r.report.kept_count);

    auto again = filter_corpus(r.records);
    CHECK(again.report.duplicate_count == 0);
    CHECK(again.report.syntax_rejected_count == 0);
    CHECK(ids_of(again.records) == ids_of(r.records));
  }
}

TEST_CASE("corpus JSONL round trip and directory loading") {
  testing::TempDir dir("jsonl");
  std::vector<CorpusRecord> records{rec("a.py", "x = 1\n"), rec("b/c.py", "é = 'ü'\r\n")};
  write_file(dir / "c.jsonl", corpus_to_jsonl(records));
  auto back = load_corpus(dir / "c.jsonl");
  REQUIRE(back.size() == 2);
  CHECK(back[1].id == "b/c.py");
  CHECK(back[1].source.bytes == records[1].source.bytes);

  write_file(dir / "dup.jsonl", corpus_to_jsonl(std::vector{records[0], records[0]}));
  CHECK_THROWS_AS(load_corpus(dir / "dup.jsonl"), Error);

  std::filesystem::create_directories(dir / "tree" / "sub");
  write_file(dir / "tree" / "z.py", "z = 1\n");
  write_file(dir / "tree" / "sub" / "a.py", "a = 1\n");
  auto loaded = load_corpus(dir / "tree");
  CHECK(ids_of(loaded) == std::vector<std::string>{"sub/a.py", "z.py"});
}

TEST_CASE("export writes shards in input order") {
  const auto& v = testing::fixture_vocab();
  testing::TempDir dir("export");
  std::vector<CorpusRecord> records{rec("a", "x = 1\n"), rec("b", "y = 2\n"), rec("c", "z = 3\n")};
  auto m = export_dataset(records, v, {dir.path(), 2, EncodeMode::exact});
  CHECK(m.shards == std::vector<std::string>{"shard-00000.jsonl", "shard-00001.jsonl"});
  CHECK(m.records == 3);
  CHECK(m.vocab_digest == vocab_digest(v));

  auto first = read_file(dir / "shard-00000.jsonl");
  auto second = read_file(dir / "shard-00001.jsonl");
  CHECK(first == sequence_to_json("a", encode(records[0].source, v, EncodeMode::exact)) + "\n" +
                     sequence_to_json("b", encode(records[1].source, v, EncodeMode::exact)) + "\n");
  CHECK(second == sequence_to_json("c", encode(records[2].source, v, EncodeMode::exact)) + "\n");
  auto manifest = json::parse(read_file(dir / "manifest.json"));
  CHECK(manifest["records"] == 3);
  CHECK(manifest["mode"] == "exact");
  CHECK(manifest["vocab_digest"] == vocab_digest(v));
}

TEST_CASE("empty export and bad config") {
  const auto& v = testing::fixture_vocab();
  testing::TempDir dir("empty");
  auto m = export_dataset(std::vector<CorpusRecord>{}, v, {dir / "out", 10, EncodeMode::canonical});
  CHECK(m.shards.empty());
  CHECK(m.records == 0);
  CHECK(std::filesystem::exists(dir / "out" / "manifest.json"));
  CHECK_THROWS_AS(export_dataset(std::vector<CorpusRecord>{}, v, {dir / "x", 0, EncodeMode::exact}),
                  Error);
}

TEST_CASE("export names the record with an unknown production") {
  auto rules = build_rule_vocab(std::vector<SourceText>{{"x = 1\n", {}}}).rules;
  MergedVocab small(BaseVocab::byte_identity(), rules, "python");
  testing::TempDir dir("unknown");
  std::vector<CorpusRecord> records{rec("ok", "y = 2\n"), rec("loop.py", "while x:\n    pass\n")};
  try {
    export_dataset(records, small, {dir.path(), 10, EncodeMode::canonical});
    FAIL("expected UnknownProduction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownProduction);
    CHECK(std::string(e.what()).find("loop.py") != std::string::npos);
  }
}

TEST_CASE("stats agree with a direct recount") {
  const auto& v = testing::fixture_vocab();
  const auto& corpus = testing::fixture_corpus();
  auto report = corpus_stats(corpus, v);
  REQUIRE(report.records.size() == corpus.size());
  std::size_t base_total = 0, canon_total = 0, max_base = 0;
  std::set<Production> seen;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto tree = parse(corpus[i].source);
    std::size_t base = bpe_segment(corpus[i].source.bytes, v.base()).size();
    std::size_t canon = encode(corpus[i].source, v, EncodeMode::canonical).size();
    CHECK(report.records[i].id == corpus[i].id);
    CHECK(report.records[i].base_tokens == base);
    CHECK(report.records[i].grammar_canonical == canon);
    CHECK(report.records[i].grammar_exact == encode(corpus[i].source, v, EncodeMode::exact).size());
    for (auto& p : internal_productions_preorder(tree)) seen.insert(p);
    base_total += base;
    canon_total += canon;
    max_base = std::max(max_base, base);
  }
  REQUIRE(report.base_tokens.has_value());
  CHECK(report.base_tokens->max == max_base);
  CHECK(report.base_tokens->mean ==
        doctest::Approx(static_cast<double>(base_total) / corpus.size()));
  CHECK(*report.canonical_ratio == doctest::Approx(static_cast<double>(canon_total) / base_total));
  CHECK(report.distinct_rules_seen == seen.size());
  CHECK(report.rule_vocab_size == v.k());

  std::vector<std::size_t> odd{3, 1, 2}, even{4, 1, 3, 2};
  CHECK(summarize(odd)->median == 2.0);
  CHECK(summarize(even)->median == 2.5);
  CHECK_FALSE(summarize(std::vector<std::size_t>{}).has_value());
}

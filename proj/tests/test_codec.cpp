#include <random>

#include "doctest.h"
#include "gramtok/codec.hpp"
#include "gramtok/error.hpp"
#include "support.hpp"

using namespace gramtok;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gramtok::Error");
  return ErrorCode::IoError;
}

// Exact sequence with every GAP ... END_OF_LEAF run cut out.
std::vector<TokenId> strip_gaps(const std::vector<TokenId>& ids, const MergedVocab& v) {
  std::vector<TokenId> out;
  bool in_gap = false;
  for (TokenId id : ids) {
    if (in_gap) {
      if (id == v.end_of_leaf()) in_gap = false;
      continue;
    }
    if (id == v.gap()) {
      in_gap = true;
      continue;
    }
    out.push_back(id);
  }
  return out;
}

}  // namespace

TEST_CASE("exact encoding round-trips every fixture file") {
  const auto& v = testing::fixture_vocab();
  for (const auto& rec : testing::fixture_corpus()) {
    INFO(rec.id);
    auto seq = encode(rec.source, v, EncodeMode::exact);
    CHECK(decode(seq, v).bytes == rec.source.bytes);
  }
}

TEST_CASE("small sources") {
  const std::vector<std::string> sources{
      "",      "\n",         "  \n\t",         "foo()",          "foo(  )\n  \n",
      "x = 1", "x = 1\n\n", "# c\n",           "a=1;b=2;c=3",    "x = a not in b",
      "y = (a)  ",           "def f(a, b): pass", "if a is not  b:\n  pass\n", "f( ( a ) )"};
  std::vector<SourceText> texts;
  for (const auto& s : sources) texts.push_back({s, {}});
  MergedVocab v(testing::fixture_base(), build_rule_vocab(texts).rules, "python");
  for (const auto& src : sources) {
    INFO(src);
    auto seq = encode(SourceText{src, {}}, v, EncodeMode::exact);
    CHECK(decode(seq, v).bytes == src);
    CHECK(is_valid_prefix(seq.ids, v).status ==
          (src.empty() ? PrefixState::Status::open : PrefixState::Status::complete));
  }
  CHECK(encode(SourceText{"", {}}, v, EncodeMode::exact).ids.empty());
  CHECK(encode(SourceText{"", {}}, v, EncodeMode::canonical).ids.empty());
  auto blank = encode(SourceText{"\n\n", {}}, v, EncodeMode::exact);
  REQUIRE(blank.ids.size() >= 2);
  CHECK(blank.ids.front() == v.gap());
  CHECK(blank.ids.back() == v.end_of_leaf());
  CHECK(encode(SourceText{"\n\n", {}}, v, EncodeMode::canonical).ids.empty());
}

TEST_CASE("canonical is exact without the gap runs") {
  const auto& v = testing::fixture_vocab();
  for (const auto& rec : testing::fixture_corpus()) {
    INFO(rec.id);
    auto exact = encode(rec.source, v, EncodeMode::exact);
    auto canon = encode(rec.source, v, EncodeMode::canonical);
    CHECK(canon.mode == EncodeMode::canonical);
    CHECK(strip_gaps(exact.ids, v) == canon.ids);
  }
}

TEST_CASE("rule tokens are the preorder productions, leaves close with END_OF_LEAF") {
  const auto& v = testing::fixture_vocab();
  for (const auto& rec : testing::fixture_corpus()) {
    auto tree = parse(rec.source);
    auto canon = encode_tree(tree, v, EncodeMode::canonical);
    std::vector<TokenId> expected_rules;
    for (const auto& p : internal_productions_preorder(tree)) expected_rules.push_back(*v.rule_id(p));
    std::vector<TokenId> rules;
    std::size_t eol = 0;
    for (std::size_t i = 0; i < canon.size(); ++i) {
      if (canon.classes[i] == TokenClass::rule) rules.push_back(canon.ids[i]);
      if (canon.ids[i] == v.end_of_leaf()) ++eol;
    }
    std::size_t named_leaves = 0;
    for (const auto& leaf : leaves_in_order(tree)) {
      named_leaves += leaf.named || !is_literal_kind(leaf.kind);
    }
    INFO(rec.id);
    CHECK(rules == expected_rules);
    CHECK(eol == named_leaves);
    for (std::size_t i = 0; i < canon.size(); ++i) CHECK(canon.classes[i] == v.classify(canon.ids[i]));
  }
}

TEST_CASE("figure-1 sequence starts with the module rule") {
  const auto& v = testing::fixture_vocab();
  auto seq = encode(SourceText{"def get(a, b):\n    return (a + b) % 2 == 1\n", {}}, v,
                    EncodeMode::canonical);
  REQUIRE_FALSE(seq.ids.empty());
  REQUIRE(seq.classes[0] == TokenClass::rule);
  CHECK(to_string(v.rule(seq.ids[0])) == "module → function_definition");
  auto text = explain(seq.ids, v);
  CHECK(text.rfind("0\t" + std::to_string(seq.ids[0]) + "\trule\tmodule → function_definition\n", 0) == 0);
  CHECK(text.find("\tterminal\t\"") != std::string::npos);
  CHECK(text.find("\tsentinel\t<END_OF_LEAF>") != std::string::npos);
}

TEST_CASE("encode errors") {
  const auto& v = testing::fixture_vocab();
  CHECK(code_of([&] { encode(SourceText{"def f(:\n", {}}, v, EncodeMode::exact); }) ==
        ErrorCode::SyntaxInvalid);

  auto small_rules = build_rule_vocab(std::vector<SourceText>{{"x = 1\n", {}}}).rules;
  MergedVocab small(BaseVocab::byte_identity(), small_rules, "python");
  try {
    encode(SourceText{"x = 1\nwhile x:\n    pass\n", {}}, small, EncodeMode::exact);
    FAIL("expected UnknownProduction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownProduction);
    CHECK(std::string(e.what()).find("module → expression_statement while_statement") !=
          std::string::npos);
  }
}

TEST_CASE("decode errors") {
  const auto& v = testing::fixture_vocab();
  auto seq = encode(SourceText{"x = foo(1)\n", {}}, v, EncodeMode::exact);

  auto canon = seq;
  canon.mode = EncodeMode::canonical;
  CHECK(code_of([&] { decode(canon, v); }) == ErrorCode::ModeUnsupported);

  auto truncated = seq;
  truncated.ids.resize(seq.ids.size() / 2);
  CHECK(code_of([&] { decode(truncated, v); }) == ErrorCode::IncompleteSequence);

  auto bad = seq;
  bad.ids[0] = v.end_of_leaf();
  try {
    decode(bad, v);
    FAIL("expected InvalidToken");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidToken);
    CHECK(e.position() == 0u);
  }

  auto extra = seq;
  extra.ids.push_back(extra.ids[0]);
  CHECK(code_of([&] { decode(extra, v); }) == ErrorCode::InvalidToken);

  CHECK(decode(make_sequence({}, EncodeMode::exact, v), v).bytes.empty());
}

TEST_CASE("every prefix of a valid sequence is open or complete") {
  const auto& v = testing::fixture_vocab();
  for (const auto& rec : testing::fixture_corpus()) {
    for (auto mode : {EncodeMode::exact, EncodeMode::canonical}) {
      auto seq = encode(rec.source, v, mode);
      if (seq.ids.empty()) continue;
      INFO(rec.id, " ", to_string(mode));
      for (std::size_t n = 0; n < seq.size(); ++n) {
        auto st = is_valid_prefix(std::span(seq.ids).first(n), v);
        REQUIRE(st.status != PrefixState::Status::invalid);
        CHECK(st.position == n);
      }
      CHECK(is_valid_prefix(seq.ids, v).status == PrefixState::Status::complete);
    }
  }
}

TEST_CASE("class-violating tokens are flagged at their position") {
  const auto& v = testing::fixture_vocab();
  const TokenId some_rule = static_cast<TokenId>(v.m() + 2);
  auto seq = encode(SourceText{"def f(a):\n    return a + 1\n", {}}, v, EncodeMode::exact);

  auto first_terminal = seq.ids;
  first_terminal[0] = 0;
  auto st = is_valid_prefix(first_terminal, v);
  CHECK(st.status == PrefixState::Status::invalid);
  CHECK(st.invalid_position == 0u);
  CHECK_FALSE(st.reason.empty());

  for (std::size_t i = 1; i < seq.size(); ++i) {
    TokenId prev = seq.ids[i - 1];
    if (v.classify(prev) != TokenClass::terminal && prev != v.gap()) continue;
    auto corrupted = seq.ids;
    corrupted[i] = some_rule;
    auto c = is_valid_prefix(corrupted, v);
    INFO(i);
    CHECK(c.status == PrefixState::Status::invalid);
    CHECK(c.invalid_position == i);
  }

  std::vector<TokenId> out_of_range{static_cast<TokenId>(v.total())};
  CHECK(is_valid_prefix(out_of_range, v).status == PrefixState::Status::invalid);
}

TEST_CASE("sequence JSON") {
  const auto& v = testing::fixture_vocab();
  auto seq = encode(SourceText{"x = 1\n", {}}, v, EncodeMode::exact);
  auto line = sequence_to_json("rec-1", seq);
  CHECK(line.rfind("{\"id\":\"rec-1\",\"mode\":\"exact\",\"ids\":[", 0) == 0);
  auto [id, back] = sequence_from_json(line, v);
  CHECK(id == "rec-1");
  CHECK(back == seq);

  std::string too_big = "{\"mode\":\"exact\",\"ids\":[" + std::to_string(v.total()) + "]}";
  CHECK(code_of([&] { sequence_from_json(too_big, v); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { sequence_from_json("{\"mode\":\"lossy\",\"ids\":[]}", v); }) ==
        ErrorCode::FormatError);
  CHECK(code_of([&] { sequence_from_json("[1,2]", v); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_mode("fast"); }) == ErrorCode::FormatError);
}

TEST_CASE("encoding is deterministic") {
  const auto& v = testing::fixture_vocab();
  for (const auto& rec : testing::fixture_corpus()) {
    CHECK(encode(rec.source, v, EncodeMode::exact) == encode(rec.source, v, EncodeMode::exact));
  }
}

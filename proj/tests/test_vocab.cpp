#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gramtok/byte_escape.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "gramtok/syntax.hpp"
#include "gramtok/vocab.hpp"
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

std::vector<std::string> all_bytes() {
  std::vector<std::string> out;
  for (int b = 0; b < 256; ++b) out.emplace_back(1, static_cast<char>(b));
  return out;
}

Production prod(std::string parent, std::vector<ChildSymbol> children) {
  return Production{std::move(parent), std::move(children)};
}

}  // namespace

TEST_CASE("byte escape is a bijection on byte strings") {
  std::set<std::string> images;
  for (int b = 0; b < 256; ++b) {
    std::string one(1, static_cast<char>(b));
    auto esc = escape_token_bytes(one);
    CHECK(images.insert(esc).second);
    CHECK(unescape_token(esc) == one);
  }
  CHECK(escape_token_bytes(" ") == "Ġ");
  CHECK(escape_token_bytes("\n") == "Ċ");
  CHECK(escape_token_bytes("ab") == "ab");
  CHECK_FALSE(unescape_token("\xff").has_value());
  CHECK_FALSE(unescape_token("☃").has_value());

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::string s(rng() % 20, '\0');
    for (auto& c : s) c = static_cast<char>(rng() % 256);
    CHECK(unescape_token(escape_token_bytes(s)) == s);
  }
}

TEST_CASE("byte identity base vocab") {
  auto base = BaseVocab::byte_identity();
  CHECK(base.size() == 256);
  CHECK(base.merges().empty());
  for (int b = 0; b < 256; ++b) CHECK(base.byte_token(static_cast<unsigned char>(b)) == b);
}

TEST_CASE("base vocab validation") {
  auto tokens = all_bytes();
  tokens.push_back("ab");
  auto base = BaseVocab::from_parts(tokens, {{"a", "b"}});
  CHECK(base.size() == 257);
  REQUIRE(base.merge_of(base.byte_token('a'), base.byte_token('b')).has_value());
  CHECK(base.merge_of(base.byte_token('a'), base.byte_token('b'))->result == 256);
  CHECK_FALSE(base.merge_of(base.byte_token('b'), base.byte_token('a')).has_value());

  auto missing = all_bytes();
  missing.erase(missing.begin() + 'q');
  CHECK(code_of([&] { BaseVocab::from_parts(missing, {}); }) == ErrorCode::NotByteComplete);

  auto dup = all_bytes();
  dup.push_back("a");
  CHECK(code_of([&] { BaseVocab::from_parts(dup, {}); }) == ErrorCode::FormatError);

  CHECK(code_of([&] { BaseVocab::from_parts(all_bytes(), {{"a", "b"}}); }) ==
        ErrorCode::FormatError);
  CHECK(code_of([&] { BaseVocab::from_parts(tokens, {{"a", "b"}, {"a", "b"}}); }) ==
        ErrorCode::FormatError);

  CHECK(code_of([] { parse_base_vocab(R"({"tokens": []})"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_base_vocab("not json"); }) == ErrorCode::FormatError);
}

TEST_CASE("ID layout with two rules") {
  auto rules = RuleVocab::from_productions(
      {prod("module", {{"expression_statement", true}}),
       prod("expression_statement", {{"identifier", true}})});
  MergedVocab v(BaseVocab::byte_identity(), rules, "python");
  CHECK(v.m() == 256);
  CHECK(v.s() == 2);
  CHECK(v.k() == 2);
  CHECK(v.total() == 260);
  CHECK(v.end_of_leaf() == 256);
  CHECK(v.gap() == 257);
  CHECK(v.classify(0) == TokenClass::terminal);
  CHECK(v.classify(255) == TokenClass::terminal);
  CHECK(v.classify(256) == TokenClass::sentinel);
  CHECK(v.classify(257) == TokenClass::sentinel);
  CHECK(v.classify(258) == TokenClass::rule);
  CHECK(v.classify(259) == TokenClass::rule);
  CHECK(code_of([&] { v.classify(260); }) == ErrorCode::OutOfRange);
  // canonical order: expression_statement < module
  CHECK(v.rule(258).parent == "expression_statement");
  CHECK(v.rule(259).parent == "module");
}

TEST_CASE("empty rule vocab") {
  MergedVocab v(BaseVocab::byte_identity(), RuleVocab{}, "python");
  CHECK(v.total() == 258);
  CHECK(v.classify(257) == TokenClass::sentinel);
}

TEST_CASE("merged vocab is a bijection between ids and symbols") {
  const auto& v = testing::fixture_vocab();
  REQUIRE(v.total() == v.m() + 2 + v.k());
  for (std::size_t id = 0; id < v.total(); ++id) {
    auto tid = static_cast<TokenId>(id);
    auto sym = v.symbol_of(tid);
    CHECK(v.id_of(sym) == tid);
    switch (v.classify(tid)) {
      case TokenClass::terminal: CHECK(std::holds_alternative<TerminalSymbol>(sym)); break;
      case TokenClass::sentinel: CHECK(std::holds_alternative<Sentinel>(sym)); break;
      case TokenClass::rule: CHECK(std::holds_alternative<Production>(sym)); break;
    }
  }
  CHECK(code_of([&] { v.id_of(prod("nope", {{"x", true}})); }) == ErrorCode::OutOfRange);
}

TEST_CASE("save, load and save again give identical bytes") {
  const auto& v = testing::fixture_vocab();
  testing::TempDir dir("vocab");
  save_vocab(v, dir / "a.json");
  auto loaded = load_vocab(dir / "a.json");
  CHECK(loaded == v);
  save_vocab(loaded, dir / "b.json");
  CHECK(read_file(dir / "a.json") == read_file(dir / "b.json"));
  CHECK(vocab_digest(loaded) == vocab_digest(v));
  CHECK(vocab_digest(v).size() == 64);
  // the full file is accepted where a base vocab is expected
  CHECK(load_base_vocab(dir / "a.json") == v.base());
}

TEST_CASE("vocab file validation") {
  const auto& v = testing::fixture_vocab();
  const std::string text = serialize_vocab(v);
  CHECK(text.back() == '\n');
  CHECK(text.rfind("{\n \"format_version\": 1,\n \"language\": \"python\",\n \"base\"", 0) == 0);

  auto bad_version = text;
  bad_version.replace(bad_version.find("\"format_version\": 1"), 19, "\"format_version\": 2");
  CHECK(code_of([&] { parse_vocab(bad_version); }) == ErrorCode::VersionMismatch);

  auto rules = RuleVocab::from_productions({prod("a", {{"x", true}}), prod("b", {{"y", true}})});
  auto small = serialize_vocab(MergedVocab(BaseVocab::byte_identity(), rules, "python"));
  auto pos_b = small.find("\"parent\": \"b\"");
  REQUIRE(pos_b != std::string::npos);
  auto swapped = small;
  swapped.replace(pos_b, 13, "\"parent\": \"a\"");
  swapped.replace(swapped.find("\"kind\": \"y\""), 11, "\"kind\": \"x\"");
  CHECK(code_of([&] { parse_vocab(swapped); }) == ErrorCode::FormatError);

  auto unordered = small;
  unordered.replace(unordered.find("\"parent\": \"a\""), 13, "\"parent\": \"c\"");
  CHECK(code_of([&] { parse_vocab(unordered); }) == ErrorCode::FormatError);

  auto no_rules = small.substr(0, small.find(",\n \"rules\"")) + "\n}\n";
  CHECK(code_of([&] { parse_vocab(no_rules); }) == ErrorCode::FormatError);
}

TEST_CASE("rule vocab is invariant under corpus permutation") {
  auto sources = testing::sources_of(testing::fixture_corpus());
  auto reference = build_rule_vocab(sources).rules;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(sources.begin(), sources.end(), rng);
    CHECK(build_rule_vocab(sources).rules == reference);
  }
}

TEST_CASE("rule vocab is exactly the set of productions seen") {
  auto sources = testing::sources_of(testing::fixture_corpus());
  std::set<Production> expected;
  for (const auto& s : sources) {
    for (auto& p : internal_productions_preorder(parse(s))) expected.insert(std::move(p));
  }
  auto built = build_rule_vocab(sources);
  CHECK(built.files_parsed == sources.size());
  CHECK(built.files_skipped == 0);
  CHECK(std::vector<Production>(expected.begin(), expected.end()) == built.rules.rules());
}

TEST_CASE("build_rule_vocab skips broken files and rejects an all-broken corpus") {
  std::vector<SourceText> mixed{{"x = 1\n", {}}, {"def f(:\n", {}}};
  auto built = build_rule_vocab(mixed);
  CHECK(built.files_parsed == 1);
  CHECK(built.files_skipped == 1);

  std::vector<SourceText> broken{{"def f(:\n", {}}};
  CHECK(code_of([&] { build_rule_vocab(broken); }) == ErrorCode::EmptyCorpus);
  std::vector<SourceText> none;
  CHECK(code_of([&] { build_rule_vocab(none); }) == ErrorCode::EmptyCorpus);
}

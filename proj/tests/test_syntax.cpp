#include <tree_sitter/api.h>

#include <string>
#include <vector>

#include "doctest.h"
#include "gramtok/error.hpp"
#include "gramtok/syntax.hpp"
#include "support.hpp"

extern "C" const TSLanguage* tree_sitter_python();

using namespace gramtok;

namespace {

// Productions straight from the parser's node API, rendered as strings.
void collect_raw(TSNode node, std::vector<std::string>& out) {
  uint32_t n = ts_node_child_count(node);
  if (n == 0) return;
  std::string line = ts_node_type(node);
  line += " ->";
  for (uint32_t i = 0; i < n; ++i) {
    TSNode c = ts_node_child(node, i);
    line += ts_node_is_named(c) ? " " : " '";
    line += ts_node_type(c);
    if (!ts_node_is_named(c)) line += "'";
  }
  out.push_back(line);
  for (uint32_t i = 0; i < n; ++i) collect_raw(ts_node_child(node, i), out);
}

std::vector<std::string> raw_productions(const std::string& src) {
  TSParser* parser = ts_parser_new();
  ts_parser_set_language(parser, tree_sitter_python());
  TSTree* tree = ts_parser_parse_string(parser, nullptr, src.data(),
                                        static_cast<uint32_t>(src.size()));
  std::vector<std::string> out;
  collect_raw(ts_tree_root_node(tree), out);
  ts_tree_delete(tree);
  ts_parser_delete(parser);
  return out;
}

std::string render(const Production& p) {
  std::string line = p.parent + " ->";
  for (const auto& c : p.children) line += c.named ? " " + c.kind : " '" + c.kind + "'";
  return line;
}

}  // namespace

TEST_CASE("figure-1 function parses into the expected rule sequence") {
  auto tree = parse(SourceText{"def get(a, b):\n    return (a + b) % 2 == 1\n", {}});
  REQUIRE_FALSE(tree.has_error);
  auto prods = internal_productions_preorder(tree);
  REQUIRE(prods.size() >= 3);
  CHECK(to_string(prods[0]) == "module → function_definition");
  CHECK(render(prods[1]) ==
        "function_definition -> 'def' identifier parameters ':' block");
  CHECK(render(prods[2]) == "parameters -> '(' identifier ',' identifier ')'");
}

TEST_CASE("empty and whitespace-only files") {
  auto empty = parse(SourceText{"", {}});
  CHECK_FALSE(empty.has_error);
  CHECK(empty.root.kind == "module");
  CHECK(internal_productions_preorder(empty).empty());
  CHECK(leaves_in_order(empty).empty());

  auto blank = parse(SourceText{"\n\n  \n", {}});
  CHECK_FALSE(blank.has_error);
  CHECK(leaves_in_order(blank).empty());
}

TEST_CASE("syntax errors are reported") {
  auto tree = parse(SourceText{"def f(:\n", {}});
  CHECK(tree.has_error);
  CHECK_FALSE(validate_syntax(SourceText{"def f(:\n", {}}));
  CHECK_THROWS_AS(internal_productions_preorder(tree), Error);
  try {
    internal_productions_preorder(tree);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TreeHasErrors);
  }
  CHECK(validate_syntax(SourceText{"x = 1\n", {}}));
}

TEST_CASE("leaves of a simple assignment") {
  auto tree = parse(SourceText{"a=1", {}});
  auto leaves = leaves_in_order(tree);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[0].kind == "identifier");
  CHECK(leaves[0].named);
  CHECK(leaves[0].text == "a");
  CHECK(leaves[1].kind == "=");
  CHECK_FALSE(leaves[1].named);
  CHECK(leaves[2].kind == "integer");
  CHECK(leaves[2].text == "1");
}

TEST_CASE("unknown language") {
  CHECK_THROWS_AS(Language::get("cobol"), Error);
  CHECK(Language::python().start_symbol() == "module");
}

TEST_CASE("preorder productions match a walk of the raw parser API") {
  for (const auto& rec : testing::fixture_corpus()) {
    auto tree = parse(rec.source);
    REQUIRE_FALSE(tree.has_error);
    std::vector<std::string> ours;
    for (const auto& p : internal_productions_preorder(tree)) ours.push_back(render(p));
    INFO(rec.id);
    CHECK(ours == raw_productions(rec.source.bytes));
    CHECK(count_internal_nodes(tree) == ours.size());
  }
}

TEST_CASE("leaves are ordered, disjoint and inside the source") {
  for (const auto& rec : testing::fixture_corpus()) {
    auto tree = parse(rec.source);
    const auto& bytes = rec.source.bytes;
    CHECK(tree.root.start_byte <= tree.root.end_byte);
    CHECK(tree.root.end_byte <= bytes.size());
    std::uint32_t cursor = 0;
    for (const auto& leaf : leaves_in_order(tree)) {
      INFO(rec.id);
      REQUIRE(leaf.start_byte >= cursor);
      REQUIRE(leaf.end_byte >= leaf.start_byte);
      REQUIRE(leaf.end_byte <= bytes.size());
      CHECK(leaf.text == std::string_view(bytes).substr(leaf.start_byte,
                                                         leaf.end_byte - leaf.start_byte));
      if (!leaf.named && is_literal_kind(leaf.kind)) CHECK(leaf.text == leaf.kind);
      cursor = leaf.end_byte;
    }
  }
}

TEST_CASE("multi-token aliases are not literal kinds") {
  CHECK(is_literal_kind("def"));
  CHECK(is_literal_kind("=="));
  CHECK_FALSE(is_literal_kind("not in"));
  CHECK_FALSE(is_literal_kind("is not"));
  auto tree = parse(SourceText{"a not in b\n", {}});
  auto leaves = leaves_in_order(tree);
  REQUIRE(leaves.size() == 4);
  CHECK(leaves[1].kind == "not in");
  CHECK(leaves[1].text == "not");
  CHECK(leaves[2].text == "in");
}

TEST_CASE("parsing is deterministic") {
  for (const auto& rec : testing::fixture_corpus()) {
    auto a = internal_productions_preorder(parse(rec.source));
    auto b = internal_productions_preorder(parse(rec.source));
    CHECK(a == b);
  }
}

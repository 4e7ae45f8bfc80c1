#include "gramtok/syntax.hpp"

#include <tree_sitter/api.h>

#include <array>
#include <memory>

#include "gramtok/error.hpp"

extern "C" const TSLanguage* tree_sitter_python(void);

namespace gramtok {
namespace {

struct ParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};

SyntaxNode convert(TSTreeCursor& cursor) {
  TSNode node = ts_tree_cursor_current_node(&cursor);
  SyntaxNode out;
  out.kind = ts_node_type(node);
  out.start_byte = ts_node_start_byte(node);
  out.end_byte = ts_node_end_byte(node);
  out.named = ts_node_is_named(node);
  if (ts_tree_cursor_goto_first_child(&cursor)) {
    out.children.reserve(ts_node_child_count(node));
    do {
      out.children.push_back(convert(cursor));
    } while (ts_tree_cursor_goto_next_sibling(&cursor));
    ts_tree_cursor_goto_parent(&cursor);
  }
  return out;
}

void collect_productions(const SyntaxNode& node, std::vector<Production>& out) {
  if (node.is_leaf()) return;
  out.push_back(production_of(node));
  for (const auto& child : node.children) collect_productions(child, out);
}

void collect_leaves(const SyntaxNode& node, std::string_view source,
                    std::vector<LeafInfo>& out) {
  if (node.is_leaf()) {
    out.push_back({node.kind, node.named, node.start_byte, node.end_byte,
                   source.substr(node.start_byte,
                                 node.end_byte - node.start_byte)});
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, source, out);
}

std::size_t internal_count(const SyntaxNode& node) {
  if (node.is_leaf()) return 0;
  std::size_t n = 1;
  for (const auto& child : node.children) n += internal_count(child);
  return n;
}

}  // namespace

const Language& Language::get(std::string_view name) {
  static const std::array<Language, 1> registry{
      Language("python", "module", tree_sitter_python()),
  };
  for (const auto& lang : registry) {
    if (lang.name() == name) return lang;
  }
  throw Error(ErrorCode::ParserUnavailable,
              "no grammar registered for language '" + std::string(name) + "'");
}

std::string to_string(const Production& production) {
  std::string out = production.parent;
  out += " \xE2\x86\x92";  // →
  for (const auto& child : production.children) {
    out += ' ';
    if (child.named) {
      out += child.kind;
    } else {
      out += '"';
      out += child.kind;
      out += '"';
    }
  }
  return out;
}

Production production_of(const SyntaxNode& node) {
  Production p;
  p.parent = std::string(node.kind);
  p.children.reserve(node.children.size());
  for (const auto& child : node.children) {
    p.children.push_back({std::string(child.kind), child.named});
  }
  return p;
}

SyntaxTree parse(SourceText source, const Language& language) {
  std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
  if (!ts_parser_set_language(parser.get(), language.handle())) {
    throw Error(ErrorCode::ParserUnavailable,
                "grammar '" + std::string(language.name()) +
                    "' is incompatible with the parser runtime");
  }
  std::unique_ptr<TSTree, TreeDeleter> ts_tree(ts_parser_parse_string(
      parser.get(), nullptr, source.bytes.data(),
      static_cast<std::uint32_t>(source.bytes.size())));
  if (!ts_tree) {
    throw Error(ErrorCode::ParserUnavailable, "parser returned no tree");
  }
  TSNode root = ts_tree_root_node(ts_tree.get());

  SyntaxTree tree;
  tree.has_error = ts_node_has_error(root);
  TSTreeCursor cursor = ts_tree_cursor_new(root);
  tree.root = convert(cursor);
  ts_tree_cursor_delete(&cursor);
  tree.source = std::move(source);
  return tree;
}

std::vector<Production> internal_productions_preorder(const SyntaxTree& tree) {
  if (tree.has_error) {
    throw Error(ErrorCode::TreeHasErrors,
                "cannot extract productions from a tree with parse errors");
  }
  std::vector<Production> out;
  collect_productions(tree.root, out);
  return out;
}

std::vector<LeafInfo> leaves_in_order(const SyntaxTree& tree) {
  std::vector<LeafInfo> out;
  if (tree.root.is_leaf()) return out;
  collect_leaves(tree.root, tree.source.bytes, out);
  return out;
}

std::size_t count_internal_nodes(const SyntaxTree& tree) {
  return internal_count(tree.root);
}

bool is_literal_kind(std::string_view kind) noexcept {
  return !kind.empty() && kind.find_first_of(" \t") == std::string_view::npos;
}

bool validate_syntax(const SourceText& source, const Language& language) {
  return !parse(source, language).has_error;
}

}  // namespace gramtok

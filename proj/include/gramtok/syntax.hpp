#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

struct TSLanguage;

namespace gramtok {

/// Raw source bytes. UTF-8 is expected but any byte sequence is carried
/// through unchanged.
struct SourceText {
  std::string bytes;
  std::optional<std::string> origin;
};

/// A grammar the parser can be configured with. Instances are static and
/// immutable; `get` throws ParserUnavailable for unknown names.
class Language {
 public:
  static const Language& get(std::string_view name);
  static const Language& python() { return get("python"); }

  std::string_view name() const noexcept { return name_; }
  /// Node kind of every tree root produced by this grammar.
  std::string_view start_symbol() const noexcept { return start_symbol_; }
  const TSLanguage* handle() const noexcept { return handle_; }

  Language(std::string_view name, std::string_view start_symbol,
           const TSLanguage* handle)
      : name_(name), start_symbol_(start_symbol), handle_(handle) {}

 private:
  std::string_view name_;
  std::string_view start_symbol_;
  const TSLanguage* handle_;
};

/// Node of a concrete syntax tree. `kind` points into the grammar's static
/// symbol table, so nodes stay valid for the lifetime of the program.
struct SyntaxNode {
  std::string_view kind;
  std::uint32_t start_byte = 0;
  std::uint32_t end_byte = 0;
  bool named = false;
  std::vector<SyntaxNode> children;

  bool is_leaf() const noexcept { return children.empty(); }
};

struct SyntaxTree {
  SyntaxNode root;
  SourceText source;
  bool has_error = false;
};

struct ChildSymbol {
  std::string kind;
  bool named = false;

  auto operator<=>(const ChildSymbol&) const = default;
  bool operator==(const ChildSymbol&) const = default;
};

/// One grammar rule: a parent kind and the ordered kinds of its children.
/// The defaulted ordering is the canonical rule order (parent, then children
/// lexicographically by kind and named flag).
struct Production {
  std::string parent;
  std::vector<ChildSymbol> children;

  auto operator<=>(const Production&) const = default;
  bool operator==(const Production&) const = default;
};

/// Renders `parent → child child ...`, anonymous children quoted.
std::string to_string(const Production& production);

/// Production expanded at `node` (which must have children).
Production production_of(const SyntaxNode& node);

struct LeafInfo {
  std::string_view kind;
  bool named = false;
  std::uint32_t start_byte = 0;
  std::uint32_t end_byte = 0;
  /// Slice of the tree's source; valid while the tree is alive.
  std::string_view text;
};

SyntaxTree parse(SourceText source,
                 const Language& language = Language::python());

/// One Production per internal node in preorder. Throws TreeHasErrors.
std::vector<Production> internal_productions_preorder(const SyntaxTree& tree);

/// Leaf nodes in source order. A childless root is not reported as a leaf.
std::vector<LeafInfo> leaves_in_order(const SyntaxTree& tree);

std::size_t count_internal_nodes(const SyntaxTree& tree);

/// Whether an anonymous leaf of this kind always has the kind as its text.
/// Aliases spanning several tokens (`not in`, `is not`) carry their own text.
bool is_literal_kind(std::string_view kind) noexcept;

bool validate_syntax(const SourceText& source,
                     const Language& language = Language::python());

}  // namespace gramtok

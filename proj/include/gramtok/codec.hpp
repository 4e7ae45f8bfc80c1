#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gramtok/syntax.hpp"
#include "gramtok/vocab.hpp"

namespace gramtok {

/// exact: lossless, layout carried in GAP runs, decodable byte for byte.
/// canonical: structure only (rule tokens and named-leaf terminal runs).
enum class EncodeMode { exact, canonical };

std::string_view to_string(EncodeMode mode) noexcept;
/// Throws FormatError for anything but "exact" / "canonical".
EncodeMode parse_mode(std::string_view text);

struct TokenSequence {
  std::vector<TokenId> ids;
  std::vector<TokenClass> classes;
  EncodeMode mode = EncodeMode::exact;

  std::size_t size() const noexcept { return ids.size(); }
  bool operator==(const TokenSequence&) const = default;
};

/// Rebuilds `classes` from `ids`. Throws OutOfRange.
TokenSequence make_sequence(std::vector<TokenId> ids, EncodeMode mode,
                            const MergedVocab& vocab);

/// Preorder serialization. At every internal node the rule token of its
/// production is emitted; at every named leaf its bytes are segmented and
/// closed by END_OF_LEAF. In exact mode each non-empty inter-leaf gap is
/// emitted as GAP, segmented gap bytes, END_OF_LEAF before its leaf, and
/// bytes after the last leaf follow the tree as one trailing GAP run. When a
/// trailing run is present, anonymous leaves at the very end of the file get
/// an explicit (possibly empty) gap run so the trailing run is unambiguous.
///
/// Throws SyntaxInvalid for sources with parse errors and UnknownProduction
/// for productions absent from the vocab.
TokenSequence encode(const SourceText& source, const MergedVocab& vocab,
                     EncodeMode mode);
TokenSequence encode_tree(const SyntaxTree& tree, const MergedVocab& vocab,
                          EncodeMode mode);

/// Inverse of exact-mode encode. Throws ModeUnsupported, InvalidToken
/// (with position) or IncompleteSequence.
SourceText decode(const TokenSequence& seq, const MergedVocab& vocab);

struct PrefixState {
  enum class Status { open, complete, invalid };

  Status status = Status::open;
  /// Tokens consumed before stopping.
  std::size_t position = 0;
  /// Set when status == invalid.
  std::optional<std::size_t> invalid_position;
  std::string reason;
  /// Pending symbols, bottom first. Anonymous kinds are quoted.
  std::vector<std::string> stack;
};

std::string_view to_string(PrefixState::Status status) noexcept;

/// Runs the decoder's pushdown expectation over `ids` without producing
/// bytes. Accepts exact and canonical sequences alike.
PrefixState is_valid_prefix(std::span<const TokenId> ids, const MergedVocab& vocab);

/// One line per token: `index<TAB>id<TAB>class<TAB>symbol`.
/// Throws OutOfRange for ids outside the vocab.
std::string explain(std::span<const TokenId> ids, const MergedVocab& vocab);

/// Sequence file line: {"id": str, "mode": "exact"|"canonical", "ids": [...]}
std::string sequence_to_json(std::string_view id, const TokenSequence& seq);
/// Throws FormatError or OutOfRange.
std::pair<std::string, TokenSequence> sequence_from_json(std::string_view text,
                                                         const MergedVocab& vocab);

}  // namespace gramtok

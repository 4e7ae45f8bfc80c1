#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "gramtok/syntax.hpp"

namespace gramtok {

using TokenId = std::uint32_t;

/// Subword vocabulary with a ranked merge table. Token IDs are positions in
/// the token list. Construction validates that every byte value is a token
/// and that every merge joins two tokens into a third.
class BaseVocab {
 public:
  struct Merge {
    std::uint32_t rank;
    TokenId result;
  };

  BaseVocab() = default;

  /// Throws FormatError on duplicate tokens or bad merges, NotByteComplete if
  /// a byte value has no single-byte token.
  static BaseVocab from_parts(std::vector<std::string> tokens,
                              std::vector<std::pair<std::string, std::string>> merges);

  /// The 256 single-byte tokens in byte order, no merges.
  static BaseVocab byte_identity();

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::vector<std::pair<std::string, std::string>>& merges() const noexcept {
    return merges_;
  }

  std::optional<TokenId> find(std::string_view bytes) const;
  TokenId byte_token(unsigned char byte) const noexcept { return byte_ids_[byte]; }
  std::optional<Merge> merge_of(TokenId left, TokenId right) const;

  bool operator==(const BaseVocab& other) const {
    return tokens_ == other.tokens_ && merges_ == other.merges_;
  }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::unordered_map<std::string, TokenId> index_;
  std::unordered_map<std::uint64_t, Merge> merge_table_;
  std::array<TokenId, 256> byte_ids_{};
};

/// Reads `{ "tokens": [...], "merges": [[a, b], ...] }`, or the `base` object
/// of a full vocab file. Token strings use the byte-level escape.
BaseVocab load_base_vocab(const std::filesystem::path& path);
BaseVocab parse_base_vocab(std::string_view json_text);

/// Distinct productions in canonical order.
class RuleVocab {
 public:
  RuleVocab() = default;
  /// Sorts and deduplicates.
  static RuleVocab from_productions(std::vector<Production> productions);

  std::size_t size() const noexcept { return rules_.size(); }
  const std::vector<Production>& rules() const noexcept { return rules_; }
  std::optional<std::size_t> index_of(const Production& production) const;

  bool operator==(const RuleVocab&) const = default;

 private:
  std::vector<Production> rules_;
};

struct RuleVocabBuild {
  RuleVocab rules;
  std::size_t files_parsed = 0;
  std::size_t files_skipped = 0;
};

/// Collects every production of every parseable file; unparseable files are
/// skipped and counted. Throws EmptyCorpus when nothing parses.
RuleVocabBuild build_rule_vocab(std::span<const SourceText> corpus,
                                const Language& language = Language::python());

enum class TokenClass { terminal, sentinel, rule };
std::string_view to_string(TokenClass cls) noexcept;

enum class Sentinel { end_of_leaf, gap };
std::string_view sentinel_name(Sentinel s) noexcept;

struct TerminalSymbol {
  std::string bytes;
  bool operator==(const TerminalSymbol&) const = default;
};
using Symbol = std::variant<TerminalSymbol, Sentinel, Production>;

/// The grammar-augmented vocabulary. ID layout:
///   [0, m)            base subword tokens
///   m, m+1            END_OF_LEAF, GAP
///   [m+2, m+2+k)      grammar rules in canonical order
class MergedVocab {
 public:
  static constexpr std::size_t kSentinelCount = 2;

  MergedVocab() = default;
  MergedVocab(BaseVocab base, RuleVocab rules, std::string language);

  const BaseVocab& base() const noexcept { return base_; }
  const RuleVocab& rules() const noexcept { return rules_; }
  const std::string& language() const noexcept { return language_; }

  std::size_t m() const noexcept { return base_.size(); }
  std::size_t s() const noexcept { return kSentinelCount; }
  std::size_t k() const noexcept { return rules_.size(); }
  std::size_t total() const noexcept { return m() + s() + k(); }

  TokenId end_of_leaf() const noexcept { return static_cast<TokenId>(m()); }
  TokenId gap() const noexcept { return static_cast<TokenId>(m() + 1); }

  /// Throws OutOfRange.
  TokenClass classify(TokenId id) const;
  std::optional<TokenId> rule_id(const Production& production) const;
  /// Precondition: classify(id) == rule.
  const Production& rule(TokenId id) const;
  /// Precondition: classify(id) == terminal.
  const std::string& terminal_bytes(TokenId id) const;

  Symbol symbol_of(TokenId id) const;
  /// Throws OutOfRange for symbols not in the vocabulary.
  TokenId id_of(const Symbol& symbol) const;

  bool operator==(const MergedVocab& other) const {
    return language_ == other.language_ && base_ == other.base_ &&
           rules_ == other.rules_;
  }

 private:
  BaseVocab base_;
  RuleVocab rules_;
  std::string language_ = "python";
};

MergedVocab merge_vocabs(BaseVocab base, RuleVocab rules,
                         std::string language = "python");

/// Canonical file bytes: fixed key order, fixed indentation, trailing newline.
std::string serialize_vocab(const MergedVocab& vocab);
/// Throws FormatError or VersionMismatch.
MergedVocab parse_vocab(std::string_view json_text);

void save_vocab(const MergedVocab& vocab, const std::filesystem::path& path);
MergedVocab load_vocab(const std::filesystem::path& path);

/// Hex SHA-256 of serialize_vocab(vocab).
std::string vocab_digest(const MergedVocab& vocab);

}  // namespace gramtok

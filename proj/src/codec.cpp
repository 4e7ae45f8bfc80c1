#include "gramtok/codec.hpp"

#include <sstream>

#include "gramtok/bpe.hpp"
#include "gramtok/byte_escape.hpp"
#include "gramtok/error.hpp"
#include "json.hpp"

namespace gramtok {
namespace {

using json = nlohmann::json;

class Encoder {
 public:
  Encoder(const SyntaxTree& tree, const MergedVocab& vocab, EncodeMode mode)
      : tree_(tree), source_(tree.source.bytes), vocab_(vocab), mode_(mode) {}

  std::vector<TokenId> run() {
    if (!tree_.root.is_leaf()) walk(tree_.root);
    emit_trailing();
    return std::move(out_);
  }

 private:
  void push(TokenId id) {
    out_.push_back(id);
    pending_literals_ = 0;
  }

  void emit_run(std::string_view bytes) {
    for (TokenId id : bpe_segment(bytes, vocab_.base())) push(id);
    push(vocab_.end_of_leaf());
  }

  // Literal leaves emit no tokens, so the decoder still holds them when the
  // next GAP arrives and would attribute it to the first of them. Each one
  // gets an explicit empty gap run first.
  void emit_gap(std::string_view bytes) {
    for (std::size_t n = pending_literals_; n > 0; --n) {
      push(vocab_.gap());
      push(vocab_.end_of_leaf());
    }
    push(vocab_.gap());
    emit_run(bytes);
  }

  void walk(const SyntaxNode& node) {
    if (node.is_leaf()) {
      leaf(node);
      return;
    }
    if (!node.named) {
      throw Error(ErrorCode::UnknownProduction,
                  "anonymous node '" + std::string(node.kind) +
                      "' has children; it cannot be replayed from its literal",
                  node.start_byte);
    }
    Production p = production_of(node);
    auto id = vocab_.rule_id(p);
    if (!id) {
      throw Error(ErrorCode::UnknownProduction, to_string(p), node.start_byte);
    }
    push(*id);
    for (const auto& child : node.children) walk(child);
  }

  void leaf(const SyntaxNode& node) {
    if (node.start_byte < prev_end_ || node.end_byte > source_.size()) {
      throw Error(ErrorCode::SyntaxInvalid, "leaf spans are not ordered",
                  node.start_byte);
    }
    std::string_view text = source_.substr(node.start_byte,
                                           node.end_byte - node.start_byte);
    bool gap_emitted = false;
    if (mode_ == EncodeMode::exact && node.start_byte > prev_end_) {
      emit_gap(source_.substr(prev_end_, node.start_byte - prev_end_));
      gap_emitted = true;
    }
    if (node.named || !is_literal_kind(node.kind)) {
      emit_run(text);
    } else if (text != node.kind) {
      throw Error(ErrorCode::UnknownProduction,
                  "anonymous leaf '" + std::string(node.kind) +
                      "' has text " + quote_bytes(text) + " instead of its literal",
                  node.start_byte);
    } else if (!gap_emitted) {
      ++pending_literals_;
    }
    prev_end_ = node.end_byte;
  }

  void emit_trailing() {
    if (mode_ != EncodeMode::exact || prev_end_ >= source_.size()) return;
    emit_gap(source_.substr(prev_end_));
  }

  const SyntaxTree& tree_;
  std::string_view source_;
  const MergedVocab& vocab_;
  EncodeMode mode_;
  std::vector<TokenId> out_;
  std::size_t prev_end_ = 0;
  std::size_t pending_literals_ = 0;
};

// Pushdown replay of a token sequence. Shared by decode and prefix checks;
// bytes are only produced when an output string is attached.
class Replayer {
 public:
  Replayer(const MergedVocab& vocab, std::string* out)
      : vocab_(vocab), out_(out) {
    start_symbol_ = Language::get(vocab.language()).start_symbol();
    stack_.push_back({start_symbol_, true, false, true, false});
  }

  struct Failure {
    std::size_t position;
    std::string reason;
  };

  std::optional<Failure> feed(TokenId id) {
    std::size_t pos = consumed_;
    if (id >= vocab_.total()) {
      return Failure{pos, "token id " + std::to_string(id) + " is out of range"};
    }
    auto result = step(id, vocab_.classify(id));
    if (!result) ++consumed_;
    return result;
  }

  bool complete() const {
    if (consumed_ == 0 || phase_ != Phase::none) return false;
    for (const auto& f : stack_) {
      if (!f.literal) return false;
    }
    return true;
  }

  std::optional<std::string> unfinished_reason() const {
    if (phase_ == Phase::gap) return "unterminated gap run";
    if (phase_ == Phase::text) return "unterminated leaf text run";
    for (const auto& f : stack_) {
      if (f.root) return consumed_ == 0 ? std::nullopt
                                        : std::optional<std::string>("missing root rule");
      if (!f.literal) return "symbol '" + std::string(f.kind) + "' never produced";
    }
    return std::nullopt;
  }

  /// Emits literals of the anonymous leaves still pending.
  void flush() {
    while (!stack_.empty()) {
      if (out_ && stack_.back().literal) *out_ += stack_.back().kind;
      stack_.pop_back();
    }
  }

  std::size_t consumed() const { return consumed_; }

  std::vector<std::string> stack_view() const {
    std::vector<std::string> out;
    for (const auto& f : stack_) {
      out.push_back(f.named ? std::string(f.kind) : "\"" + std::string(f.kind) + "\"");
    }
    return out;
  }

 private:
  enum class Phase { none, gap, text };

  struct Frame {
    std::string_view kind;
    bool named;
    bool literal;  // replayed from its kind, consumes no tokens
    bool root;
    bool gap_taken;
  };

  void append(TokenId id) {
    if (out_) *out_ += vocab_.terminal_bytes(id);
  }

  void expand(const Production& p) {
    for (auto it = p.children.rbegin(); it != p.children.rend(); ++it) {
      bool literal = !it->named && is_literal_kind(it->kind);
      stack_.push_back({it->kind, it->named, literal, false, false});
    }
  }

  std::optional<Failure> fail(std::string reason) const {
    return Failure{consumed_, std::move(reason)};
  }

  std::optional<Failure> step(TokenId id, TokenClass cls) {
    const bool is_gap = id == vocab_.gap();
    const bool is_eol = id == vocab_.end_of_leaf();

    if (phase_ != Phase::none) {
      if (cls == TokenClass::terminal) {
        append(id);
        return std::nullopt;
      }
      if (is_eol) {
        if (phase_ == Phase::text) stack_.pop_back();
        if (phase_ == Phase::gap && stack_.empty()) finished_ = true;
        phase_ = Phase::none;
        return std::nullopt;
      }
      return fail(std::string("expected terminal or END_OF_LEAF inside a ") +
                  (phase_ == Phase::gap ? "gap" : "leaf") + " run, got " +
                  std::string(to_string(cls)));
    }

    for (;;) {
      if (stack_.empty()) {
        if (is_gap && !finished_) {
          phase_ = Phase::gap;
          return std::nullopt;
        }
        return fail("sequence is already complete");
      }
      Frame& top = stack_.back();

      if (top.root) {
        if (cls == TokenClass::rule && vocab_.rule(id).parent == top.kind) {
          stack_.pop_back();
          expand(vocab_.rule(id));
          return std::nullopt;
        }
        if (is_gap) {
          // childless root: only layout follows
          stack_.pop_back();
          phase_ = Phase::gap;
          return std::nullopt;
        }
        return fail("expected rule expanding '" + std::string(top.kind) +
                    "' or GAP, got " + std::string(to_string(cls)));
      }

      if (top.literal) {
        if (is_gap && !top.gap_taken) {
          top.gap_taken = true;
          phase_ = Phase::gap;
          return std::nullopt;
        }
        if (out_) *out_ += top.kind;
        stack_.pop_back();
        continue;
      }

      if (cls == TokenClass::rule) {
        const Production& p = vocab_.rule(id);
        if (!top.named) return fail("rule token where leaf text is expected");
        if (top.gap_taken) return fail("rule token after a leaf gap");
        if (p.parent != top.kind) {
          return fail("rule expands '" + p.parent + "' but '" +
                      std::string(top.kind) + "' is expected");
        }
        stack_.pop_back();
        expand(p);
        return std::nullopt;
      }
      if (is_gap) {
        if (top.gap_taken) return fail("second gap before one leaf");
        top.gap_taken = true;
        phase_ = Phase::gap;
        return std::nullopt;
      }
      if (is_eol) {
        stack_.pop_back();  // empty leaf text
        return std::nullopt;
      }
      append(id);
      phase_ = Phase::text;
      return std::nullopt;
    }
  }

  const MergedVocab& vocab_;
  std::string* out_;
  std::string_view start_symbol_;
  std::vector<Frame> stack_;
  Phase phase_ = Phase::none;
  bool finished_ = false;
  std::size_t consumed_ = 0;
};

}  // namespace

std::string_view to_string(EncodeMode mode) noexcept {
  return mode == EncodeMode::exact ? "exact" : "canonical";
}

EncodeMode parse_mode(std::string_view text) {
  if (text == "exact") return EncodeMode::exact;
  if (text == "canonical") return EncodeMode::canonical;
  throw Error(ErrorCode::FormatError, "unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(PrefixState::Status status) noexcept {
  switch (status) {
    case PrefixState::Status::open: return "open";
    case PrefixState::Status::complete: return "complete";
    case PrefixState::Status::invalid: return "invalid";
  }
  return "?";
}

TokenSequence make_sequence(std::vector<TokenId> ids, EncodeMode mode,
                            const MergedVocab& vocab) {
  TokenSequence seq;
  seq.classes.reserve(ids.size());
  for (TokenId id : ids) seq.classes.push_back(vocab.classify(id));
  seq.ids = std::move(ids);
  seq.mode = mode;
  return seq;
}

TokenSequence encode_tree(const SyntaxTree& tree, const MergedVocab& vocab,
                          EncodeMode mode) {
  if (tree.has_error) {
    throw Error(ErrorCode::SyntaxInvalid,
                "source does not parse" +
                    (tree.source.origin ? ": " + *tree.source.origin : std::string()));
  }
  return make_sequence(Encoder(tree, vocab, mode).run(), mode, vocab);
}

TokenSequence encode(const SourceText& source, const MergedVocab& vocab,
                     EncodeMode mode) {
  return encode_tree(parse(source, Language::get(vocab.language())), vocab, mode);
}

SourceText decode(const TokenSequence& seq, const MergedVocab& vocab) {
  if (seq.mode != EncodeMode::exact) {
    throw Error(ErrorCode::ModeUnsupported,
                "only exact-mode sequences can be decoded to bytes");
  }
  SourceText result;
  Replayer replay(vocab, &result.bytes);
  for (TokenId id : seq.ids) {
    if (auto failure = replay.feed(id)) {
      throw Error(ErrorCode::InvalidToken,
                  "at position " + std::to_string(failure->position) + ": " +
                      failure->reason,
                  failure->position);
    }
  }
  if (auto reason = replay.unfinished_reason()) {
    throw Error(ErrorCode::IncompleteSequence,
                *reason + " after " + std::to_string(seq.ids.size()) + " tokens",
                seq.ids.size());
  }
  replay.flush();
  return result;
}

PrefixState is_valid_prefix(std::span<const TokenId> ids, const MergedVocab& vocab) {
  PrefixState state;
  Replayer replay(vocab, nullptr);
  for (TokenId id : ids) {
    if (auto failure = replay.feed(id)) {
      state.status = PrefixState::Status::invalid;
      state.position = replay.consumed();
      state.invalid_position = failure->position;
      state.reason = std::move(failure->reason);
      state.stack = replay.stack_view();
      return state;
    }
  }
  state.position = replay.consumed();
  state.status = replay.complete() ? PrefixState::Status::complete
                                   : PrefixState::Status::open;
  state.stack = replay.stack_view();
  return state;
}

std::string explain(std::span<const TokenId> ids, const MergedVocab& vocab) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    TokenId id = ids[i];
    TokenClass cls = vocab.classify(id);
    out << i << '\t' << id << '\t' << to_string(cls) << '\t';
    switch (cls) {
      case TokenClass::terminal: out << quote_bytes(vocab.terminal_bytes(id)); break;
      case TokenClass::sentinel:
        out << '<' << sentinel_name(id == vocab.gap() ? Sentinel::gap : Sentinel::end_of_leaf)
            << '>';
        break;
      case TokenClass::rule: out << to_string(vocab.rule(id)); break;
    }
    out << '\n';
  }
  return out.str();
}

std::string sequence_to_json(std::string_view id, const TokenSequence& seq) {
  nlohmann::ordered_json doc;
  doc["id"] = std::string(id);
  doc["mode"] = std::string(to_string(seq.mode));
  doc["ids"] = seq.ids;
  return doc.dump();
}

std::pair<std::string, TokenSequence> sequence_from_json(std::string_view text,
                                                         const MergedVocab& vocab) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("invalid sequence JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("mode") || !doc.contains("ids") ||
      !doc.at("mode").is_string() || !doc.at("ids").is_array()) {
    throw Error(ErrorCode::FormatError, "sequence object needs 'mode' and 'ids'");
  }
  std::string id;
  if (doc.contains("id")) {
    if (!doc.at("id").is_string()) throw Error(ErrorCode::FormatError, "'id' must be a string");
    id = doc.at("id").get<std::string>();
  }
  std::vector<TokenId> ids;
  ids.reserve(doc.at("ids").size());
  for (const auto& v : doc.at("ids")) {
    if (!v.is_number_unsigned()) {
      throw Error(ErrorCode::FormatError, "'ids' must hold non-negative integers");
    }
    auto value = v.get<std::uint64_t>();
    if (value >= vocab.total()) {
      throw Error(ErrorCode::OutOfRange, "token id " + std::to_string(value) +
                                             " is outside the vocabulary");
    }
    ids.push_back(static_cast<TokenId>(value));
  }
  return {std::move(id),
          make_sequence(std::move(ids), parse_mode(doc.at("mode").get<std::string>()), vocab)};
}

}  // namespace gramtok

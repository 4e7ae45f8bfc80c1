#include "gramtok/vocab.hpp"

#include <algorithm>
#include <set>

#include "gramtok/byte_escape.hpp"
#include "gramtok/error.hpp"
#include "gramtok/io.hpp"
#include "json.hpp"

namespace gramtok {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

std::uint64_t pair_key(TokenId left, TokenId right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorCode::FormatError, what);
}

std::string unescape_or_throw(const json& value, std::string_view where) {
  if (!value.is_string()) format_error(std::string(where) + ": expected string");
  auto bytes = unescape_token(value.get_ref<const std::string&>());
  if (!bytes) {
    format_error(std::string(where) + ": token '" + value.get<std::string>() +
                 "' is outside the byte-level alphabet");
  }
  return *bytes;
}

BaseVocab base_from_json(const json& obj) {
  if (!obj.is_object()) format_error("base vocab must be a JSON object");
  if (!obj.contains("tokens")) format_error("base vocab is missing 'tokens'");
  if (!obj.contains("merges")) format_error("base vocab is missing 'merges'");
  const auto& tokens_json = obj.at("tokens");
  const auto& merges_json = obj.at("merges");
  if (!tokens_json.is_array()) format_error("'tokens' must be an array");
  if (!merges_json.is_array()) format_error("'merges' must be an array");

  std::vector<std::string> tokens;
  tokens.reserve(tokens_json.size());
  for (const auto& t : tokens_json) tokens.push_back(unescape_or_throw(t, "tokens"));

  std::vector<std::pair<std::string, std::string>> merges;
  merges.reserve(merges_json.size());
  for (const auto& m : merges_json) {
    if (!m.is_array() || m.size() != 2) {
      format_error("each merge must be a two-element array");
    }
    merges.emplace_back(unescape_or_throw(m[0], "merges"),
                        unescape_or_throw(m[1], "merges"));
  }
  return BaseVocab::from_parts(std::move(tokens), std::move(merges));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
}

Production rule_from_json(const json& r) {
  if (!r.is_object() || !r.contains("parent") || !r.contains("children") ||
      !r.at("parent").is_string() || !r.at("children").is_array()) {
    format_error("rule entries need a string 'parent' and an array 'children'");
  }
  Production p;
  p.parent = r.at("parent").get<std::string>();
  for (const auto& c : r.at("children")) {
    if (!c.is_object() || !c.contains("kind") || !c.contains("named") ||
        !c.at("kind").is_string() || !c.at("named").is_boolean()) {
      format_error("rule children need a string 'kind' and a boolean 'named'");
    }
    p.children.push_back({c.at("kind").get<std::string>(), c.at("named").get<bool>()});
  }
  if (p.children.empty()) format_error("rule '" + p.parent + "' has no children");
  return p;
}

}  // namespace

BaseVocab BaseVocab::from_parts(
    std::vector<std::string> tokens,
    std::vector<std::pair<std::string, std::string>> merges) {
  BaseVocab v;
  v.tokens_ = std::move(tokens);
  v.merges_ = std::move(merges);
  v.index_.reserve(v.tokens_.size());
  for (std::size_t i = 0; i < v.tokens_.size(); ++i) {
    const auto& tok = v.tokens_[i];
    if (tok.empty()) format_error("empty token at index " + std::to_string(i));
    if (!v.index_.emplace(tok, static_cast<TokenId>(i)).second) {
      format_error("duplicate token " + quote_bytes(tok));
    }
  }
  for (int b = 0; b < 256; ++b) {
    auto it = v.index_.find(std::string(1, static_cast<char>(b)));
    if (it == v.index_.end()) {
      throw Error(ErrorCode::NotByteComplete,
                  "no token for byte value " + std::to_string(b));
    }
    v.byte_ids_[b] = it->second;
  }
  for (std::size_t rank = 0; rank < v.merges_.size(); ++rank) {
    const auto& [left, right] = v.merges_[rank];
    auto l = v.index_.find(left);
    auto r = v.index_.find(right);
    auto joined = v.index_.find(left + right);
    if (l == v.index_.end() || r == v.index_.end() || joined == v.index_.end()) {
      format_error("merge " + std::to_string(rank) + " (" + quote_bytes(left) +
                   ", " + quote_bytes(right) + ") references an unknown token");
    }
    Merge m{static_cast<std::uint32_t>(rank), joined->second};
    if (!v.merge_table_.emplace(pair_key(l->second, r->second), m).second) {
      format_error("duplicate merge (" + quote_bytes(left) + ", " +
                   quote_bytes(right) + ")");
    }
  }
  return v;
}

BaseVocab BaseVocab::byte_identity() {
  std::vector<std::string> tokens;
  tokens.reserve(256);
  for (int b = 0; b < 256; ++b) tokens.emplace_back(1, static_cast<char>(b));
  return from_parts(std::move(tokens), {});
}

std::optional<TokenId> BaseVocab::find(std::string_view bytes) const {
  auto it = index_.find(std::string(bytes));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<BaseVocab::Merge> BaseVocab::merge_of(TokenId left,
                                                    TokenId right) const {
  auto it = merge_table_.find(pair_key(left, right));
  if (it == merge_table_.end()) return std::nullopt;
  return it->second;
}

BaseVocab parse_base_vocab(std::string_view json_text) {
  json doc = parse_json(json_text);
  if (doc.is_object() && doc.contains("base")) return base_from_json(doc.at("base"));
  return base_from_json(doc);
}

BaseVocab load_base_vocab(const std::filesystem::path& path) {
  return parse_base_vocab(read_file(path));
}

RuleVocab RuleVocab::from_productions(std::vector<Production> productions) {
  std::sort(productions.begin(), productions.end());
  productions.erase(std::unique(productions.begin(), productions.end()),
                    productions.end());
  RuleVocab v;
  v.rules_ = std::move(productions);
  return v;
}

std::optional<std::size_t> RuleVocab::index_of(const Production& production) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), production);
  if (it == rules_.end() || *it != production) return std::nullopt;
  return static_cast<std::size_t>(it - rules_.begin());
}

RuleVocabBuild build_rule_vocab(std::span<const SourceText> corpus,
                                const Language& language) {
  std::set<Production> seen;
  RuleVocabBuild out;
  for (const auto& source : corpus) {
    SyntaxTree tree = parse(source, language);
    if (tree.has_error) {
      ++out.files_skipped;
      continue;
    }
    ++out.files_parsed;
    for (auto& p : internal_productions_preorder(tree)) seen.insert(std::move(p));
  }
  if (out.files_parsed == 0) {
    throw Error(ErrorCode::EmptyCorpus,
                "no parseable files among " + std::to_string(corpus.size()));
  }
  out.rules = RuleVocab::from_productions({seen.begin(), seen.end()});
  return out;
}

std::string_view to_string(TokenClass cls) noexcept {
  switch (cls) {
    case TokenClass::terminal: return "terminal";
    case TokenClass::sentinel: return "sentinel";
    case TokenClass::rule: return "rule";
  }
  return "?";
}

std::string_view sentinel_name(Sentinel s) noexcept {
  return s == Sentinel::end_of_leaf ? "END_OF_LEAF" : "GAP";
}

MergedVocab::MergedVocab(BaseVocab base, RuleVocab rules, std::string language)
    : base_(std::move(base)), rules_(std::move(rules)), language_(std::move(language)) {}

TokenClass MergedVocab::classify(TokenId id) const {
  if (id < m()) return TokenClass::terminal;
  if (id < m() + s()) return TokenClass::sentinel;
  if (id < total()) return TokenClass::rule;
  throw Error(ErrorCode::OutOfRange,
              "token id " + std::to_string(id) + " is outside [0, " +
                  std::to_string(total()) + ")");
}

std::optional<TokenId> MergedVocab::rule_id(const Production& production) const {
  auto index = rules_.index_of(production);
  if (!index) return std::nullopt;
  return static_cast<TokenId>(m() + s() + *index);
}

const Production& MergedVocab::rule(TokenId id) const {
  return rules_.rules()[id - m() - s()];
}

const std::string& MergedVocab::terminal_bytes(TokenId id) const {
  return base_.tokens()[id];
}

Symbol MergedVocab::symbol_of(TokenId id) const {
  switch (classify(id)) {
    case TokenClass::terminal: return TerminalSymbol{terminal_bytes(id)};
    case TokenClass::sentinel:
      return id == end_of_leaf() ? Sentinel::end_of_leaf : Sentinel::gap;
    case TokenClass::rule: return rule(id);
  }
  throw Error(ErrorCode::OutOfRange, "unclassifiable id");
}

TokenId MergedVocab::id_of(const Symbol& symbol) const {
  if (const auto* t = std::get_if<TerminalSymbol>(&symbol)) {
    if (auto id = base_.find(t->bytes)) return *id;
    throw Error(ErrorCode::OutOfRange, "no terminal token " + quote_bytes(t->bytes));
  }
  if (const auto* s = std::get_if<Sentinel>(&symbol)) {
    return *s == Sentinel::end_of_leaf ? end_of_leaf() : gap();
  }
  const auto& p = std::get<Production>(symbol);
  if (auto id = rule_id(p)) return *id;
  throw Error(ErrorCode::OutOfRange, "no rule " + to_string(p));
}

MergedVocab merge_vocabs(BaseVocab base, RuleVocab rules, std::string language) {
  return MergedVocab(std::move(base), std::move(rules), std::move(language));
}

std::string serialize_vocab(const MergedVocab& vocab) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["language"] = vocab.language();

  ordered_json tokens = ordered_json::array();
  for (const auto& t : vocab.base().tokens()) tokens.push_back(escape_token_bytes(t));
  ordered_json merges = ordered_json::array();
  for (const auto& [l, r] : vocab.base().merges()) {
    merges.push_back(ordered_json::array({escape_token_bytes(l), escape_token_bytes(r)}));
  }
  doc["base"]["tokens"] = std::move(tokens);
  doc["base"]["merges"] = std::move(merges);
  doc["sentinels"] = ordered_json::array(
      {sentinel_name(Sentinel::end_of_leaf), sentinel_name(Sentinel::gap)});

  ordered_json rules = ordered_json::array();
  for (const auto& p : vocab.rules().rules()) {
    ordered_json children = ordered_json::array();
    for (const auto& c : p.children) {
      ordered_json child;
      child["kind"] = c.kind;
      child["named"] = c.named;
      children.push_back(std::move(child));
    }
    ordered_json rule;
    rule["parent"] = p.parent;
    rule["children"] = std::move(children);
    rules.push_back(std::move(rule));
  }
  doc["rules"] = std::move(rules);
  return doc.dump(1) + "\n";
}

MergedVocab parse_vocab(std::string_view json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object()) format_error("vocab file must be a JSON object");
  if (!doc.contains("format_version") || !doc.at("format_version").is_number_integer()) {
    format_error("missing integer 'format_version'");
  }
  if (doc.at("format_version").get<long long>() != kFormatVersion) {
    throw Error(ErrorCode::VersionMismatch,
                "unsupported format_version " + doc.at("format_version").dump());
  }
  for (const char* key : {"language", "base", "sentinels", "rules"}) {
    if (!doc.contains(key)) format_error(std::string("missing key '") + key + "'");
  }
  if (!doc.at("language").is_string()) format_error("'language' must be a string");
  if (doc.at("sentinels") != json::array({"END_OF_LEAF", "GAP"})) {
    format_error("'sentinels' must be [\"END_OF_LEAF\", \"GAP\"]");
  }
  BaseVocab base = base_from_json(doc.at("base"));

  const auto& rules_json = doc.at("rules");
  if (!rules_json.is_array()) format_error("'rules' must be an array");
  std::vector<Production> rules;
  rules.reserve(rules_json.size());
  for (const auto& r : rules_json) {
    Production p = rule_from_json(r);
    if (!rules.empty()) {
      if (p == rules.back()) format_error("duplicated rule " + to_string(p));
      if (p < rules.back()) format_error("rule " + to_string(p) + " is out of canonical order");
    }
    rules.push_back(std::move(p));
  }
  return MergedVocab(std::move(base), RuleVocab::from_productions(std::move(rules)),
                     doc.at("language").get<std::string>());
}

void save_vocab(const MergedVocab& vocab, const std::filesystem::path& path) {
  write_file(path, serialize_vocab(vocab));
}

MergedVocab load_vocab(const std::filesystem::path& path) {
  return parse_vocab(read_file(path));
}

std::string vocab_digest(const MergedVocab& vocab) {
  return sha256_hex(serialize_vocab(vocab));
}

}  // namespace gramtok

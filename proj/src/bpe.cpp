#include "gramtok/bpe.hpp"

#include <queue>

namespace gramtok {
namespace {

struct Candidate {
  std::uint32_t rank;
  std::size_t pos;
  TokenId left;
  TokenId right;

  // min-heap on (rank, pos)
  bool operator<(const Candidate& o) const {
    if (rank != o.rank) return rank > o.rank;
    return pos > o.pos;
  }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::vector<TokenId> bpe_segment(std::string_view text, const BaseVocab& base) {
  const std::size_t n = text.size();
  std::vector<TokenId> sym(n);
  std::vector<std::size_t> prev(n), next(n);
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    sym[i] = base.byte_token(static_cast<unsigned char>(text[i]));
    prev[i] = i == 0 ? kNone : i - 1;
    next[i] = i + 1 < n ? i + 1 : kNone;
  }

  std::priority_queue<Candidate> queue;
  auto push = [&](std::size_t pos) {
    if (pos == kNone || next[pos] == kNone) return;
    if (auto m = base.merge_of(sym[pos], sym[next[pos]])) {
      queue.push({m->rank, pos, sym[pos], sym[next[pos]]});
    }
  };
  for (std::size_t i = 0; i + 1 < n; ++i) push(i);

  while (!queue.empty()) {
    Candidate c = queue.top();
    queue.pop();
    // stale entries: either side was merged away or changed since queued
    if (!alive[c.pos] || sym[c.pos] != c.left) continue;
    std::size_t r = next[c.pos];
    if (r == kNone || sym[r] != c.right) continue;

    sym[c.pos] = base.merge_of(c.left, c.right)->result;
    alive[r] = false;
    next[c.pos] = next[r];
    if (next[r] != kNone) prev[next[r]] = c.pos;
    push(prev[c.pos]);
    push(c.pos);
  }

  std::vector<TokenId> out;
  for (std::size_t i = 0; i < n; i = next[i]) {
    out.push_back(sym[i]);
    if (next[i] == kNone) break;
  }
  return out;
}

std::string join_tokens(const std::vector<TokenId>& ids, const BaseVocab& base) {
  std::string out;
  for (TokenId id : ids) out += base.tokens().at(id);
  return out;
}

}  // namespace gramtok

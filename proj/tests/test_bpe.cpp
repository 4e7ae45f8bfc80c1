#include <random>

#include "doctest.h"
#include "gramtok/bpe.hpp"
#include "support.hpp"

using namespace gramtok;

namespace {

// One merge per step: the lowest-ranked adjacent pair, leftmost on ties.
std::vector<std::string> naive_bpe(std::string_view text,
                                   const std::vector<std::pair<std::string, std::string>>& merges) {
  std::vector<std::string> parts;
  for (char c : text) parts.emplace_back(1, c);
  while (true) {
    std::size_t best_rank = merges.size(), best_pos = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      for (std::size_t r = 0; r < best_rank; ++r) {
        if (merges[r].first == parts[i] && merges[r].second == parts[i + 1]) {
          best_rank = r;
          best_pos = i;
          break;
        }
      }
    }
    if (best_rank == merges.size()) return parts;
    parts[best_pos] += parts[best_pos + 1];
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1);
  }
}

BaseVocab ab_vocab() {
  std::vector<std::string> tokens;
  for (int b = 0; b < 256; ++b) tokens.emplace_back(1, static_cast<char>(b));
  tokens.push_back("ab");
  return BaseVocab::from_parts(tokens, {{"a", "b"}});
}

}  // namespace

TEST_CASE("small hand examples") {
  auto base = ab_vocab();
  auto seg = bpe_segment("aab", base);
  REQUIRE(seg.size() == 2);
  CHECK(seg[0] == base.byte_token('a'));
  CHECK(seg[1] == 256);
  CHECK(bpe_segment("", base).empty());
  CHECK(bpe_segment("ba", base).size() == 2);
  CHECK(bpe_segment("abab", base) == std::vector<TokenId>{256, 256});

  auto identity = BaseVocab::byte_identity();
  CHECK(bpe_segment("hello", identity).size() == 5);
}

TEST_CASE("segmentation is faithful on random bytes") {
  const auto& base = testing::fixture_base();
  std::mt19937 rng(1234);
  for (int i = 0; i < 300; ++i) {
    std::string s(rng() % 64, '\0');
    for (auto& c : s) c = static_cast<char>(rng() % 256);
    CHECK(join_tokens(bpe_segment(s, base), base) == s);
  }
}

TEST_CASE("segmentation matches a one-merge-at-a-time reference") {
  const auto& base = testing::fixture_base();
  const auto& merges = base.merges();
  std::mt19937 rng(42);
  int checked = 0;
  for (const auto& rec : testing::fixture_corpus()) {
    const auto& bytes = rec.source.bytes;
    if (bytes.empty()) continue;
    // random windows keep the quadratic reference affordable
    for (int w = 0; w < 3; ++w) {
      std::size_t start = rng() % bytes.size();
      std::size_t len = std::min<std::size_t>(1 + rng() % 80, bytes.size() - start);
      std::string_view window(bytes.data() + start, len);
      std::vector<std::string> ours;
      for (TokenId id : bpe_segment(window, base)) ours.push_back(base.tokens()[id]);
      CHECK(ours == naive_bpe(window, merges));
      ++checked;
    }
  }
  CHECK(checked > 600);
}

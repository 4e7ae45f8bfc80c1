#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace testing {

namespace fs = std::filesystem;

fs::path fixture_dir() { return fs::path(GRAMTOK_FIXTURE_DIR); }

const std::vector<gramtok::CorpusRecord>& fixture_corpus() {
  static const auto records = gramtok::load_corpus_dir(fixture_dir() / "corpus");
  return records;
}

const gramtok::BaseVocab& fixture_base() {
  static const auto base = gramtok::load_base_vocab(fixture_dir() / "base_vocab.json");
  return base;
}

const gramtok::MergedVocab& fixture_vocab() {
  static const auto vocab = [] {
    auto sources = sources_of(fixture_corpus());
    for (const auto& entry : fs::directory_iterator(fixture_dir() / "pairs")) {
      for (auto& pair : gramtok::load_pairs_jsonl(entry.path())) {
        sources.push_back(std::move(pair.error_code));
        sources.push_back(std::move(pair.correct_code));
      }
    }
    auto built = gramtok::build_rule_vocab(sources);
    return gramtok::merge_vocabs(fixture_base(), std::move(built.rules));
  }();
  return vocab;
}

std::vector<gramtok::PairRecord> fixture_pairs(const std::string& name) {
  return gramtok::load_pairs_jsonl(fixture_dir() / "pairs" / name);
}

std::vector<gramtok::SourceText> sources_of(const std::vector<gramtok::CorpusRecord>& records) {
  std::vector<gramtok::SourceText> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.source);
  return out;
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  path_ = fs::temp_directory_path() /
          ("gramtok-" + tag + "-" + std::to_string(stamp) + "-" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::size_t recursive_edit_distance(const std::vector<std::uint32_t>& a, std::size_t i,
                                    const std::vector<std::uint32_t>& b, std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  if (a[i] == b[j]) return recursive_edit_distance(a, i + 1, b, j + 1);
  return 1 + std::min({recursive_edit_distance(a, i + 1, b, j),
                       recursive_edit_distance(a, i, b, j + 1),
                       recursive_edit_distance(a, i + 1, b, j + 1)});
}

}  // namespace testing

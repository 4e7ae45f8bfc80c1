#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "gramtok/analysis.hpp"
#include "gramtok/corpus.hpp"
#include "gramtok/vocab.hpp"

namespace testing {

std::filesystem::path fixture_dir();

/// tests/fixtures/corpus, loaded once.
const std::vector<gramtok::CorpusRecord>& fixture_corpus();
const gramtok::BaseVocab& fixture_base();

/// Base fixture vocab plus every rule of the fixture corpus and the pair
/// fixtures.
const gramtok::MergedVocab& fixture_vocab();

std::vector<gramtok::PairRecord> fixture_pairs(const std::string& name);

std::vector<gramtok::SourceText> sources_of(const std::vector<gramtok::CorpusRecord>& records);

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// Reference Levenshtein distance from the plain recursive definition,
/// exponential time; only for short inputs.
std::size_t recursive_edit_distance(const std::vector<std::uint32_t>& a, std::size_t i,
                                    const std::vector<std::uint32_t>& b, std::size_t j);

}  // namespace testing

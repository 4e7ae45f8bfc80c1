#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gramtok/vocab.hpp"

namespace gramtok {

/// Byte-pair segmentation of raw bytes: start from one symbol per byte and
/// repeatedly apply the lowest-ranked applicable merge (leftmost first on
/// ties) until none applies. No pre-tokenization is performed.
std::vector<TokenId> bpe_segment(std::string_view text, const BaseVocab& base);

/// Concatenated bytes of the given base tokens.
std::string join_tokens(const std::vector<TokenId>& ids, const BaseVocab& base);

}  // namespace gramtok

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gramtok {

// Token byte strings are stored in vocab files with the byte-level escape
// used by GPT-2 style BPE vocabularies: every byte value maps to one
// printable Unicode code point (printable Latin-1 bytes map to themselves,
// the remaining 68 byte values map to U+0100..U+0143). The escaped form is
// always valid UTF-8 and the mapping is a bijection on byte strings.

std::string escape_token_bytes(std::string_view bytes);

/// Inverse of escape_token_bytes; nullopt if `escaped` is not valid UTF-8
/// or contains a code point outside the 256-symbol byte alphabet.
std::optional<std::string> unescape_token(std::string_view escaped);

/// C-style quoted rendering for diagnostics: "get", "\n", "\xe4".
std::string quote_bytes(std::string_view bytes);

}  // namespace gramtok

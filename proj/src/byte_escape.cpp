#include "gramtok/byte_escape.hpp"

#include <array>
#include <cstdint>

namespace gramtok {
namespace {

struct ByteAlphabet {
  std::array<char32_t, 256> to_code{};
  // code points used are all below 0x144
  std::array<int, 0x144> to_byte{};

  ByteAlphabet() {
    to_byte.fill(-1);
    auto direct = [](int b) {
      return (b >= '!' && b <= '~') || (b >= 0xA1 && b <= 0xAC) ||
             (b >= 0xAE && b <= 0xFF);
    };
    char32_t next = 256;
    for (int b = 0; b < 256; ++b) {
      char32_t cp = direct(b) ? static_cast<char32_t>(b) : next++;
      to_code[b] = cp;
      to_byte[cp] = b;
    }
  }
};

const ByteAlphabet& alphabet() {
  static const ByteAlphabet table;
  return table;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

std::string escape_token_bytes(std::string_view bytes) {
  const auto& table = alphabet();
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) append_utf8(out, table.to_code[b]);
  return out;
}

std::optional<std::string> unescape_token(std::string_view escaped) {
  const auto& table = alphabet();
  std::string out;
  out.reserve(escaped.size());
  std::size_t i = 0;
  while (i < escaped.size()) {
    auto lead = static_cast<unsigned char>(escaped[i]);
    char32_t cp;
    std::size_t len;
    if (lead < 0x80) {
      cp = lead;
      len = 1;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      len = 2;
    } else {
      // every code point of the alphabet fits in two UTF-8 bytes
      return std::nullopt;
    }
    if (i + len > escaped.size()) return std::nullopt;
    for (std::size_t j = 1; j < len; ++j) {
      auto cont = static_cast<unsigned char>(escaped[i + j]);
      if ((cont & 0xC0) != 0x80) return std::nullopt;
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (len == 2 && cp < 0x80) return std::nullopt;  // overlong
    if (cp >= table.to_byte.size() || table.to_byte[cp] < 0) return std::nullopt;
    out += static_cast<char>(table.to_byte[cp]);
    i += len;
  }
  return out;
}

std::string quote_bytes(std::string_view bytes) {
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "\"";
  for (unsigned char c : bytes) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      default:
        if (c < 0x20 || c >= 0x7F) {
          out += "\\x";
          out += hex[c >> 4];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

}  // namespace gramtok

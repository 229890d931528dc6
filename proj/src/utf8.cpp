#include "clozeforge/utf8.hpp"

#include "clozeforge/errors.hpp"

namespace clozeforge::utf8 {

namespace {

// Decodes one code point starting at bytes[i]. Returns false on malformed
// sequences (bad continuation bytes, overlong forms, surrogates, > U+10FFFF).
bool decode_one(std::string_view bytes, std::size_t& i, char32_t& cp) {
  const auto b0 = static_cast<unsigned char>(bytes[i]);
  if (b0 < 0x80) {
    cp = b0;
    i += 1;
    return true;
  }
  int len;
  char32_t min_cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
    min_cp = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
    min_cp = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
    min_cp = 0x10000;
  } else {
    return false;
  }
  if (i + len > bytes.size()) return false;
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(bytes[i + k]);
    if ((b & 0xC0) != 0x80) return false;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min_cp) return false;
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
  i += len;
  return true;
}

}  // namespace

bool decode(std::string_view bytes, std::vector<char32_t>& out) {
  out.clear();
  out.reserve(bytes.size());
  std::size_t i = 0;
  char32_t cp;
  while (i < bytes.size()) {
    if (!decode_one(bytes, i, cp)) return false;
    out.push_back(cp);
  }
  return true;
}

std::vector<char32_t> decode_or_throw(std::string_view bytes, std::string_view what) {
  std::vector<char32_t> out;
  if (!decode(bytes, out)) {
    throw DataError("malformed UTF-8 in " + std::string(what));
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  append(out, cp);
  return out;
}

std::size_t length(std::string_view bytes) {
  std::size_t i = 0, n = 0;
  char32_t cp;
  while (i < bytes.size()) {
    if (!decode_one(bytes, i, cp)) throw DataError("malformed UTF-8");
    ++n;
  }
  return n;
}

std::string substr(std::string_view bytes, std::size_t cp_start, std::size_t cp_end) {
  std::size_t i = 0, n = 0;
  std::size_t byte_start = bytes.size();
  char32_t cp;
  while (i < bytes.size() && n < cp_end) {
    if (n == cp_start) byte_start = i;
    if (!decode_one(bytes, i, cp)) throw DataError("malformed UTF-8");
    ++n;
  }
  if (cp_start >= cp_end || byte_start == bytes.size()) return {};
  return std::string(bytes.substr(byte_start, i - byte_start));
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:  // no-break space
    case 0x202F:  // narrow no-break space
    case 0x3000:  // ideographic space
    case 0x200B:  // zero width space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  }
  // Latin-1 punctuation and signs, incl. currency and ¿¡«».
  if (cp >= 0x00A1 && cp <= 0x00BF) return true;
  // General punctuation block, minus the space characters handled above.
  if (cp >= 0x2010 && cp <= 0x2027) return true;
  if (cp >= 0x2030 && cp <= 0x205E) return true;
  // Currency symbols (€ and friends).
  if (cp >= 0x20A0 && cp <= 0x20BF) return true;
  // CJK brackets and fullwidth forms occasionally seen in crawled text.
  if (cp >= 0x3001 && cp <= 0x3011) return true;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;
  return false;
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

}  // namespace clozeforge::utf8

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seedsel/text.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>

#include "seedsel/error.hpp"

namespace seedsel {

char32_t utf8_next(std::string_view text, size_t* pos) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  size_t i = *pos;
  unsigned char b0 = bytes[i];
  size_t len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    *pos = i + 1;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    *pos = i + 1;
    return b0;  // stray continuation or invalid lead byte
  }
  if (i + len > text.size()) {
    *pos = i + 1;
    return b0;
  }
  for (size_t k = 1; k < len; ++k) {
    unsigned char bk = bytes[i + k];
    if ((bk & 0xC0) != 0x80) {
      *pos = i + 1;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  *pos = i + len;
  return cp;
}

std::vector<uint32_t> utf8_offsets(std::string_view text) {
  std::vector<uint32_t> offsets;
  offsets.reserve(text.size() + 1);
  size_t pos = 0;
  while (pos < text.size()) {
    offsets.push_back(static_cast<uint32_t>(pos));
    utf8_next(text, &pos);
  }
  offsets.push_back(static_cast<uint32_t>(text.size()));
  return offsets;
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case 0x0085:  // next line
    case 0x00A0:  // no-break space
    case 0x1680:  // ogham space mark
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
    case 0x202F:  // narrow no-break space
    case 0x205F:  // medium mathematical space
    case 0x3000:  // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;  // en quad .. hair space
  }
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0x00A1:  // inverted exclamation
    case 0x00AB:  // left guillemet
    case 0x00B7:  // middle dot
    case 0x00BB:  // right guillemet
    case 0x00BF:  // inverted question
    case 0x2010:  // hyphen
    case 0x2011:
    case 0x2012:
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2015:
    case 0x2018:  // single quotes
    case 0x2019:
    case 0x201A:
    case 0x201C:  // double quotes
    case 0x201D:
    case 0x201E:
    case 0x2026:  // ellipsis
    case 0x2039:  // single guillemets
    case 0x203A:
    case 0x3001:  // ideographic comma
    case 0x3002:  // ideographic full stop
    case 0x3008:  // CJK brackets
    case 0x3009:
    case 0x300A:
    case 0x300B:
    case 0x300C:
    case 0x300D:
    case 0x300E:
    case 0x300F:
    case 0x3010:
    case 0x3011:
    case 0x30FB:  // katakana middle dot
    case 0xFF01:  // fullwidth ! , . : ; ? ( )
    case 0xFF0C:
    case 0xFF0E:
    case 0xFF1A:
    case 0xFF1B:
    case 0xFF1F:
    case 0xFF08:
    case 0xFF09:
      return true;
    default:
      return false;
  }
}

namespace {

void append_cp(std::string* out, std::string_view text, size_t begin, size_t end) {
  out->append(text.substr(begin, end - begin));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  struct Cp {
    char32_t cp;
    uint32_t begin;
    uint32_t end;
  };
  std::vector<Cp> chunk;
  size_t pos = 0;
  auto flush = [&]() {
    if (chunk.empty()) return;
    size_t lead = 0;
    size_t trail = chunk.size();
    while (lead < trail && is_punct_cp(chunk[lead].cp)) ++lead;
    while (trail > lead && is_punct_cp(chunk[trail - 1].cp)) --trail;
    for (size_t i = 0; i < lead; ++i) {
      std::string t;
      append_cp(&t, text, chunk[i].begin, chunk[i].end);
      tokens.push_back(std::move(t));
    }
    if (lead < trail) {
      std::string t;
      append_cp(&t, text, chunk[lead].begin, chunk[trail - 1].end);
      tokens.push_back(std::move(t));
    }
    for (size_t i = trail; i < chunk.size(); ++i) {
      std::string t;
      append_cp(&t, text, chunk[i].begin, chunk[i].end);
      tokens.push_back(std::move(t));
    }
    chunk.clear();
  };
  while (pos < text.size()) {
    size_t begin = pos;
    char32_t cp = utf8_next(text, &pos);
    if (is_space_cp(cp)) {
      flush();
    } else {
      chunk.push_back({cp, static_cast<uint32_t>(begin), static_cast<uint32_t>(pos)});
    }
  }
  flush();
  return tokens;
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t begin = pos;
    char32_t cp = utf8_next(text, &pos);
    if (!is_space_cp(cp)) out.append(text.substr(begin, pos - begin));
  }
  return out;
}

uint64_t fnv1a64(std::string_view bytes, uint64_t state) {
  for (unsigned char b : bytes) {
    state ^= b;
    state *= 0x00000100000001b3ull;
  }
  return state;
}

std::string to_hex(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

std::string format_double(double value) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

void write_file_atomic(const std::string& path, std::string_view content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw Error(Errc::io_error, "short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::io_error, "rename to " + path + ": " + ec.message());
}

}  // namespace seedsel

// Copyright 2026 The Framescore Authors.
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

#include "framescore/utf8.h"

namespace framescore {
namespace utf8 {
namespace {

// Length in bytes of the sequence starting at text[pos], or 0 if malformed.
std::size_t SequenceLength(std::string_view text, std::size_t pos,
                           char32_t *out) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  std::size_t len;
  char32_t cp;
  if (lead < 0x80) {
    *out = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlong forms, surrogates and out-of-range values.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  *out = cp;
  return len;
}

template <typename Fn>
void ForEach(std::string_view text, Fn &&fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    std::size_t len = SequenceLength(text, pos, &cp);
    if (len == 0) {
      cp = 0xFFFD;
      len = 1;
    }
    fn(cp, text.substr(pos, len));
    pos += len;
  }
}

}  // namespace

std::vector<char32_t> Decode(std::string_view text) {
  std::vector<char32_t> result;
  result.reserve(text.size());
  ForEach(text, [&](char32_t cp, std::string_view) { result.push_back(cp); });
  return result;
}

std::size_t Length(std::string_view text) {
  std::size_t n = 0;
  ForEach(text, [&](char32_t, std::string_view) { ++n; });
  return n;
}

std::vector<std::string_view> Characters(std::string_view text) {
  std::vector<std::string_view> result;
  ForEach(text, [&](char32_t, std::string_view c) { result.push_back(c); });
  return result;
}

bool IsWhitespace(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool IsHan(char32_t c) {
  return (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF) ||
         (c >= 0xF900 && c <= 0xFAFF) || (c >= 0x20000 && c <= 0x2FA1F);
}

}  // namespace utf8
}  // namespace framescore

// utf8.cc
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
//
// Copyright 2026 The translitfst Authors.

#include "translit/utf8.h"

#include "translit/util.h"

namespace translit {

namespace {

[[noreturn]] void BadUtf8(size_t pos) {
  throw ParseError("malformed UTF-8 at byte offset " + std::to_string(pos));
}

}  // namespace

char32_t DecodeCodepoint(std::string_view s, size_t *pos) {
  size_t i = *pos;
  auto byte = [&](size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  int len;
  char32_t cp;
  if (b0 < 0x80) {
    len = 1;
    cp = b0;
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
    BadUtf8(i);
  }
  if (i + len > s.size()) BadUtf8(i);
  for (int k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) BadUtf8(i + k);
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong encodings, surrogates, out-of-range values.
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) BadUtf8(i);
  if (cp >= 0xD800 && cp <= 0xDFFF) BadUtf8(i);
  if (cp > 0x10FFFF) BadUtf8(i);
  *pos = i + len;
  return cp;
}

std::string EncodeCodepoint(char32_t cp) {
  std::string out;
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
  return out;
}

std::vector<std::string> SplitCodepoints(std::string_view s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t begin = pos;
    DecodeCodepoint(s, &pos);
    out.emplace_back(s.substr(begin, pos - begin));
  }
  return out;
}

std::vector<char32_t> DecodeString(std::string_view s) {
  std::vector<char32_t> out;
  size_t pos = 0;
  while (pos < s.size()) out.push_back(DecodeCodepoint(s, &pos));
  return out;
}

char32_t CodepointOf(std::string_view utf8_char) {
  size_t pos = 0;
  char32_t cp = DecodeCodepoint(utf8_char, &pos);
  if (pos != utf8_char.size()) {
    throw ParseError("expected a single codepoint, got \"" +
                     std::string(utf8_char) + "\"");
  }
  return cp;
}

}  // namespace translit

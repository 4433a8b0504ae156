// utf8.h
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
//
// Minimal UTF-8 handling. The toolkit treats a word as a sequence of
// unicode codepoints; each codepoint is passed around as its UTF-8 byte
// string so it can double as a symbol-table key.

#ifndef TRANSLIT_UTF8_H_
#define TRANSLIT_UTF8_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace translit {

// Decodes one codepoint starting at *pos, advances *pos past it.
// Throws ParseError on malformed input (truncated sequences, overlong
// encodings, surrogates, values above U+10FFFF).
char32_t DecodeCodepoint(std::string_view s, size_t *pos);

std::string EncodeCodepoint(char32_t cp);

// Splits a UTF-8 string into per-codepoint UTF-8 substrings.
std::vector<std::string> SplitCodepoints(std::string_view s);

// Decodes a UTF-8 string into codepoint values.
std::vector<char32_t> DecodeString(std::string_view s);

// Codepoint value of a single-codepoint string (as produced by
// SplitCodepoints); throws ParseError otherwise.
char32_t CodepointOf(std::string_view utf8_char);

}  // namespace translit

#endif  // TRANSLIT_UTF8_H_

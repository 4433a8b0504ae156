// script.h
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

#ifndef TRANSLIT_SCRIPT_H_
#define TRANSLIT_SCRIPT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace translit {

enum class ScriptTag {
  kDevanagari,
  kBengali,
  kTamil,
  kKannada,
  kLatin,
  kMixed,
  kOther,
};

const char *ScriptName(ScriptTag tag);
bool IsNativeScript(ScriptTag tag);

// Per-token classification by unicode block membership: Devanagari
// U+0900-097F, Bengali U+0980-09FF, Tamil U+0B80-0BFF, Kannada
// U+0C80-0CFF, Latin letters (basic through extended). Mixed when two or
// more of those blocks co-occur; ASCII digits and combining diacritics
// are transparent. Throws ParseError on an empty token.
ScriptTag DetectScript(const std::string &token);

// Exact codepoint counts over the stream, whitespace excluded; keys are
// per-codepoint UTF-8 strings, so map order is codepoint order.
std::map<std::string, uint64_t> GraphemeInventory(std::istream &in);
std::map<std::string, uint64_t> GraphemeInventory(
    const std::vector<std::string> &lines);

}  // namespace translit

#endif  // TRANSLIT_SCRIPT_H_

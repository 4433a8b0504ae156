// script.cc
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

#include "translit/script.h"

#include <istream>

#include "translit/utf8.h"
#include "translit/util.h"

namespace translit {

namespace {

bool IsLatinLetter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
         (cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xF6) ||
         (cp >= 0xF8 && cp <= 0x24F) ||     // Latin-1 tail + Extended-A/B
         (cp >= 0x1E00 && cp <= 0x1EFF);    // Latin Extended Additional
}

bool IsTransparent(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') ||
         (cp >= 0x300 && cp <= 0x36F);  // combining diacritical marks
}

}  // namespace

const char *ScriptName(ScriptTag tag) {
  switch (tag) {
    case ScriptTag::kDevanagari: return "Devanagari";
    case ScriptTag::kBengali: return "Bengali";
    case ScriptTag::kTamil: return "Tamil";
    case ScriptTag::kKannada: return "Kannada";
    case ScriptTag::kLatin: return "Latin";
    case ScriptTag::kMixed: return "Mixed";
    case ScriptTag::kOther: return "Other";
  }
  return "Other";
}

bool IsNativeScript(ScriptTag tag) {
  return tag == ScriptTag::kDevanagari || tag == ScriptTag::kBengali ||
         tag == ScriptTag::kTamil || tag == ScriptTag::kKannada;
}

ScriptTag DetectScript(const std::string &token) {
  if (token.empty()) throw ParseError("DetectScript: empty token");
  bool seen[5] = {false, false, false, false, false};
  for (char32_t cp : DecodeString(token)) {
    if (IsTransparent(cp)) continue;
    if (cp >= 0x900 && cp <= 0x97F) seen[0] = true;
    else if (cp >= 0x980 && cp <= 0x9FF) seen[1] = true;
    else if (cp >= 0xB80 && cp <= 0xBFF) seen[2] = true;
    else if (cp >= 0xC80 && cp <= 0xCFF) seen[3] = true;
    else if (IsLatinLetter(cp)) seen[4] = true;
  }
  int blocks = 0;
  int which = -1;
  for (int i = 0; i < 5; ++i) {
    if (seen[i]) {
      ++blocks;
      which = i;
    }
  }
  if (blocks >= 2) return ScriptTag::kMixed;
  if (blocks == 0) return ScriptTag::kOther;
  switch (which) {
    case 0: return ScriptTag::kDevanagari;
    case 1: return ScriptTag::kBengali;
    case 2: return ScriptTag::kTamil;
    case 3: return ScriptTag::kKannada;
    default: return ScriptTag::kLatin;
  }
}

std::map<std::string, uint64_t> GraphemeInventory(
    const std::vector<std::string> &lines) {
  std::map<std::string, uint64_t> counts;
  for (const std::string &line : lines) {
    for (const std::string &cp : SplitCodepoints(line)) {
      if (cp == " " || cp == "\t" || cp == "\r" || cp == "\n") continue;
      ++counts[cp];
    }
  }
  return counts;
}

std::map<std::string, uint64_t> GraphemeInventory(std::istream &in) {
  std::map<std::string, uint64_t> counts;
  std::string line;
  while (std::getline(in, line)) {
    for (const std::string &cp : SplitCodepoints(line)) {
      if (cp == " " || cp == "\t" || cp == "\r") continue;
      ++counts[cp];
    }
  }
  return counts;
}

}  // namespace translit

// util.cc
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

#include "translit/util.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace translit {

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> fields;
  size_t begin = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      fields.emplace_back(s.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  return fields;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> fields;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t begin = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > begin) fields.emplace_back(s.substr(begin, i - begin));
  }
  return fields;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

double ParseDouble(std::string_view s) {
  std::string str(s);
  errno = 0;
  char *end = nullptr;
  double value = std::strtod(str.c_str(), &end);
  if (end != str.c_str() + str.size() || str.empty() || errno == ERANGE) {
    throw ParseError("bad number: \"" + str + "\"");
  }
  return value;
}

long long ParseCount(std::string_view s) {
  std::string str(s);
  errno = 0;
  char *end = nullptr;
  long long value = std::strtoll(str.c_str(), &end, 10);
  if (end != str.c_str() + str.size() || str.empty() || errno == ERANGE ||
      value < 0) {
    throw ParseError("bad count: \"" + str + "\"");
  }
  return value;
}

}  // namespace translit

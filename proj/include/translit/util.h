// util.h
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

#ifndef TRANSLIT_UTIL_H_
#define TRANSLIT_UTIL_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace translit {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input data (bad TSV line, bad UTF-8, unknown symbol, ...).
// The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

// Model construction failures (unalignable lexicon, empty training data).
// The CLI maps these to exit code 3.
class BuildError : public Error {
 public:
  explicit BuildError(const std::string &msg) : Error(msg) {}
};

// Splits on a single separator character; keeps empty fields.
std::vector<std::string> Split(std::string_view s, char sep);

// Splits on runs of spaces and tabs; drops empty fields.
std::vector<std::string> SplitWhitespace(std::string_view s);

// ASCII-only lowercasing; bytes outside A-Z are left untouched.
std::string AsciiLower(std::string_view s);

// Shortest decimal form that parses back to the identical double.
// Used by every text format so that rewrites are byte-stable.
std::string FormatDouble(double value);

double ParseDouble(std::string_view s);    // throws ParseError
long long ParseCount(std::string_view s);  // nonnegative integer, throws ParseError

}  // namespace translit

#endif  // TRANSLIT_UTIL_H_

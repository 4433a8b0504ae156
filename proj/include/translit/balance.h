// balance.h
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

#ifndef TRANSLIT_BALANCE_H_
#define TRANSLIT_BALANCE_H_

#include <string>
#include <utility>
#include <vector>

namespace translit {

struct BalanceEntry {
  std::string language;
  double amount = 0.0;      // hours or utterances, caller's unit
  double multiplier = 1.0;  // >= 1; data is never discarded
  double resulting = 0.0;   // amount * multiplier
};

struct BalancePlan {
  double cap = 75.0;
  double target = 0.0;     // cap * min(amount)
  double imbalance = 1.0;  // max(resulting) / min(resulting)
  std::vector<BalanceEntry> entries;
};

// Augmentation multipliers that equalize per-language data amounts at
// target = cap * min(amounts), clamped below at 1 for languages already
// over the target. Throws ParseError on nonpositive amounts or cap.
BalancePlan ComputeBalancePlan(
    const std::vector<std::pair<std::string, double>> &amounts,
    double cap = 75.0);

}  // namespace translit

#endif  // TRANSLIT_BALANCE_H_

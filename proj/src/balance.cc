// balance.cc
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

#include "translit/balance.h"

#include <algorithm>

#include "translit/util.h"

namespace translit {

BalancePlan ComputeBalancePlan(
    const std::vector<std::pair<std::string, double>> &amounts, double cap) {
  if (amounts.empty()) throw ParseError("balance plan: no languages");
  if (cap <= 0.0) throw ParseError("balance plan: cap must be positive");
  for (const auto &[language, amount] : amounts) {
    if (amount <= 0.0) {
      throw ParseError("balance plan: nonpositive amount for \"" + language +
                       "\"");
    }
  }

  double min_amount = amounts.front().second;
  for (const auto &[language, amount] : amounts) {
    min_amount = std::min(min_amount, amount);
  }

  BalancePlan plan;
  plan.cap = cap;
  plan.target = cap * min_amount;
  double min_resulting = 0.0, max_resulting = 0.0;
  for (const auto &[language, amount] : amounts) {
    BalanceEntry entry;
    entry.language = language;
    entry.amount = amount;
    entry.multiplier = std::max(1.0, plan.target / amount);
    entry.resulting = amount * entry.multiplier;
    if (plan.entries.empty()) {
      min_resulting = max_resulting = entry.resulting;
    } else {
      min_resulting = std::min(min_resulting, entry.resulting);
      max_resulting = std::max(max_resulting, entry.resulting);
    }
    plan.entries.push_back(std::move(entry));
  }
  plan.imbalance = max_resulting / min_resulting;
  return plan;
}

}  // namespace translit

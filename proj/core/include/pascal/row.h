// Copyright 2026 The pascal11 Authors
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

#ifndef PASCAL_ROW_H_
#define PASCAL_ROW_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascal/bignat.h"

namespace pascal {

enum class RowMethod { kPowerPartition, kMultiplicative, kRecurrence };

// "power", "mult", "rec".
std::string_view RowMethodName(RowMethod method);
std::optional<RowMethod> ParseRowMethod(std::string_view name);

// Row n of Pascal's triangle: coefficients[k] == C(n, k) for k in 0..n.
struct Row {
  std::uint64_t n = 0;
  std::vector<BigNat> coefficients;
  RowMethod method = RowMethod::kPowerPartition;

  // Compares n and coefficients; the generating method is ignored.
  friend bool operator==(const Row& a, const Row& b) {
    return a.n == b.n && a.coefficients == b.coefficients;
  }
};

// Coefficients as decimal strings joined by single spaces.
std::string FormatRowPlain(const Row& row);

}  // namespace pascal

#endif  // PASCAL_ROW_H_

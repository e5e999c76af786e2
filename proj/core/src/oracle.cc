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

#include "pascal/oracle.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pascal::oracle {

BigNat Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw std::out_of_range("binomial: k=" + std::to_string(k) +
                            " exceeds n=" + std::to_string(n));
  }
  k = std::min(k, n - k);
  BigNat c = BigNat::FromU64(1);
  for (std::uint64_t j = 0; j < k; ++j) {
    c = c.MulSmall(n - j).DivExact(j + 1);
  }
  return c;
}

Row RowMultiplicative(std::uint64_t n) {
  Row row{n, {}, RowMethod::kMultiplicative};
  row.coefficients.reserve(n + 1);
  row.coefficients.push_back(BigNat::FromU64(1));
  for (std::uint64_t j = 0; j < n; ++j) {
    row.coefficients.push_back(
        row.coefficients.back().MulSmall(n - j).DivExact(j + 1));
  }
  return row;
}

Row RowRecurrence(std::uint64_t n) {
  std::vector<BigNat> cur{BigNat::FromU64(1)};
  cur.reserve(n + 1);
  for (std::uint64_t m = 1; m <= n; ++m) {
    // In place, right to left, so cur[k-1] still holds row m-1.
    cur.push_back(BigNat::FromU64(1));
    for (std::uint64_t k = m - 1; k >= 1; --k) cur[k] += cur[k - 1];
  }
  return Row{n, std::move(cur), RowMethod::kRecurrence};
}

std::size_t CentralDigitCount(std::uint64_t n) {
  return Binomial(n, n / 2).DigitCount();
}

}  // namespace pascal::oracle

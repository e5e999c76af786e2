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

#ifndef PASCAL_ORACLE_H_
#define PASCAL_ORACLE_H_

#include <cstddef>
#include <cstdint>

#include "pascal/bignat.h"
#include "pascal/row.h"

// Ground-truth generators that never touch the power-of-eleven construction.
namespace pascal::oracle {

// C(n, k) by the multiplicative recurrence over min(k, n - k) steps. Every
// division is checked to be exact. Throws std::out_of_range if k > n.
BigNat Binomial(std::uint64_t n, std::uint64_t k);

// C(n, 0..n) in one left-to-right pass of C(n, j+1) = C(n, j)(n-j)/(j+1).
Row RowMultiplicative(std::uint64_t n);

// Builds rows 0..n with C(m, k) = C(m-1, k-1) + C(m-1, k); keeps one row.
Row RowRecurrence(std::uint64_t n);

// Decimal digit count of C(n, floor(n/2)).
std::size_t CentralDigitCount(std::uint64_t n);

}  // namespace pascal::oracle

#endif  // PASCAL_ORACLE_H_

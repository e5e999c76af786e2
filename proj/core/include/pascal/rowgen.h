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

// Pascal rows from powers of 11, 101, 1001, ...
//
// Row n is read off (10^w + 1)^n, where w is the digit count of the central
// coefficient C(n, floor(n/2)). Because every coefficient is below 10^w, the
// binomial expansion of the power never carries between w-digit blocks, and
// the r-th block from the right is exactly C(n, r-1).
//
// Naming: `theta` is the number of zeros between the two ones of the base
// (1001 has theta = 2), and `block_width` = theta + 1.

#ifndef PASCAL_ROWGEN_H_
#define PASCAL_ROWGEN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal/bignat.h"
#include "pascal/row.h"

namespace pascal {

struct ThetaResult {
  std::uint64_t n = 0;
  std::size_t central_digits = 1;
  std::size_t theta = 0;
  std::size_t block_width = 1;

  friend bool operator==(const ThetaResult&, const ThetaResult&) = default;
};

// A value did not fit in the requested number of blocks.
class BlockOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes to the same quantity disagreed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact: digit count of C(n, floor(n/2)) minus one. No logarithms involved.
ThetaResult Theta(std::uint64_t n);

// 10^block_width + 1, i.e. "1", theta zeros, "1".
BigNat ElevenVariant(const ThetaResult& t);

// ElevenVariant(Theta(n))^n. Has exactly n * block_width + 1 digits.
BigNat PowerInteger(std::uint64_t n);

// Cuts `x` into `expected` blocks of `width` digits, rightmost block first.
// Throws BlockOverflowError if x has more than expected * width digits and
// std::invalid_argument if width == 0.
std::vector<BigNat> PartitionBlocks(const BigNat& x, std::size_t width,
                                    std::size_t expected);

// Inverse of PartitionBlocks: sum of blocks[i] * 10^(i * width). Blocks are
// not required to be below 10^width.
BigNat AssembleBlocks(std::span<const BigNat> blocks, std::size_t width);

// Coefficients read from PowerInteger(n) blocks; method kPowerPartition.
Row RowViaPower(std::uint64_t n);

// The power of 10^width + 1 for row n, with width normally taken from
// Theta(n). A custom width is accepted for probing what breaks when the
// blocks are too narrow.
struct PowerExpansion {
  ThetaResult theta;
  std::size_t block_width = 1;
  BigNat power;
};

PowerExpansion ExpandPower(std::uint64_t n);
PowerExpansion ExpandPower(std::uint64_t n, std::size_t block_width);

// power mod 10^(r * block_width), by digit slicing.
BigNat LowBlocks(const PowerExpansion& e, std::uint64_t r);

// (10^(theta+1) + 1)^n mod 10^(r(theta+1)) for 1 <= r <= n+1. Computes the
// residue by slicing the power and again as the truncated binomial sum
// sum_{i<r} C(n,i) 10^(i(theta+1)), and throws InvariantViolation if the two
// differ (which would mean blocks carried into each other).
BigNat ResiduePartialSum(std::uint64_t n, std::uint64_t r);

// Top block of ResiduePartialSum(n, r); equals C(n, r-1).
BigNat LeadingBlockOfResidue(std::uint64_t n, std::uint64_t r);

// True iff the truncated binomial sum over r blocks is strictly below
// 10^(r(theta+1)), the no-carry condition that makes partitioning valid.
bool Lemma1BoundCheck(std::uint64_t n, std::uint64_t r);

// Decimal rendering of x with `sep` inserted between width-digit groups,
// counted from the right. Leading zeros inside groups are kept.
std::string AnnotateBlocks(const BigNat& x, std::size_t width, char sep = '|');

}  // namespace pascal

#endif  // PASCAL_ROWGEN_H_

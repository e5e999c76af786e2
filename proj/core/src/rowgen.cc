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

#include "pascal/rowgen.h"

#include <algorithm>
#include <string>

#include "pascal/oracle.h"

namespace pascal {
namespace {

// Splits in halves so the total work is O(digits * log blocks) rather than
// O(digits * blocks).
void SplitBlocks(const BigNat& x, std::size_t width, std::size_t count,
                 BigNat* out) {
  if (count == 1) {
    *out = x;
    return;
  }
  const std::size_t low = count / 2;
  auto [high_part, low_part] = x.SplitPow10(low * width);
  SplitBlocks(low_part, width, low, out);
  SplitBlocks(high_part, width, count - low, out + low);
}

void CheckBlockIndex(std::uint64_t n, std::uint64_t r) {
  if (r < 1 || r > n + 1) {
    throw std::out_of_range("block index r=" + std::to_string(r) +
                            " outside 1.." + std::to_string(n + 1));
  }
}

BigNat TruncatedBinomialSum(std::uint64_t n, std::uint64_t r,
                            std::size_t width) {
  std::vector<BigNat> terms;
  terms.reserve(r);
  for (std::uint64_t i = 0; i < r; ++i) {
    terms.push_back(oracle::Binomial(n, i));
  }
  return AssembleBlocks(terms, width);
}

}  // namespace

ThetaResult Theta(std::uint64_t n) {
  const std::size_t digits = oracle::CentralDigitCount(n);
  return ThetaResult{n, digits, digits - 1, digits};
}

BigNat ElevenVariant(const ThetaResult& t) {
  return BigNat::Pow10(t.block_width) + BigNat::FromU64(1);
}

BigNat PowerInteger(std::uint64_t n) {
  return BigNat::Pow(ElevenVariant(Theta(n)), n);
}

std::vector<BigNat> PartitionBlocks(const BigNat& x, std::size_t width,
                                    std::size_t expected) {
  if (width == 0) throw std::invalid_argument("block width must be >= 1");
  if (expected == 0) throw std::invalid_argument("block count must be >= 1");
  const std::size_t digits = x.DigitCount();
  if (digits > expected * width) {
    throw BlockOverflowError(std::to_string(digits) +
                             "-digit value does not fit in " +
                             std::to_string(expected) + " blocks of width " +
                             std::to_string(width));
  }
  std::vector<BigNat> blocks(expected);
  SplitBlocks(x, width, expected, blocks.data());
  return blocks;
}

BigNat AssembleBlocks(std::span<const BigNat> blocks, std::size_t width) {
  if (blocks.empty()) return {};
  if (blocks.size() == 1) return blocks.front();
  const std::size_t low = blocks.size() / 2;
  return AssembleBlocks(blocks.first(low), width) +
         AssembleBlocks(blocks.subspan(low), width).ShiftPow10(low * width);
}

Row RowViaPower(std::uint64_t n) {
  const ThetaResult t = Theta(n);
  const BigNat power = BigNat::Pow(ElevenVariant(t), n);
  std::vector<BigNat> blocks = PartitionBlocks(power, t.block_width, n + 1);
  std::reverse(blocks.begin(), blocks.end());
  return Row{n, std::move(blocks), RowMethod::kPowerPartition};
}

PowerExpansion ExpandPower(std::uint64_t n) {
  const ThetaResult t = Theta(n);
  return PowerExpansion{t, t.block_width, BigNat::Pow(ElevenVariant(t), n)};
}

PowerExpansion ExpandPower(std::uint64_t n, std::size_t block_width) {
  if (block_width == 0) throw std::invalid_argument("block width must be >= 1");
  BigNat base = BigNat::Pow10(block_width) + BigNat::FromU64(1);
  return PowerExpansion{Theta(n), block_width, BigNat::Pow(base, n)};
}

BigNat LowBlocks(const PowerExpansion& e, std::uint64_t r) {
  return e.power.SplitPow10(r * e.block_width).second;
}

BigNat ResiduePartialSum(std::uint64_t n, std::uint64_t r) {
  CheckBlockIndex(n, r);
  const PowerExpansion e = ExpandPower(n);
  BigNat sliced = LowBlocks(e, r);
  BigNat summed = TruncatedBinomialSum(n, r, e.block_width);
  if (sliced != summed) {
    throw InvariantViolation("residue mismatch at n=" + std::to_string(n) +
                             " r=" + std::to_string(r) + ": sliced " +
                             sliced.ToDecimal() + " vs summed " +
                             summed.ToDecimal());
  }
  return sliced;
}

BigNat LeadingBlockOfResidue(std::uint64_t n, std::uint64_t r) {
  const BigNat residue = ResiduePartialSum(n, r);
  return residue.SplitPow10((r - 1) * Theta(n).block_width).first;
}

bool Lemma1BoundCheck(std::uint64_t n, std::uint64_t r) {
  CheckBlockIndex(n, r);
  const std::size_t width = Theta(n).block_width;
  return TruncatedBinomialSum(n, r, width) < BigNat::Pow10(r * width);
}

std::string AnnotateBlocks(const BigNat& x, std::size_t width, char sep) {
  if (width == 0) throw std::invalid_argument("block width must be >= 1");
  const std::string digits = x.ToDecimal();
  std::string out;
  out.reserve(digits.size() + digits.size() / width);
  std::size_t head = digits.size() % width;
  if (head == 0) head = width;
  out.append(digits, 0, head);
  for (std::size_t i = head; i < digits.size(); i += width) {
    out += sep;
    out.append(digits, i, width);
  }
  return out;
}

}  // namespace pascal

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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "golden.h"
#include "pascal/oracle.h"

namespace pascal {
namespace {

BigNat N(std::uint64_t v) { return BigNat::FromU64(v); }
BigNat D(std::string_view s) { return BigNat::FromDecimal(s); }

std::vector<BigNat> Coeffs(std::initializer_list<std::uint64_t> values) {
  std::vector<BigNat> out;
  for (auto v : values) out.push_back(N(v));
  return out;
}

TEST(Theta, Examples) {
  EXPECT_EQ(Theta(0), (ThetaResult{0, 1, 0, 1}));
  EXPECT_EQ(Theta(9).theta, 2u);
  EXPECT_EQ(Theta(10).theta, 2u);
  EXPECT_EQ(Theta(15).theta, 3u);
  EXPECT_EQ(Theta(16).theta, 4u);
  EXPECT_EQ(Theta(51), (ThetaResult{51, 15, 14, 15}));
  for (std::uint64_t n = 0; n <= 4; ++n) EXPECT_EQ(Theta(n).theta, 0u);
  for (std::uint64_t n = 5; n <= 8; ++n) EXPECT_EQ(Theta(n).theta, 1u);
}

TEST(Theta, BracketsCentralCoefficient) {
  for (std::uint64_t n = 0; n <= 300; ++n) {
    const ThetaResult t = Theta(n);
    const BigNat central = oracle::Binomial(n, n / 2);
    ASSERT_EQ(t.theta + 1, t.central_digits);
    ASSERT_EQ(t.block_width, t.theta + 1);
    ASSERT_LE(BigNat::Pow10(t.theta), central) << n;
    ASSERT_LT(central, BigNat::Pow10(t.theta + 1)) << n;
  }
}

TEST(ElevenVariant, Examples) {
  EXPECT_EQ(ElevenVariant(Theta(0)), N(11));
  EXPECT_EQ(ElevenVariant(Theta(9)), N(1001));
  EXPECT_EQ(ElevenVariant(Theta(51)).ToDecimal(), "1000000000000001");
  const std::string s = ElevenVariant(Theta(200)).ToDecimal();
  EXPECT_EQ(s, "1" + std::string(Theta(200).theta, '0') + "1");
}

TEST(PowerInteger, Examples) {
  EXPECT_EQ(PowerInteger(0), N(1));
  EXPECT_EQ(PowerInteger(4), N(14641));
  EXPECT_EQ(PowerInteger(16).ToDecimal(),
            "100016001200056001820043680800811440128701144008008043680182000"
            "560001200001600001");
  const std::string p51 = PowerInteger(51).ToDecimal();
  EXPECT_EQ(p51.size(), 766u);
  EXPECT_EQ(p51, golden::kPower51);
  // Blocks 26 and 27 from the right, 15 digits each.
  EXPECT_EQ(p51.substr(766 - 27 * 15, 15), golden::kCentral51);
  EXPECT_EQ(p51.substr(766 - 26 * 15, 15), golden::kCentral51);
}

// The printed n = 51 expansion drops a single zero; everything else matches.
TEST(PowerInteger, PrintedFigureDiffersByOneDroppedZero) {
  std::string computed(golden::kPower51);
  ASSERT_EQ(computed[573], '0');
  computed.erase(573, 1);
  // "...0000476260169700" then the short segment "00158753389900".
  EXPECT_NE(computed.find("00476260169700" "00158753389900"),
            std::string::npos);
}

TEST(PartitionBlocks, Examples) {
  EXPECT_EQ(PartitionBlocks(N(14641), 1, 5), Coeffs({1, 4, 6, 4, 1}));
  EXPECT_EQ(PartitionBlocks(D("1009036084126126084036009001"), 3, 10),
            Coeffs({1, 9, 36, 84, 126, 126, 84, 36, 9, 1}));
  EXPECT_EQ(PartitionBlocks(N(0), 5, 1), Coeffs({0}));
  // Fewer digits than slots: high blocks are zero.
  EXPECT_EQ(PartitionBlocks(N(7), 2, 3), Coeffs({7, 0, 0}));
}

TEST(PartitionBlocks, Errors) {
  EXPECT_THROW(PartitionBlocks(N(161051), 1, 5), BlockOverflowError);
  EXPECT_THROW(PartitionBlocks(N(1), 0, 1), std::invalid_argument);
  EXPECT_THROW(PartitionBlocks(N(1), 1, 0), std::invalid_argument);
}

TEST(AssembleBlocks, InvertsPartition) {
  const BigNat x = PowerInteger(40);
  const std::size_t w = Theta(40).block_width;
  EXPECT_EQ(AssembleBlocks(PartitionBlocks(x, w, 41), w), x);
  EXPECT_EQ(AssembleBlocks({}, 3), N(0));
  // Oversized blocks carry.
  EXPECT_EQ(AssembleBlocks(Coeffs({1, 5, 10, 10, 5, 1}), 1), N(161051));
}

TEST(RowViaPower, Examples) {
  EXPECT_EQ(RowViaPower(0).coefficients, Coeffs({1}));
  EXPECT_EQ(RowViaPower(1).coefficients, Coeffs({1, 1}));
  EXPECT_EQ(FormatRowPlain(RowViaPower(15)), golden::kRow15);
  EXPECT_EQ(RowViaPower(15).method, RowMethod::kPowerPartition);

  const Row r51 = RowViaPower(51);
  ASSERT_EQ(r51.coefficients.size(), 52u);
  EXPECT_EQ(r51.coefficients[25].ToDecimal(), golden::kCentral51);
  EXPECT_EQ(r51.coefficients[26].ToDecimal(), golden::kCentral51);
  EXPECT_EQ(r51, oracle::RowMultiplicative(51));
}

TEST(ResiduePartialSum, Examples) {
  for (std::uint64_t n = 0; n < 30; ++n) {
    EXPECT_EQ(ResiduePartialSum(n, 1), N(1));
  }
  EXPECT_EQ(ResiduePartialSum(9, 3), N(36009001));
  EXPECT_EQ(ResiduePartialSum(51, 2), N(51).ShiftPow10(15) + N(1));
  EXPECT_EQ(ResiduePartialSum(10, 11), PowerInteger(10));
}

TEST(ResiduePartialSum, RejectsBadBlockIndex) {
  EXPECT_THROW(ResiduePartialSum(5, 0), std::out_of_range);
  EXPECT_THROW(ResiduePartialSum(5, 7), std::out_of_range);
  EXPECT_THROW(LeadingBlockOfResidue(5, 7), std::out_of_range);
  EXPECT_THROW(Lemma1BoundCheck(5, 0), std::out_of_range);
}

TEST(LeadingBlockOfResidue, Examples) {
  EXPECT_EQ(LeadingBlockOfResidue(12, 1), N(1));
  EXPECT_EQ(LeadingBlockOfResidue(9, 5), N(126));
  EXPECT_EQ(LeadingBlockOfResidue(16, 9), N(12870));
  EXPECT_EQ(oracle::Binomial(16, 8), N(12870));
}

TEST(LeadingBlockOfResidue, EqualsBinomialForEveryBlock) {
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::uint64_t r = 1; r <= n + 1; ++r) {
      ASSERT_EQ(LeadingBlockOfResidue(n, r), oracle::Binomial(n, r - 1))
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(Lemma1BoundCheck, Examples) {
  EXPECT_TRUE(Lemma1BoundCheck(4, 5));
  for (std::uint64_t n = 0; n < 50; ++n) EXPECT_TRUE(Lemma1BoundCheck(n, 1));
}

TEST(Lemma1BoundCheck, ExhaustiveSmall) {
  for (std::uint64_t n = 0; n <= 60; ++n) {
    for (std::uint64_t r = 1; r <= n + 1; ++r) {
      ASSERT_TRUE(Lemma1BoundCheck(n, r)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(ExpandPower, NarrowBlocksCarry) {
  // Row 5 needs width 2; width 1 is plain 11^5 where blocks overlap.
  const PowerExpansion wide = ExpandPower(5);
  EXPECT_EQ(wide.block_width, 2u);
  EXPECT_EQ(wide.power, N(10510100501));
  const PowerExpansion narrow = ExpandPower(5, 1);
  EXPECT_EQ(narrow.power, N(161051));
  EXPECT_NE(LowBlocks(narrow, 3), N(10 * 100 + 5 * 10 + 1));
  EXPECT_THROW(ExpandPower(5, 0), std::invalid_argument);
}

TEST(AnnotateBlocks, Examples) {
  EXPECT_EQ(AnnotateBlocks(PowerInteger(15), 4), golden::kPower15Annotated);
  EXPECT_EQ(AnnotateBlocks(N(14641), 1), "1|4|6|4|1");
  EXPECT_EQ(AnnotateBlocks(N(123456), 3), "123|456");
  EXPECT_EQ(AnnotateBlocks(N(0), 3), "0");
  EXPECT_EQ(AnnotateBlocks(N(123456), 3, ' '), "123 456");
}

// ---- invariants over a range of n -------------------------------------------

TEST(RowgenProperty, ThreeGeneratorsAgree) {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Row power = RowViaPower(n);
    ASSERT_EQ(power, oracle::RowMultiplicative(n)) << n;
    ASSERT_EQ(power, oracle::RowRecurrence(n)) << n;
  }
}

TEST(RowgenProperty, DigitLengthReconstructionAndBlockBound) {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const ThetaResult t = Theta(n);
    const BigNat power = PowerInteger(n);
    ASSERT_EQ(power.DigitCount(), n * t.block_width + 1) << n;

    const Row row = RowViaPower(n);
    ASSERT_EQ(AssembleBlocks(row.coefficients, t.block_width), power) << n;

    const BigNat limit = BigNat::Pow10(t.block_width);
    for (const BigNat& c : row.coefficients) ASSERT_LT(c, limit);
    ASSERT_EQ(*std::max_element(row.coefficients.begin(),
                                row.coefficients.end()),
              oracle::Binomial(n, n / 2));
  }
}

TEST(RowgenProperty, SymmetrySumAndWeightedSum) {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Row row = RowViaPower(n);
    ASSERT_EQ(row.coefficients.size(), n + 1);
    ASSERT_EQ(row.coefficients.front(), N(1));
    ASSERT_EQ(row.coefficients.back(), N(1));
    BigNat sum;
    for (std::uint64_t k = 0; k <= n; ++k) {
      ASSERT_EQ(row.coefficients[k], row.coefficients[n - k]);
      sum += row.coefficients[k];
    }
    ASSERT_EQ(sum, BigNat::Pow(N(2), n));
    ASSERT_EQ(AssembleBlocks(row.coefficients, 1), BigNat::Pow(N(11), n));
  }
}

TEST(RowgenProperty, IndependentOfMultiplicationThreshold) {
  const std::size_t saved = KaratsubaThreshold();
  SetKaratsubaThreshold(2);
  const Row small_threshold = RowViaPower(180);
  SetKaratsubaThreshold(1 << 20);
  const Row schoolbook = RowViaPower(180);
  SetKaratsubaThreshold(saved);
  EXPECT_EQ(small_threshold, schoolbook);
  EXPECT_EQ(small_threshold, oracle::RowMultiplicative(180));
}

}  // namespace
}  // namespace pascal

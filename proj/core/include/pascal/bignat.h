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

#ifndef PASCAL_BIGNAT_H_
#define PASCAL_BIGNAT_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pascal {

// Raised by BigNat::FromDecimal. `position()` is the zero-based index of the
// offending character (0 for an empty string).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Arbitrary-precision natural number.
//
// Magnitude is stored little-endian in limbs of radix 10^9, so splitting at a
// power of ten is a digit slice rather than a division. Zero is the empty limb
// vector; the highest limb of a nonzero value is never zero.
//
// Values are immutable once built. All arithmetic returns fresh values.
class BigNat {
 public:
  using Limb = std::uint32_t;
  static constexpr Limb kRadix = 1'000'000'000;
  static constexpr int kLimbDigits = 9;

  BigNat() = default;

  static BigNat FromU64(std::uint64_t v);
  // Accepts ASCII '0'-'9' only; leading zeros are allowed.
  static BigNat FromDecimal(std::string_view s);
  // 10^k.
  static BigNat Pow10(std::size_t k);
  // Builds from little-endian limbs, stripping high zero limbs. Throws
  // std::invalid_argument if a limb is >= kRadix.
  static BigNat FromLimbs(std::vector<Limb> limbs);

  std::string ToDecimal() const;

  bool IsZero() const { return limbs_.empty(); }
  // Number of decimal digits; zero has one digit.
  std::size_t DigitCount() const;
  std::span<const Limb> limbs() const { return limbs_; }
  // Value as uint64 when it fits, otherwise throws std::overflow_error.
  std::uint64_t ToU64() const;

  friend BigNat operator+(const BigNat& a, const BigNat& b);
  // Requires a >= b; throws std::domain_error otherwise.
  friend BigNat operator-(const BigNat& a, const BigNat& b);
  // Dispatches between the quadratic and Karatsuba paths by operand size and
  // bumps the thread-local multiplication counter once per call.
  friend BigNat operator*(const BigNat& a, const BigNat& b);

  BigNat& operator+=(const BigNat& b);

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

  // Schoolbook product, always.
  static BigNat MulQuadratic(const BigNat& a, const BigNat& b);
  // Karatsuba recursion down to `threshold` limbs (>= 2), then schoolbook.
  static BigNat MulKaratsuba(const BigNat& a, const BigNat& b,
                             std::size_t threshold);

  // x * m for a machine-word multiplier.
  BigNat MulSmall(std::uint64_t m) const;
  // (x / d, x % d) for 0 < d.
  std::pair<BigNat, std::uint64_t> DivModSmall(std::uint64_t d) const;
  // x / d, throwing std::logic_error when the remainder is nonzero.
  BigNat DivExact(std::uint64_t d) const;

  // x * 10^k.
  BigNat ShiftPow10(std::size_t k) const;
  // (x / 10^k, x % 10^k) by slicing limbs.
  std::pair<BigNat, BigNat> SplitPow10(std::size_t k) const;

  // base^exp by left-to-right binary exponentiation. 0^0 is 1. Uses at most
  // 2*floor(log2 exp) multiplications for exp >= 1.
  static BigNat Pow(const BigNat& base, std::uint64_t exp);

 private:
  explicit BigNat(std::vector<Limb> limbs) : limbs_(std::move(limbs)) {
    Trim();
  }
  void Trim();

  std::vector<Limb> limbs_;
};

// Operand size, in limbs of the smaller factor, at which operator* switches
// from schoolbook to Karatsuba. Default 48. Values below 2 are rejected.
std::size_t KaratsubaThreshold();
void SetKaratsubaThreshold(std::size_t limbs);

// Number of BigNat*BigNat products (operator* or Pow steps) issued on the
// calling thread. MulSmall and friends are not counted.
std::uint64_t MulCount();

// Counts products issued on this thread while alive.
class ScopedMulCounter {
 public:
  ScopedMulCounter() : start_(MulCount()) {}
  std::uint64_t count() const { return MulCount() - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace pascal

#endif  // PASCAL_BIGNAT_H_

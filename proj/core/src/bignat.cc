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

#include "pascal/bignat.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace pascal {
namespace {

using Limb = BigNat::Limb;
using LimbSpan = std::span<const Limb>;
constexpr std::uint64_t kRadix = BigNat::kRadix;
__extension__ using Wide = unsigned __int128;

constexpr std::uint32_t kPow10[] = {1,       10,       100,       1000,
                                    10000,   100000,   1000000,   10000000,
                                    100000000};

std::atomic<std::size_t> g_karatsuba_threshold{48};
thread_local std::uint64_t t_mul_count = 0;

LimbSpan TrimHigh(LimbSpan s) {
  while (!s.empty() && s.back() == 0) s = s.first(s.size() - 1);
  return s;
}

// out[offset..] += a. `out` must be large enough to absorb the final carry.
void AddAt(std::vector<Limb>& out, LimbSpan a, std::size_t offset) {
  std::uint32_t carry = 0;
  std::size_t i = 0;
  for (; i < a.size(); ++i) {
    std::uint32_t s = out[offset + i] + a[i] + carry;
    carry = s >= kRadix;
    out[offset + i] = carry ? s - kRadix : s;
  }
  for (std::size_t j = offset + i; carry; ++j) {
    std::uint32_t s = out[j] + 1;
    carry = s >= kRadix;
    out[j] = carry ? 0 : s;
  }
}

std::vector<Limb> AddRaw(LimbSpan a, LimbSpan b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<Limb> out(a.begin(), a.end());
  out.push_back(0);
  AddAt(out, b, 0);
  return out;
}

// a -= b; requires a >= b as values.
void SubInPlace(std::vector<Limb>& a, LimbSpan b) {
  std::int64_t borrow = 0;
  std::size_t i = 0;
  for (; i < b.size(); ++i) {
    std::int64_t d = std::int64_t{a[i]} - b[i] - borrow;
    borrow = d < 0;
    a[i] = static_cast<Limb>(borrow ? d + kRadix : d);
  }
  for (; borrow; ++i) {
    assert(i < a.size());
    std::int64_t d = std::int64_t{a[i]} - borrow;
    borrow = d < 0;
    a[i] = static_cast<Limb>(borrow ? d + kRadix : d);
  }
}

std::vector<Limb> MulSchool(LimbSpan a, LimbSpan b) {
  a = TrimHigh(a);
  b = TrimHigh(b);
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  // Column sums: one reduction per output limb instead of one per product.
  std::vector<Limb> out(a.size() + b.size(), 0);
  Wide carry = 0;
  for (std::size_t col = 0; col + 1 < out.size(); ++col) {
    const std::size_t j_lo = col >= a.size() ? col - a.size() + 1 : 0;
    const std::size_t j_hi = std::min(col, b.size() - 1);
    std::uint64_t lo = 0;
    std::uint64_t wraps = 0;
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
      const std::uint64_t p = static_cast<std::uint64_t>(a[col - j]) * b[j];
      lo += p;
      wraps += lo < p;
    }
    const Wide cur = carry + ((static_cast<Wide>(wraps) << 64) | lo);
    out[col] = static_cast<Limb>(cur % kRadix);
    carry = cur / kRadix;
  }
  out.back() = static_cast<Limb>(carry);
  return out;
}

std::vector<Limb> MulKaratsubaRaw(LimbSpan a, LimbSpan b,
                                  std::size_t threshold) {
  a = TrimHigh(a);
  b = TrimHigh(b);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < threshold) return MulSchool(a, b);

  const std::size_t half = a.size() / 2;
  std::vector<Limb> out(a.size() + b.size() + 1, 0);
  LimbSpan a0 = a.first(half);
  LimbSpan a1 = a.subspan(half);

  if (b.size() <= half) {
    // Unbalanced: split only the longer factor.
    auto lo = MulKaratsubaRaw(a0, b, threshold);
    auto hi = MulKaratsubaRaw(a1, b, threshold);
    AddAt(out, TrimHigh(lo), 0);
    AddAt(out, TrimHigh(hi), half);
  } else {
    LimbSpan b0 = b.first(half);
    LimbSpan b1 = b.subspan(half);
    auto z0 = MulKaratsubaRaw(a0, b0, threshold);
    auto z2 = MulKaratsubaRaw(a1, b1, threshold);
    auto sa = AddRaw(a0, a1);
    auto sb = AddRaw(b0, b1);
    auto z1 = MulKaratsubaRaw(sa, sb, threshold);
    z1.push_back(0);
    SubInPlace(z1, TrimHigh(z0));
    SubInPlace(z1, TrimHigh(z2));
    AddAt(out, TrimHigh(z0), 0);
    AddAt(out, TrimHigh(z1), half);
    AddAt(out, TrimHigh(z2), 2 * half);
  }
  return out;
}

}  // namespace

void BigNat::Trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::FromU64(std::uint64_t v) {
  std::vector<Limb> limbs;
  while (v != 0) {
    limbs.push_back(static_cast<Limb>(v % kRadix));
    v /= kRadix;
  }
  return BigNat(std::move(limbs));
}

BigNat BigNat::FromDecimal(std::string_view s) {
  if (s.empty()) throw ParseError("empty decimal string", 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError("non-digit character at position " + std::to_string(i),
                       i);
    }
  }
  std::vector<Limb> limbs;
  limbs.reserve(s.size() / kLimbDigits + 1);
  std::size_t end = s.size();
  while (end > 0) {
    std::size_t begin = end >= kLimbDigits ? end - kLimbDigits : 0;
    Limb limb = 0;
    for (std::size_t i = begin; i < end; ++i) limb = limb * 10 + (s[i] - '0');
    limbs.push_back(limb);
    end = begin;
  }
  return BigNat(std::move(limbs));
}

BigNat BigNat::Pow10(std::size_t k) {
  std::vector<Limb> limbs(k / kLimbDigits + 1, 0);
  limbs.back() = kPow10[k % kLimbDigits];
  return BigNat(std::move(limbs));
}

BigNat BigNat::FromLimbs(std::vector<Limb> limbs) {
  for (Limb l : limbs) {
    if (l >= kRadix) throw std::invalid_argument("limb out of radix range");
  }
  return BigNat(std::move(limbs));
}

std::string BigNat::ToDecimal() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  out.reserve(out.size() + (limbs_.size() - 1) * kLimbDigits);
  char buf[kLimbDigits];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    Limb l = limbs_[i];
    for (int d = kLimbDigits - 1; d >= 0; --d) {
      buf[d] = static_cast<char>('0' + l % 10);
      l /= 10;
    }
    out.append(buf, kLimbDigits);
  }
  return out;
}

std::size_t BigNat::DigitCount() const {
  if (limbs_.empty()) return 1;
  std::size_t top = 1;
  while (top < static_cast<std::size_t>(kLimbDigits) &&
         limbs_.back() >= kPow10[top]) {
    ++top;
  }
  return (limbs_.size() - 1) * kLimbDigits + top;
}

std::uint64_t BigNat::ToU64() const {
  Wide v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    v = v * kRadix + limbs_[i];
    if (v > UINT64_MAX) throw std::overflow_error("BigNat exceeds uint64");
  }
  return static_cast<std::uint64_t>(v);
}

BigNat operator+(const BigNat& a, const BigNat& b) {
  return BigNat(AddRaw(a.limbs_, b.limbs_));
}

BigNat& BigNat::operator+=(const BigNat& b) {
  if (limbs_.size() < b.limbs_.size()) limbs_.resize(b.limbs_.size(), 0);
  limbs_.push_back(0);
  AddAt(limbs_, b.limbs_, 0);
  Trim();
  return *this;
}

BigNat operator-(const BigNat& a, const BigNat& b) {
  if (a < b) throw std::domain_error("BigNat subtraction underflow");
  std::vector<BigNat::Limb> out = a.limbs_;
  SubInPlace(out, b.limbs_);
  return BigNat(std::move(out));
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  ++t_mul_count;
  const std::size_t threshold = KaratsubaThreshold();
  if (std::min(a.limbs_.size(), b.limbs_.size()) < threshold) {
    return BigNat(MulSchool(a.limbs_, b.limbs_));
  }
  return BigNat(MulKaratsubaRaw(a.limbs_, b.limbs_, threshold));
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat BigNat::MulQuadratic(const BigNat& a, const BigNat& b) {
  return BigNat(MulSchool(a.limbs_, b.limbs_));
}

BigNat BigNat::MulKaratsuba(const BigNat& a, const BigNat& b,
                            std::size_t threshold) {
  if (threshold < 2) throw std::invalid_argument("karatsuba threshold < 2");
  return BigNat(MulKaratsubaRaw(a.limbs_, b.limbs_, threshold));
}

BigNat BigNat::MulSmall(std::uint64_t m) const {
  if (m == 0 || limbs_.empty()) return {};
  std::vector<Limb> out;
  out.reserve(limbs_.size() + 3);
  Wide carry = 0;
  for (Limb l : limbs_) {
    Wide cur = static_cast<Wide>(l) * m + carry;
    out.push_back(static_cast<Limb>(cur % kRadix));
    carry = cur / kRadix;
  }
  while (carry != 0) {
    out.push_back(static_cast<Limb>(carry % kRadix));
    carry /= kRadix;
  }
  return BigNat(std::move(out));
}

std::pair<BigNat, std::uint64_t> BigNat::DivModSmall(std::uint64_t d) const {
  if (d == 0) throw std::domain_error("division by zero");
  std::vector<Limb> out(limbs_.size(), 0);
  Wide rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    Wide cur = rem * kRadix + limbs_[i];
    out[i] = static_cast<Limb>(cur / d);
    rem = cur % d;
  }
  return {BigNat(std::move(out)), static_cast<std::uint64_t>(rem)};
}

BigNat BigNat::DivExact(std::uint64_t d) const {
  auto [q, r] = DivModSmall(d);
  if (r != 0) {
    throw std::logic_error("inexact division by " + std::to_string(d));
  }
  return q;
}

BigNat BigNat::ShiftPow10(std::size_t k) const {
  if (limbs_.empty()) return {};
  BigNat scaled = MulSmall(kPow10[k % kLimbDigits]);
  std::vector<Limb> out(k / kLimbDigits, 0);
  out.insert(out.end(), scaled.limbs_.begin(), scaled.limbs_.end());
  return BigNat(std::move(out));
}

std::pair<BigNat, BigNat> BigNat::SplitPow10(std::size_t k) const {
  const std::size_t whole = k / kLimbDigits;
  const int part = static_cast<int>(k % kLimbDigits);
  if (whole >= limbs_.size()) return {BigNat(), *this};

  std::vector<Limb> low(limbs_.begin(), limbs_.begin() + whole);
  std::vector<Limb> high;
  if (part == 0) {
    high.assign(limbs_.begin() + whole, limbs_.end());
  } else {
    const Limb div = kPow10[part];
    const Limb mul = kPow10[kLimbDigits - part];
    low.push_back(limbs_[whole] % div);
    high.reserve(limbs_.size() - whole);
    for (std::size_t i = whole; i < limbs_.size(); ++i) {
      Limb next = i + 1 < limbs_.size() ? limbs_[i + 1] % div : 0;
      high.push_back(limbs_[i] / div + next * mul);
    }
  }
  return {BigNat(std::move(high)), BigNat(std::move(low))};
}

BigNat BigNat::Pow(const BigNat& base, std::uint64_t exp) {
  if (exp == 0) return FromU64(1);
  BigNat result = base;
  for (int bit = std::bit_width(exp) - 2; bit >= 0; --bit) {
    result = result * result;
    if ((exp >> bit) & 1) result = result * base;
  }
  return result;
}

std::size_t KaratsubaThreshold() {
  return g_karatsuba_threshold.load(std::memory_order_relaxed);
}

void SetKaratsubaThreshold(std::size_t limbs) {
  if (limbs < 2) throw std::invalid_argument("karatsuba threshold < 2");
  g_karatsuba_threshold.store(limbs, std::memory_order_relaxed);
}

std::uint64_t MulCount() { return t_mul_count; }

}  // namespace pascal

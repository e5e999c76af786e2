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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "pascal/bignat.h"
#include "pascal/oracle.h"
#include "pascal/rowgen.h"

namespace pascal {
namespace {

BigNat RandomOfDigits(std::size_t digits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string s(digits, '0');
  s[0] = '1' + rng() % 9;
  for (std::size_t i = 1; i < digits; ++i) s[i] = '0' + rng() % 10;
  return BigNat::FromDecimal(s);
}

void BM_MulQuadratic(benchmark::State& state) {
  const BigNat a = RandomOfDigits(state.range(0), 1);
  const BigNat b = RandomOfDigits(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(BigNat::MulQuadratic(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulQuadratic)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_MulKaratsuba(benchmark::State& state) {
  const BigNat a = RandomOfDigits(state.range(0), 1);
  const BigNat b = RandomOfDigits(state.range(0), 2);
  const std::size_t threshold = KaratsubaThreshold();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BigNat::MulKaratsuba(a, b, threshold));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulKaratsuba)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_RowViaPower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RowViaPower(state.range(0)));
}
BENCHMARK(BM_RowViaPower)->RangeMultiplier(2)->Range(64, 2048);

void BM_RowMultiplicative(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::RowMultiplicative(state.range(0)));
  }
}
BENCHMARK(BM_RowMultiplicative)->RangeMultiplier(2)->Range(64, 2048);

void BM_RowRecurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::RowRecurrence(state.range(0)));
  }
}
BENCHMARK(BM_RowRecurrence)->RangeMultiplier(2)->Range(64, 2048);

}  // namespace
}  // namespace pascal

BENCHMARK_MAIN();

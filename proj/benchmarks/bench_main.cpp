// Copyright 2026 The gfpmul Authors
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

#include <cstdint>
#include <random>
#include <vector>

#include "gfpmul/biguint.hpp"
#include "gfpmul/gfp.hpp"
#include "gfpmul/multiplier.hpp"
#include "gfpmul/primality.hpp"
#include "gfpmul/transform.hpp"

namespace {

using namespace gfpmul;

std::vector<Word> random_flat(const GfpField& f, std::size_t count, std::mt19937_64& rng) {
  std::vector<Word> out(count * f.stride(), 0);
  std::uniform_int_distribution<std::uint64_t> digit(0, f.params().r - 1);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < f.degree(); ++k) out[i * f.stride() + k] = static_cast<Word>(digit(rng));
  }
  return out;
}

// args: r, lambda
void BM_FieldMul(benchmark::State& state) {
  const GfpField f(make_params(static_cast<std::uint64_t>(state.range(0)), static_cast<unsigned>(state.range(1))));
  std::mt19937_64 rng(1);
  auto v = random_flat(f, 2, rng);
  std::vector<Word> out(f.stride());
  for (auto _ : state) {
    f.mul(v.data(), v.data() + f.stride(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_FieldMul)->Args({74, 4})->Args({44, 4})->Args({360, 5})->Args({1348, 8});

void BM_FieldShift(benchmark::State& state) {
  const GfpField f(make_params(360, 5));
  std::mt19937_64 rng(2);
  auto v = random_flat(f, 1, rng);
  std::vector<Word> out(f.stride());
  std::size_t j = 1;
  for (auto _ : state) {
    f.shift(v.data(), j, out.data());
    benchmark::DoNotOptimize(out.data());
    j = (j * 5 + 3) % f.params().shift_period();
  }
}
BENCHMARK(BM_FieldShift);

// args: log2 N over 74^16+1
void BM_HalfDft(benchmark::State& state) {
  const std::size_t n = std::size_t{1} << state.range(0);
  const TwiddleTable table(make_params(74, 4), 2 * n);
  const DirectProduct product(table);
  std::mt19937_64 rng(3);
  auto data = random_flat(table.field(), n, rng);
  for (auto _ : state) {
    half_dft_inplace(data.data(), n, table, Direction::kForward, product, nullptr);
    half_dft_inplace(data.data(), n, table, Direction::kInverse, product, nullptr);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_HalfDft)->DenseRange(6, 12, 2);

// args: log2 n
void BM_Multiply(benchmark::State& state) {
  const std::size_t n = std::size_t{1} << state.range(0);
  const MultiplyPlan plan = precompute(n);
  std::mt19937_64 rng(4);
  const BigUint a = BigUint::random_bits(n, rng);
  const BigUint b = BigUint::random_bits(n, rng);
  for (auto _ : state) {
    BigUint c = multiply(a, b, plan);
    benchmark::DoNotOptimize(c);
  }
  state.counters["depth"] = static_cast<double>(plan.depth());
}
BENCHMARK(BM_Multiply)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);

void BM_Precompute(benchmark::State& state) {
  const std::size_t n = std::size_t{1} << state.range(0);
  for (auto _ : state) {
    MultiplyPlan plan = precompute(n);
    benchmark::DoNotOptimize(plan.levels.data());
  }
}
BENCHMARK(BM_Precompute)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GfpPrimeTest(benchmark::State& state) {
  std::uint64_t r = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_gfp_prime(r, 4));
    r += 2;
  }
}
BENCHMARK(BM_GfpPrimeTest);

}  // namespace

BENCHMARK_MAIN();

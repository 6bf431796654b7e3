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

#include <gtest/gtest.h>

#include <bit>

#include "gfpmul/costmodel.hpp"
#include "gfpmul/error.hpp"
#include "gfpmul/primality.hpp"
#include "gfpmul/transform.hpp"
#include "support.hpp"

namespace gfpmul {
namespace {

using testing::element_value;
using testing::gfp_mpz;

// Largest power of two dividing p - 1, capped at 2^40.
std::size_t max_two_power_order(const GfpParams& params) {
  const mpz_class pm1 = gfp_mpz(params.r, params.lambda) - 1;
  const auto v = std::min<mp_bitcnt_t>(mpz_scan1(pm1.get_mpz_t(), 0), 40);
  return std::size_t{1} << v;
}

struct Case {
  std::uint64_t r;
  unsigned lambda;
};

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return out;
}

std::vector<mpz_class> values(const EvalVector& v, const GfpParams& params) {
  std::vector<mpz_class> out;
  for (const GfpElement& e : v.to_elements(params)) out.push_back(element_value(e, params.r, params.lambda));
  return out;
}

// sum_j a[j] w^(i j) mod p, for i < count.
std::vector<mpz_class> gmp_dft(const std::vector<mpz_class>& a, const mpz_class& w, const mpz_class& p,
                               std::size_t count) {
  std::vector<mpz_class> out(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const mpz_class wi = powm(w, i, p);
    mpz_class acc = 0, x = 1;
    for (const mpz_class& c : a) {
      acc += c * x;
      x = x * wi % p;
    }
    out[i] = acc % p;
  }
  return out;
}

EvalVector random_vector(std::size_t n, const GfpParams& params, std::mt19937_64& rng) {
  std::vector<GfpElement> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(testing::random_element(params, rng));
  return EvalVector::from_elements(elems, params);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kParse;
}

TEST(Roots, GeneratorHasFullOrder) {
  for (const Case c : {Case{44, 4}, Case{74, 4}, Case{54, 5}, Case{118, 3}, Case{6, 1}}) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    const mpz_class g = element_value(find_generator(params), c.r, c.lambda);
    mpz_class m = p - 1;
    std::vector<unsigned long> factors = {2};
    for (std::uint64_t q : prime_factors(c.r)) factors.push_back(q);
    for (unsigned long q : factors) EXPECT_NE(powm(g, (p - 1) / q, p), 1) << q;
  }
}

TEST(Roots, PrincipalRootProperties) {
  for (const Case c : {Case{44, 4}, Case{54, 5}, Case{118, 3}, Case{74, 4}}) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    const unsigned v2 = std::countr_zero(c.r) * (1U << c.lambda);
    for (unsigned k = 1; k <= std::min(v2, 20U); ++k) {
      const std::uint64_t two_n = std::uint64_t{1} << k;
      const mpz_class w = element_value(principal_root(params, two_n), c.r, c.lambda);
      ASSERT_EQ(powm(w, two_n, p), 1);
      ASSERT_EQ(powm(w, two_n / 2, p), p - 1);
      if (two_n >= params.shift_period()) {
        ASSERT_EQ(powm(w, two_n / params.shift_period(), p), c.r) << two_n;
      }
    }
    if (v2 < 63) {
      EXPECT_EQ(code_of([&] { principal_root(params, std::uint64_t{1} << (v2 + 1)); }), Errc::kOrderUnavailable);
    }
  }
}

TEST(Roots, TwiddleTablePowersAndInverseWeights) {
  const GfpParams params = make_params(44, 4);
  const mpz_class p = gfp_mpz(44, 4);
  const TwiddleTable table(params, 256);
  const mpz_class w = element_value(table.root(), 44, 4);
  for (std::size_t j = 0; j < 300; j += 7) {
    ASSERT_EQ(element_value(table.power_element(j), 44, 4), powm(w, j % 256, p));
  }
  for (std::size_t j = 0; j < 128; ++j) {
    const mpz_class inv = element_value(table.field().store(table.inverse_weight(j)), 44, 4);
    ASSERT_EQ(inv * powm(w, j, p) * 128 % p, 1);
  }
}

TEST(Fft, MatchesNaiveDftUpTo64) {
  std::mt19937_64 rng(31);
  for (const Case c : {Case{44, 4}, Case{54, 5}, Case{6, 1}, Case{1084, 6}}) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    const unsigned v2 = std::countr_zero(c.r) * (1U << c.lambda);
    for (std::size_t n = 2; n <= 64 && std::countr_zero(n) <= static_cast<int>(v2); n *= 2) {
      const TwiddleTable table(params, n);
      const GfpElement omega = table.root();
      for (int rep = 0; rep < 3; ++rep) {
        const EvalVector v = random_vector(n, params, rng);
        const auto expect = gmp_dft(values(v, params), element_value(omega, c.r, c.lambda), p, n);
        ASSERT_EQ(values(large_radix_fft(v, table), params), expect) << n;
        ASSERT_EQ(values(radix2_fft(v, omega, params, TwiddleMode::kGeneric), params), expect) << n;
        if (n <= params.shift_period()) {
          ASSERT_EQ(values(radix2_fft(v, omega, params, TwiddleMode::kCheapR), params), expect) << n;
        }
      }
    }
  }
}

TEST(Fft, CheapModeRejectsGeneralRoots) {
  const GfpParams params = make_params(44, 4);
  const TwiddleTable table(params, 128);
  const EvalVector v(64, params.stride());
  EXPECT_EQ(code_of([&] { radix2_fft(v, table.root(), params, TwiddleMode::kCheapR); }),
            Errc::kCheapModeViolation);
}

TEST(Fft, PhaseAndTableChecks) {
  const GfpParams params = make_params(44, 4);
  const TwiddleTable table(params, 64);
  EvalVector v(64, params.stride());
  EXPECT_EQ(code_of([&] { pointwise_product(v, v, params); }), Errc::kPhaseMismatch);
  EXPECT_EQ(code_of([&] { large_radix_fft(v, table, nullptr, Direction::kInverse); }), Errc::kPhaseMismatch);
  EXPECT_EQ(code_of([&] { half_dft(v, table, Direction::kForward); }), Errc::kTableTooSmall);
  EvalVector big(128, params.stride());
  EXPECT_EQ(code_of([&] { large_radix_fft(big, table); }), Errc::kTableTooSmall);
  const EvalVector e = large_radix_fft(v, table);
  EXPECT_EQ(e.phase, Phase::kEval);
  EXPECT_EQ(code_of([&] { radix2_fft(e, table.root(), params, TwiddleMode::kGeneric); }), Errc::kPhaseMismatch);
}

TEST(Fft, ExpensiveCounterMatchesClosedForm) {
  std::mt19937_64 rng(32);
  for (const Case c : {Case{44, 4}, Case{54, 5}, Case{118, 3}}) {
    const GfpParams params = make_params(c.r, c.lambda);
    for (std::size_t n = 2; n <= 4096 && 2 * n <= max_two_power_order(params); n *= 2) {
      const TwiddleTable table(params, 2 * n);
      const EvalVector v = random_vector(n, params, rng);
      OpCounters fwd;
      const EvalVector t = large_radix_fft(v, TwiddleTable(params, n), &fwd);
      ASSERT_EQ(fwd.expensive_muls, fermat_fft_count(n, c.lambda + 1)) << n;
      ASSERT_EQ(fwd.additions, n * std::countr_zero(n)) << n;
      OpCounters half;
      const EvalVector h = half_dft(v, table, Direction::kForward, &half);
      ASSERT_EQ(half.expensive_muls, n + fermat_fft_count(n, c.lambda + 1)) << n;
      OpCounters inv;
      (void)half_dft(h, table, Direction::kInverse, &inv);
      ASSERT_EQ(inv.expensive_muls, half.expensive_muls);
    }
  }
}

TEST(HalfDft, ValuesAtOddPowersAndRoundTrip) {
  std::mt19937_64 rng(33);
  for (const Case c : {Case{44, 4}, Case{54, 5}, Case{118, 3}}) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    for (std::size_t n = 1; n <= 512 && 2 * n <= max_two_power_order(params); n *= 2) {
      const TwiddleTable table(params, 2 * n);
      const mpz_class w = element_value(table.root(), c.r, c.lambda);
      for (int rep = 0; rep < 2; ++rep) {
        const EvalVector v = random_vector(n, params, rng);
        const EvalVector fwd = half_dft(v, table, Direction::kForward);
        if (n <= 64) {
          const auto full = gmp_dft(values(v, params), w, p, 2 * n);
          const auto got = values(fwd, params);
          for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(got[i], full[2 * i + 1]) << n << " " << i;
        }
        const EvalVector back = half_dft(fwd, table, Direction::kInverse);
        ASSERT_EQ(back.words, v.words) << n;
        std::vector<Word> inplace = v.words;
        const DirectProduct direct(table);
        half_dft_inplace(inplace.data(), n, table, Direction::kForward, direct, nullptr);
        ASSERT_EQ(inplace, fwd.words);
      }
    }
  }
}

TEST(HalfDft, NegacyclicConvolutionTheorem) {
  std::mt19937_64 rng(34);
  for (const Case c : {Case{44, 4}, Case{54, 5}, Case{118, 3}}) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    for (std::size_t n = 1; n <= 128; n *= 2) {
      const TwiddleTable table(params, 2 * n);
      const EvalVector a = random_vector(n, params, rng);
      const EvalVector b = random_vector(n, params, rng);
      const EvalVector prod = half_dft(
          pointwise_product(half_dft(a, table, Direction::kForward), half_dft(b, table, Direction::kForward), params),
          table, Direction::kInverse);
      const auto va = values(a, params), vb = values(b, params);
      std::vector<mpz_class> expect(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i + j < n) {
            expect[i + j] += va[i] * vb[j];
          } else {
            expect[i + j - n] -= va[i] * vb[j];
          }
        }
      }
      for (auto& x : expect) x = ((x % p) + p) % p;
      ASSERT_EQ(values(prod, params), expect) << n;
    }
  }
}

TEST(CyclicDft, RoundTripAndCyclicProduct) {
  std::mt19937_64 rng(35);
  const GfpParams params = make_params(44, 4);
  const mpz_class p = gfp_mpz(44, 4);
  for (std::size_t n = 2; n <= 256; n *= 2) {
    const TwiddleTable table(params, 2 * n);
    const DirectProduct direct(table);
    const EvalVector a = random_vector(n, params, rng);
    const EvalVector b = random_vector(n, params, rng);
    std::vector<Word> fa = a.words, fb = b.words;
    cyclic_dft_inplace(fa.data(), n, table, Direction::kForward, direct, nullptr);
    cyclic_dft_inplace(fb.data(), n, table, Direction::kForward, direct, nullptr);
    const GfpField& f = table.field();
    for (std::size_t k = 0; k < n; ++k) f.mul(fa.data() + k * f.stride(), fb.data() + k * f.stride(), fa.data() + k * f.stride());
    cyclic_dft_inplace(fa.data(), n, table, Direction::kInverse, direct, nullptr);
    EvalVector got(n, f.stride());
    got.words = fa;
    const auto va = values(a, params), vb = values(b, params);
    std::vector<mpz_class> expect(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) expect[(i + j) % n] += va[i] * vb[j];
    for (auto& x : expect) x %= p;
    ASSERT_EQ(values(got, params), expect) << n;
  }
}

}  // namespace
}  // namespace gfpmul

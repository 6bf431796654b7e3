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

#include "gfpmul/primality.hpp"
#include "support.hpp"

namespace gfpmul {
namespace {

TEST(Primality, U64AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 200000; ++n) ASSERT_EQ(is_prime_u64(n), ref::naive_is_prime(n)) << n;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 40);
    ASSERT_EQ(is_prime_u64(n), mpz_probab_prime_p(mpz_class(std::to_string(n)).get_mpz_t(), 30) != 0) << n;
  }
}

TEST(Primality, StrongPseudoprimesRejected) {
  for (std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime_u64(n)) << n;
  }
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
}

TEST(Primality, ProbablePrimeAgreesWithGmp) {
  std::mt19937_64 rng(4);
  int primes = 0;
  for (int i = 0; i < 300; ++i) {
    BigUint n = BigUint::random_bits(64 + rng() % 400, rng);
    n.add_small(1 - (n.is_odd() ? 1 : 0));
    const bool gmp = mpz_probab_prime_p(testing::to_mpz(n).get_mpz_t(), 30) != 0;
    primes += gmp;
    ASSERT_EQ(is_probable_prime(n), gmp) << n.to_hex();
  }
  mpz_class p("170141183460469231731687303715884105727");  // 2^127 - 1
  EXPECT_TRUE(is_probable_prime(testing::from_mpz(p)));
  EXPECT_FALSE(is_probable_prime(testing::from_mpz(p * p)));
}

TEST(Primality, FactorsMultiplyBack) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = 2 + (rng() >> (rng() % 50));
    std::uint64_t prod = 1;
    for (std::uint64_t q : prime_factors(n)) {
      ASSERT_TRUE(is_prime_u64(q));
      ASSERT_EQ(n % q, 0U);
      std::uint64_t m = n;
      while (m % q == 0) {
        m /= q;
        prod *= q;
      }
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(Primality, GfpPrimesAgreeWithGmp) {
  for (unsigned lambda = 1; lambda <= 5; ++lambda) {
    for (std::uint64_t r = 2; r <= 600; r += 2) {
      const bool gmp = mpz_probab_prime_p(testing::gfp_mpz(r, lambda).get_mpz_t(), 30) != 0;
      ASSERT_EQ(is_gfp_prime(r, lambda), gmp) << r << "^" << (1U << lambda) << "+1";
    }
  }
}

TEST(Primality, ListedLargePrimes) {
  EXPECT_TRUE(is_gfp_prime(74, 4));
  EXPECT_TRUE(is_gfp_prime(884, 5));
  EXPECT_TRUE(is_gfp_prime(1084, 6));
  EXPECT_TRUE(is_gfp_prime(1738, 7));
  EXPECT_TRUE(is_gfp_prime(1348, 8));
  EXPECT_FALSE(is_gfp_prime(2097208, 3));
  EXPECT_EQ(mpz_probab_prime_p(testing::gfp_mpz(2097208, 3).get_mpz_t(), 30), 0);
}

}  // namespace
}  // namespace gfpmul

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

#include "support.hpp"

namespace gfpmul::ref {
namespace {

mpz_class z(const BigNat& x) { return mpz_class(x.to_hex(), 16); }

TEST(Reference, BigNatAgainstGmp) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BigUint a0 = BigUint::random_bits(1 + rng() % 900, rng);
    const BigUint b0 = BigUint::random_bits(1 + rng() % 900, rng);
    const BigNat a = testing::to_ref(a0), b = testing::to_ref(b0);
    const mpz_class ma = z(a), mb = z(b);
    ASSERT_EQ(z(a + b), ma + mb);
    ASSERT_EQ(z(schoolbook_mul(a, b)), ma * mb);
    if (compare(a, b) >= 0) {
      ASSERT_EQ(z(a - b), ma - mb);
    }
    if (!b.is_zero()) {
      ASSERT_EQ(z(a % b), mpz_class(ma % mb));
    }
    ASSERT_EQ(z(a.shl(37)), mpz_class(ma << 37));
  }
}

TEST(Reference, ModularHelpers) {
  const BigNat p = gfp_modulus(44, 4);
  EXPECT_EQ(z(p), testing::gfp_mpz(44, 4));
  mpz_class e;
  mpz_powm_ui(e.get_mpz_t(), mpz_class(3).get_mpz_t(), 1000, z(p).get_mpz_t());
  EXPECT_EQ(z(pow_mod(BigNat(3), 1000, p)), e);
  EXPECT_EQ(z(radix_decode({1, 2, 3, 0}, false, 10, 2)), 321);
  EXPECT_EQ(z(radix_decode({0, 0, 0, 0}, true, 10, 2)), 10000);
}

TEST(Reference, NaiveTransformsSmallCases) {
  const BigNat p(17);
  // 4 has order 4 mod 17.
  const auto dft = naive_dft({BigNat(1), BigNat(2), BigNat(0), BigNat(0)}, BigNat(4), p);
  ASSERT_EQ(dft.size(), 4U);
  EXPECT_EQ(z(dft[0]), 3);
  EXPECT_EQ(z(dft[1]), 9);
  EXPECT_EQ(z(dft[2]), 16);
  EXPECT_EQ(z(dft[3]), 10);
  // (1 + x)(1 + x) mod x^2 + 1 = 2x.
  const auto c = naive_negacyclic({BigNat(1), BigNat(1)}, {BigNat(1), BigNat(1)}, p);
  EXPECT_EQ(z(c[0]), 0);
  EXPECT_EQ(z(c[1]), 2);
  EXPECT_TRUE(naive_is_prime(65537));
  EXPECT_FALSE(naive_is_prime(65539 * 3));
}

}  // namespace
}  // namespace gfpmul::ref

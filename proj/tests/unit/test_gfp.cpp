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

#include "gfpmul/error.hpp"
#include "gfpmul/gfp.hpp"
#include "support.hpp"

namespace gfpmul {
namespace {

using testing::element_value;
using testing::gfp_mpz;
using testing::random_element;

struct Case {
  std::uint64_t r;
  unsigned lambda;
};

const Case kFields[] = {{2, 1}, {4, 1}, {6, 1}, {2, 2}, {44, 4}, {74, 4}, {118, 3}, {54, 5}, {1084, 6}, {1738, 7}};

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kParse;
}

TEST(GfpParams, Validation) {
  const GfpParams p = make_params(74, 4);
  EXPECT_EQ(p.degree(), 16U);
  EXPECT_EQ(p.stride(), 17U);
  EXPECT_EQ(p.p_bits, 100U);
  EXPECT_EQ(p.floor_log2_p(), 99U);
  EXPECT_EQ(p.shift_period(), 32U);
  EXPECT_EQ(testing::to_mpz(p.p), gfp_mpz(74, 4));
  EXPECT_EQ(code_of([] { make_params(75, 4); }), Errc::kOddBase);
  EXPECT_EQ(code_of([] { make_params(8, 1); }), Errc::kCompositeModulus);
  EXPECT_EQ(code_of([] { make_params(2097208, 3); }), Errc::kCompositeModulus);
  EXPECT_EQ(code_of([] { make_params(0, 2); }), Errc::kOutOfRange);
  EXPECT_EQ(code_of([] { make_params(4, 0); }), Errc::kOutOfRange);
  EXPECT_EQ(code_of([] { make_params(4, 17); }), Errc::kOutOfRange);
  EXPECT_EQ(code_of([] { make_params(std::uint64_t{1} << 32, 2); }), Errc::kOutOfRange);
  EXPECT_NO_THROW(make_params_unchecked(8, 1));
}

TEST(GfpElement, EncodeDecodeAgainstGmp) {
  std::mt19937_64 rng(21);
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    for (int i = 0; i < 100; ++i) {
      const BigUint x = BigUint::random_bits(params.p_bits + 70, rng) % params.p;
      const GfpElement e = encode(x, params);
      ASSERT_EQ(element_value(e, c.r, c.lambda), mpz_class(testing::to_mpz(x) % p));
      ASSERT_EQ(decode(e, params), x);
    }
    EXPECT_THROW(encode(params.p, params), Error);
    const GfpElement minus_one = encode(params.p - BigUint(1), params);
    EXPECT_TRUE(minus_one.minus_one_flag);
    EXPECT_EQ(decode(minus_one, params), params.p - BigUint(1));
  }
}

// At least 10^4 random samples across all fields.
TEST(GfpElement, FieldOperationsAgainstGmp) {
  std::mt19937_64 rng(22);
  int samples = 0;
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    for (int i = 0; i < 1100; ++i, ++samples) {
      const GfpElement a = random_element(params, rng);
      const GfpElement b = random_element(params, rng);
      const mpz_class va = element_value(a, c.r, c.lambda), vb = element_value(b, c.r, c.lambda);
      ASSERT_EQ(element_value(add(a, b, params), c.r, c.lambda), mpz_class((va + vb) % p));
      ASSERT_EQ(element_value(sub(a, b, params), c.r, c.lambda), mpz_class((va - vb + p) % p));
      ASSERT_EQ(element_value(neg(a, params), c.r, c.lambda), mpz_class((p - va) % p));
      const GfpElement prod = mul_generic(a, b, params);
      ASSERT_EQ(element_value(prod, c.r, c.lambda), mpz_class((va * vb) % p));
      ASSERT_EQ(mul_generic(a, b, params, MulStrategy::kKronecker), prod);
      if (params.degree() <= GfpField::kSchoolbookMaxDegree) {
        ASSERT_EQ(mul_generic(a, b, params, MulStrategy::kSchoolbook), prod);
      }
    }
  }
  EXPECT_GE(samples, 10000);
}

TEST(GfpElement, RingAxioms) {
  std::mt19937_64 rng(23);
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    const GfpElement zero = encode(BigUint(), params);
    const GfpElement one = encode(BigUint(1), params);
    for (int i = 0; i < 100; ++i) {
      const GfpElement a = random_element(params, rng);
      const GfpElement b = random_element(params, rng);
      const GfpElement d = random_element(params, rng);
      ASSERT_EQ(add(a, zero, params), a);
      ASSERT_EQ(mul_generic(a, one, params), a);
      ASSERT_EQ(add(a, neg(a, params), params), zero);
      ASSERT_EQ(sub(a, b, params), add(a, neg(b, params), params));
      ASSERT_EQ(mul_generic(a, mul_generic(b, d, params), params), mul_generic(mul_generic(a, b, params), d, params));
      ASSERT_EQ(mul_generic(a, add(b, d, params), params),
                add(mul_generic(a, b, params), mul_generic(a, d, params), params));
    }
  }
}

TEST(GfpElement, EveryShiftMatchesGenericProduct) {
  std::mt19937_64 rng(24);
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    for (int rep = 0; rep < 5; ++rep) {
      const GfpElement a = random_element(params, rng);
      const mpz_class va = element_value(a, c.r, c.lambda);
      mpz_class rj = 1;
      for (std::size_t j = 0; j < params.shift_period(); ++j) {
        const GfpElement s = mul_by_r_power(a, j, params);
        ASSERT_EQ(s, mul_generic(a, encode(BigUint::pow(c.r, j) % params.p, params), params)) << j;
        ASSERT_EQ(element_value(s, c.r, c.lambda), mpz_class(va * rj % p)) << j;
        rj *= static_cast<unsigned long>(c.r);
      }
    }
    EXPECT_EQ(code_of([&] { mul_by_r_power(encode(BigUint(1), params), params.shift_period(), params); }),
              Errc::kShiftOutOfRange);
  }
}

TEST(GfpElement, NormalizeAdversarialCarries) {
  std::mt19937_64 rng(25);
  constexpr std::int64_t kMax = (std::int64_t{1} << 62) - 1;
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    const mpz_class p = gfp_mpz(c.r, c.lambda);
    const std::size_t d = params.degree();
    std::vector<std::vector<std::int64_t>> inputs;
    inputs.emplace_back(d, kMax);
    inputs.emplace_back(d, -kMax);
    inputs.emplace_back(d, static_cast<std::int64_t>(c.r) - 1);
    inputs.emplace_back(d, -1);
    std::vector<std::int64_t> alternating(d);
    for (std::size_t i = 0; i < d; ++i) alternating[i] = (i % 2 == 0) ? kMax : -kMax;
    inputs.push_back(alternating);
    std::vector<std::int64_t> top(d, 0);
    top[d - 1] = kMax;
    inputs.push_back(top);
    for (int i = 0; i < 50; ++i) {
      std::vector<std::int64_t> raw(d);
      for (auto& x : raw) x = static_cast<std::int64_t>(rng() % (2 * static_cast<std::uint64_t>(kMax))) - kMax;
      inputs.push_back(raw);
    }
    for (const auto& raw : inputs) {
      mpz_class expect = 0;
      for (std::size_t i = d; i-- > 0;) expect = expect * static_cast<unsigned long>(c.r) + mpz_class(std::to_string(raw[i]));
      expect %= p;
      if (expect < 0) expect += p;
      ASSERT_EQ(element_value(normalize(raw, params), c.r, c.lambda), expect);
    }
  }
}

TEST(GfpField, FlatKernelsAgreeWithElementApi) {
  std::mt19937_64 rng(26);
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    const GfpField f(params);
    const std::size_t s = f.stride();
    std::vector<Word> a(s), b(s), out(s), out2(s);
    for (int i = 0; i < 200; ++i) {
      const GfpElement ea = random_element(params, rng), eb = random_element(params, rng);
      f.load(ea, a.data());
      f.load(eb, b.data());
      f.mul(a.data(), b.data(), out.data());
      ASSERT_EQ(f.store(out.data()), mul_generic(ea, eb, params));
      f.mul_kronecker(a.data(), b.data(), out2.data());
      ASSERT_TRUE(f.equal(out.data(), out2.data()));
      f.kronecker_unpack(f.kronecker_pack(a.data()) * f.kronecker_pack(b.data()), out2.data());
      if (!ea.minus_one_flag && !eb.minus_one_flag) {
        ASSERT_TRUE(f.equal(out.data(), out2.data()));
      }
      f.sub(a.data(), b.data(), out.data());
      ASSERT_EQ(f.store(out.data()), sub(ea, eb, params));
      f.add(a.data(), b.data(), out.data());
      ASSERT_EQ(f.store(out.data()), add(ea, eb, params));
      const std::size_t j = rng() % params.shift_period();
      f.shift(a.data(), j, out.data());
      ASSERT_EQ(f.store(out.data()), mul_by_r_power(ea, j, params));
      const BigUint x = BigUint::random_bits(3 * params.p_bits, rng) % params.p;
      f.from_integer(x, out.data());
      ASSERT_EQ(f.to_integer(out.data()), x);
      const auto span = static_cast<std::int64_t>(params.r);
      const std::int64_t v = static_cast<std::int64_t>(rng() % (2 * span - 1)) - (span - 1);
      f.from_small(v, out.data());
      const mpz_class pv = gfp_mpz(c.r, c.lambda);
      mpz_class expect = mpz_class(std::to_string(v)) % pv;
      if (expect < 0) expect += pv;
      ASSERT_EQ(element_value(f.store(out.data()), c.r, c.lambda), expect);
    }
    EXPECT_EQ(f.kronecker_stride(), 2 * (64 - std::countl_zero(c.r - 1)) + c.lambda);
  }
}

TEST(GfpElement, InversePowersOfTwo) {
  for (const Case c : kFields) {
    const GfpParams params = make_params(c.r, c.lambda);
    for (unsigned k = 0; k < 40; ++k) {
      const GfpElement prod = mul_generic(inv_pow2(k, params), encode(BigUint::power_of_two(k) % params.p, params),
                                          params);
      ASSERT_EQ(decode(prod, params), BigUint(1)) << k;
    }
  }
}

}  // namespace
}  // namespace gfpmul

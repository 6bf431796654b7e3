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

#include "gfpmul/primality.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gfpmul/error.hpp"

namespace gfpmul {

namespace {

using Wide = unsigned __int128;

constexpr std::array<std::uint64_t, 25> kBases = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (const std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  // The first twelve prime bases are deterministic below 3.3e24.
  for (std::size_t i = 0; i < 12; ++i) {
    if (!strong_probable_prime_u64(n, kBases[i])) return false;
  }
  return true;
}

bool is_probable_prime(const BigUint& n, unsigned rounds) {
  if (n.fits_u64()) return is_prime_u64(n.low_u64());
  if (!n.is_odd()) return false;
  for (const std::uint64_t q : kBases) {
    if (n.mod_small(q) == 0) return false;
  }
  const BigUint n_minus_1 = n - BigUint(1);
  std::size_t s = 0;
  while (!n_minus_1.test_bit(s)) ++s;
  const BigUint d = n_minus_1 >> s;
  const MontgomeryContext ctx(n);
  const BigUint mont_one = ctx.one();
  const BigUint mont_minus_one = n - mont_one;
  rounds = std::min<unsigned>(rounds, kBases.size());
  for (unsigned i = 0; i < rounds; ++i) {
    BigUint x = ctx.to_montgomery(ctx.pow(BigUint(kBases[i]), d));
    if (x == mont_one || x == mont_minus_one) continue;
    bool witness = true;
    for (std::size_t k = 1; k < s; ++k) {
      x = ctx.multiply(x, x);
      if (x == mont_minus_one) {
        witness = false;
        break;
      }
      if (x == mont_one) break;
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) throw Error(Errc::kFactorizationFailure, "cannot factor zero");
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q < (1U << 20) && q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  std::vector<std::uint64_t> rest;
  factor_into(n, rest);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_gfp_prime(std::uint64_t r, unsigned lambda, std::uint64_t trial_bound) {
  if (r < 2) return false;
  if (r % 2 != 0) return false;
  const bool small = lambda < 6 && BigUint::pow(r, std::uint64_t{1} << lambda).bit_length() <= 64;
  if (small) return is_prime_u64(BigUint::pow(r, std::uint64_t{1} << lambda).low_u64() + 1);
  const std::uint64_t step = std::uint64_t{1} << (lambda + 1);
  for (std::uint64_t q = step + 1; q <= trial_bound; q += step) {
    // r^(2^lambda) mod q by repeated squaring.
    std::uint64_t x = r % q;
    if (q >> 32) {
      for (unsigned i = 0; i < lambda; ++i) x = mul_mod(x, x, q);
    } else {
      for (unsigned i = 0; i < lambda; ++i) x = x * x % q;
    }
    if (x == q - 1) return false;
  }
  BigUint p = BigUint::pow(r, std::uint64_t{1} << lambda);
  p.add_small(1);
  return is_probable_prime(p);
}

}  // namespace gfpmul

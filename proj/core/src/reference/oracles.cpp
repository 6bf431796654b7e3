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

#include <stdexcept>

#include "gfpmul/reference/oracles.hpp"

namespace gfpmul::ref {

BigNat mul_mod(const BigNat& a, const BigNat& b, const BigNat& m) { return schoolbook_mul(a, b) % m; }

BigNat pow_mod(const BigNat& base, std::uint64_t e, const BigNat& m) {
  BigNat result = BigNat(1) % m;
  BigNat b = base % m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return result;
}

BigNat gfp_modulus(std::uint64_t r, unsigned lambda) {
  BigNat x(r);
  for (unsigned i = 0; i < lambda; ++i) x = schoolbook_mul(x, x);
  return x + BigNat(1);
}

BigNat radix_decode(const std::vector<std::uint32_t>& coeffs, bool minus_one, std::uint64_t r, unsigned lambda) {
  if (minus_one) return gfp_modulus(r, lambda) - BigNat(1);
  BigNat acc;
  BigNat place(1);
  const BigNat radix(r);
  for (const std::uint32_t c : coeffs) {
    acc = acc + schoolbook_mul(place, BigNat(c));
    place = schoolbook_mul(place, radix);
  }
  return acc;
}

std::vector<BigNat> naive_dft(const std::vector<BigNat>& poly, const BigNat& omega, const BigNat& p) {
  const std::size_t n = poly.size();
  std::vector<BigNat> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigNat wi = pow_mod(omega, i, p);
    BigNat x(1);
    BigNat acc;
    for (std::size_t j = 0; j < n; ++j) {
      acc = (acc + mul_mod(poly[j], x, p)) % p;
      x = mul_mod(x, wi, p);
    }
    out[i] = acc;
  }
  return out;
}

std::vector<BigNat> naive_negacyclic(const std::vector<BigNat>& a, const std::vector<BigNat>& b, const BigNat& p) {
  if (a.size() != b.size()) throw std::invalid_argument("operand lengths differ");
  const std::size_t n = a.size();
  std::vector<BigNat> pos(n), negs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigNat t = mul_mod(a[i], b[j], p);
      if (i + j < n) {
        pos[i + j] = (pos[i + j] + t) % p;
      } else {
        negs[i + j - n] = (negs[i + j - n] + t) % p;
      }
    }
  }
  std::vector<BigNat> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = ((pos[k] + p) - negs[k]) % p;
  return out;
}

bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace gfpmul::ref

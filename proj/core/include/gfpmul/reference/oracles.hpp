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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Brute-force oracles. Nothing here depends on the gfpmul core library.
namespace gfpmul::ref {

/// Unsigned integer, little-endian 32-bit words, no trailing zero words.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t v);

  static BigNat from_hex(std::string_view hex);
  std::string to_hex() const;

  bool is_zero() const { return w_.empty(); }
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;
  const std::vector<std::uint32_t>& words() const { return w_; }

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend int compare(const BigNat& a, const BigNat& b);
  friend BigNat operator+(const BigNat& a, const BigNat& b);
  /// Requires a >= b.
  friend BigNat operator-(const BigNat& a, const BigNat& b);
  friend BigNat operator*(const BigNat& a, const BigNat& b);
  friend BigNat schoolbook_mul(const BigNat& a, const BigNat& b);
  friend BigNat operator%(const BigNat& a, const BigNat& m);
  BigNat shl(std::size_t bits) const;

 private:
  void trim();
  std::vector<std::uint32_t> w_;
};

/// Quadratic product, one word at a time.
BigNat schoolbook_mul(const BigNat& a, const BigNat& b);

BigNat mul_mod(const BigNat& a, const BigNat& b, const BigNat& m);
BigNat pow_mod(const BigNat& base, std::uint64_t e, const BigNat& m);

/// r^(2^lambda) + 1.
BigNat gfp_modulus(std::uint64_t r, unsigned lambda);

/// sum coeffs[i] r^i, or p-1 when the flag is set.
BigNat radix_decode(const std::vector<std::uint32_t>& coeffs, bool minus_one, std::uint64_t r, unsigned lambda);

/// out[i] = sum_j P[j] omega^(i*j) mod p.
std::vector<BigNat> naive_dft(const std::vector<BigNat>& poly, const BigNat& omega, const BigNat& p);

/// C[k] = sum_{i+j=k} A[i]B[j] - sum_{i+j=k+N} A[i]B[j] mod p.
std::vector<BigNat> naive_negacyclic(const std::vector<BigNat>& a, const std::vector<BigNat>& b, const BigNat& p);

/// Trial division by every odd number up to sqrt(n).
bool naive_is_prime(std::uint64_t n);

}  // namespace gfpmul::ref

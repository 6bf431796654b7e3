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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfpmul {

/// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
///
/// The limb vector never carries trailing zero limbs, so zero is the empty
/// vector and structural equality is value equality.
class BigUint {
 public:
  using Limb = std::uint64_t;
  static constexpr unsigned kLimbBits = 64;

  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static BigUint from_limbs(std::vector<Limb> limbs);
  /// Big-endian hexadecimal; whitespace is skipped, an optional 0x prefix is
  /// accepted. Throws Error(kParse) on any other character or empty input.
  static BigUint from_hex(std::string_view text);
  static BigUint from_decimal(std::string_view text);
  static BigUint power_of_two(std::size_t exponent);
  static BigUint pow(std::uint64_t base, std::uint64_t exponent);
  /// Uniform in [0, 2^bits).
  static BigUint random_bits(std::size_t bits, std::mt19937_64& rng);

  /// Lowercase, no prefix, "0" for zero.
  std::string to_hex() const;
  std::string to_decimal() const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1U); }
  std::size_t bit_length() const noexcept;
  std::size_t limb_count() const noexcept { return limbs_.size(); }
  std::span<const Limb> limbs() const noexcept { return limbs_; }
  bool test_bit(std::size_t index) const noexcept;
  /// Bits [pos, pos+len) as an integer; len <= 64.
  std::uint64_t extract_bits(std::size_t pos, unsigned len) const noexcept;
  std::uint64_t low_u64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }
  bool fits_u64() const noexcept { return limbs_.size() <= 1; }
  /// Floating-point log2; -infinity for zero.
  double log2() const;

  /// this += value << shift
  void add_shifted(std::uint64_t value, std::size_t shift);
  BigUint& mul_small(Limb factor);
  BigUint& add_small(Limb addend);
  /// Divides in place and returns the remainder. divisor must be nonzero.
  Limb divmod_small(Limb divisor);
  Limb mod_small(Limb divisor) const;

  /// Quotient and remainder; throws Error(kOutOfRange) on division by zero.
  static std::pair<BigUint, BigUint> divmod(const BigUint& dividend, const BigUint& divisor);

  BigUint& operator+=(const BigUint& rhs);
  /// Requires *this >= rhs (throws Error(kOutOfRange) otherwise).
  BigUint& operator-=(const BigUint& rhs);
  BigUint& operator*=(const BigUint& rhs);
  BigUint& operator<<=(std::size_t shift);
  BigUint& operator>>=(std::size_t shift);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) { return lhs -= rhs; }
  friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);
  friend BigUint operator<<(BigUint lhs, std::size_t shift) { return lhs <<= shift; }
  friend BigUint operator>>(BigUint lhs, std::size_t shift) { return lhs >>= shift; }
  friend BigUint operator/(const BigUint& lhs, const BigUint& rhs) { return divmod(lhs, rhs).first; }
  friend BigUint operator%(const BigUint& lhs, const BigUint& rhs) { return divmod(lhs, rhs).second; }

  friend bool operator==(const BigUint& lhs, const BigUint& rhs) = default;
  friend std::strong_ordering operator<=>(const BigUint& lhs, const BigUint& rhs) noexcept;

 private:
  void trim() noexcept;

  std::vector<Limb> limbs_;
};

/// base^exponent mod modulus (modulus > 0). Uses Montgomery arithmetic when
/// the modulus is odd.
BigUint pow_mod(const BigUint& base, const BigUint& exponent, const BigUint& modulus);

/// Montgomery multiplication modulo a fixed odd modulus. Values passed to
/// `multiply` are in Montgomery form (x·R mod m, R = 2^(64·limbs)).
class MontgomeryContext {
 public:
  explicit MontgomeryContext(BigUint odd_modulus);

  const BigUint& modulus() const noexcept { return modulus_; }
  BigUint to_montgomery(const BigUint& value) const;
  BigUint from_montgomery(const BigUint& value) const;
  BigUint multiply(const BigUint& lhs, const BigUint& rhs) const;
  /// Plain-domain exponentiation: base^exponent mod m.
  BigUint pow(const BigUint& base, const BigUint& exponent) const;
  /// R mod m, the Montgomery form of 1.
  const BigUint& one() const noexcept { return one_; }

 private:
  void multiply_into(const BigUint::Limb* lhs, const BigUint::Limb* rhs, BigUint::Limb* out,
                     BigUint::Limb* scratch) const;

  BigUint modulus_;
  std::vector<BigUint::Limb> mod_limbs_;
  BigUint::Limb neg_inv_ = 0;
  BigUint r_squared_;
  BigUint one_;
};

}  // namespace gfpmul

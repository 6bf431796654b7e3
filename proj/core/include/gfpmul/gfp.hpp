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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gfpmul/biguint.hpp"

namespace gfpmul {

/// Storage word for one radix-r coefficient.
using Word = std::uint32_t;

/// Descriptor of the field Z/pZ with p = r^(2^lambda) + 1.
struct GfpParams {
  std::uint64_t r = 0;
  unsigned lambda = 0;
  BigUint p;
  unsigned coeff_bits = 0;  // ceil(log2 r)
  std::size_t p_bits = 0;   // ceil(log2 p)

  /// Number of radix-r coefficients, 2^lambda.
  std::size_t degree() const noexcept { return std::size_t{1} << lambda; }
  /// Words per flat element: the coefficients followed by the p-1 flag.
  std::size_t stride() const noexcept { return degree() + 1; }
  std::size_t floor_log2_p() const noexcept { return p.bit_length() - 1; }
  /// Order of r in the multiplicative group, 2^(lambda+1).
  std::size_t shift_period() const noexcept { return std::size_t{2} << lambda; }

  friend bool operator==(const GfpParams& lhs, const GfpParams& rhs) {
    return lhs.r == rhs.r && lhs.lambda == rhs.lambda;
  }
};

/// Validates r and lambda and certifies p. Throws OddBase, CompositeModulus,
/// or OutOfRange when the coefficient arithmetic would not fit in 64 bits.
GfpParams make_params(std::uint64_t r, unsigned lambda);
/// As make_params, without the primality check; for callers that have just
/// certified r^(2^lambda)+1 themselves.
GfpParams make_params_unchecked(std::uint64_t r, unsigned lambda);

/// Radix-r digits of an element of Z/pZ. p-1 = r^(2^lambda) is the one value
/// that does not fit in 2^lambda digits; it is carried by the flag.
struct GfpElement {
  std::vector<Word> coeffs;
  bool minus_one_flag = false;

  friend bool operator==(const GfpElement&, const GfpElement&) = default;
};

GfpElement encode(const BigUint& x, const GfpParams& params);
BigUint decode(const GfpElement& e, const GfpParams& params);

GfpElement add(const GfpElement& a, const GfpElement& b, const GfpParams& params);
GfpElement sub(const GfpElement& a, const GfpElement& b, const GfpParams& params);
GfpElement neg(const GfpElement& a, const GfpParams& params);
/// a * r^j for 0 <= j < 2^(lambda+1); throws ShiftOutOfRange otherwise.
GfpElement mul_by_r_power(const GfpElement& a, std::size_t j, const GfpParams& params);
/// Canonical element congruent to sum raw[i] r^i. Requires |raw[i]| < 2^62.
GfpElement normalize(std::span<const std::int64_t> raw, const GfpParams& params);

enum class MulStrategy {
  kSchoolbook,  // negacyclic convolution of the digit vectors
  kKronecker,   // packed integer product, folded
  kAuto,        // schoolbook up to GfpField::kSchoolbookMaxDegree, Kronecker above
};

GfpElement mul_generic(const GfpElement& a, const GfpElement& b, const GfpParams& params,
                       MulStrategy strategy = MulStrategy::kAuto);

/// 2^(-k) mod p.
GfpElement inv_pow2(unsigned k, const GfpParams& params);

/// Flat-array kernels. An element occupies params.stride() consecutive words:
/// degree() digits in [0, r) then a flag word that is 1 only for p-1 (all
/// digits zero). Unless noted, outputs may alias inputs.
class GfpField {
 public:
  static constexpr std::size_t kSchoolbookMaxDegree = 64;

  explicit GfpField(GfpParams params);

  const GfpParams& params() const noexcept { return params_; }
  std::size_t degree() const noexcept { return d_; }
  std::size_t stride() const noexcept { return d_ + 1; }
  /// Bit stride of the Kronecker packing, 2*ceil(log2 r) + lambda.
  unsigned kronecker_stride() const noexcept { return ks_stride_; }
  std::size_t kronecker_bits() const noexcept { return ks_stride_ * d_; }

  void set_zero(Word* out) const;
  void set_one(Word* out) const;
  bool is_zero(const Word* a) const;
  bool equal(const Word* a, const Word* b) const;

  void load(const GfpElement& e, Word* out) const;
  GfpElement store(const Word* a) const;
  void from_integer(const BigUint& x, Word* out) const;
  BigUint to_integer(const Word* a) const;

  void add(const Word* a, const Word* b, Word* out) const;
  void sub(const Word* a, const Word* b, Word* out) const;
  void neg(const Word* a, Word* out) const;
  /// out = a * r^j, j < 2^(lambda+1). out must not alias a.
  void shift(const Word* a, std::size_t j, Word* out) const;
  /// Consumes raw[0..degree()) (clobbered).
  void normalize(std::int64_t* raw, Word* out) const;

  void mul(const Word* a, const Word* b, Word* out) const;
  void mul_schoolbook(const Word* a, const Word* b, Word* out) const;
  void mul_kronecker(const Word* a, const Word* b, Word* out) const;

  /// Digits packed at kronecker_stride() bits; requires the flag clear.
  BigUint kronecker_pack(const Word* a) const;
  /// Folds an unpacked product of two packed elements back into the field.
  void kronecker_unpack(const BigUint& product, Word* out) const;

  /// Small signed value (|v| < r) as an element.
  void from_small(std::int64_t v, Word* out) const;

 private:
  /// digits (flag word ignored on input) + delta, delta in [-3, 3].
  void adjust(Word* e, int delta) const;
  void propagate(std::int64_t* raw, std::int64_t& carry, Word* out) const;

  GfpParams params_;
  std::size_t d_;
  std::uint64_t r_;
  unsigned ks_stride_;
};

}  // namespace gfpmul

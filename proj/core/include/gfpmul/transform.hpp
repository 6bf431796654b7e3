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

#include "gfpmul/gfp.hpp"

namespace gfpmul {

/// Operation counts gathered while transforms run. `expensive_muls` counts
/// general field products, `cheap_shifts` multiplications by nontrivial
/// powers of r, `additions` field additions and subtractions.
struct OpCounters {
  std::uint64_t expensive_muls = 0;
  std::uint64_t cheap_shifts = 0;
  std::uint64_t additions = 0;

  OpCounters& operator+=(const OpCounters& rhs) noexcept {
    expensive_muls += rhs.expensive_muls;
    cheap_shifts += rhs.cheap_shifts;
    additions += rhs.additions;
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Smallest g >= 2 generating (Z/pZ)^*. Throws FactorizationFailure if no
/// generator is found below 2^20.
std::uint64_t find_generator_u64(const GfpParams& params);
GfpElement find_generator(const GfpParams& params);

/// Element of exact order two_n (a power of two dividing p-1) such that
/// omega^(two_n / 2^(lambda+1)) = r whenever two_n >= 2^(lambda+1). Below
/// that order the root is the matching power of r. Throws OrderUnavailable.
GfpElement principal_root(const GfpParams& params, std::uint64_t two_n);

enum class Phase { kCoeff, kEval };
enum class Direction { kForward, kInverse };

/// Length-N sequence of field elements stored flat, stride() words each.
struct EvalVector {
  std::size_t length = 0;
  std::size_t stride = 0;
  std::vector<Word> words;
  Phase phase = Phase::kCoeff;

  EvalVector() = default;
  EvalVector(std::size_t n, std::size_t element_stride, Phase ph = Phase::kCoeff)
      : length(n), stride(element_stride), words(n * element_stride, 0), phase(ph) {}

  static EvalVector from_elements(std::span<const GfpElement> elems, const GfpParams& params,
                                  Phase ph = Phase::kCoeff);
  std::vector<GfpElement> to_elements(const GfpParams& params) const;

  Word* at(std::size_t i) noexcept { return words.data() + i * stride; }
  const Word* at(std::size_t i) const noexcept { return words.data() + i * stride; }
};

/// Powers omega^j, j in [0, order), of a principal root of the given order,
/// plus the scaled inverse weights omega^(-j) / (order/2) used by the
/// inverse half-DFT.
class TwiddleTable {
 public:
  TwiddleTable(GfpParams params, std::size_t order);

  const GfpField& field() const noexcept { return field_; }
  const GfpParams& params() const noexcept { return field_.params(); }
  std::size_t order() const noexcept { return order_; }
  const Word* power(std::size_t j) const noexcept { return powers_.data() + (j % order_) * field_.stride(); }
  /// omega^(-j) / (order/2) for j < order/2.
  const Word* inverse_weight(std::size_t j) const noexcept {
    return inverse_weights_.data() + j * field_.stride();
  }
  GfpElement power_element(std::size_t j) const { return field_.store(power(j)); }
  GfpElement root() const { return power_element(1); }

  /// Forward transforms of every power over the next level, when one exists.
  const std::vector<EvalVector>& transformed() const noexcept { return transformed_; }
  bool has_transformed() const noexcept { return !transformed_.empty(); }
  void attach_transformed(std::vector<EvalVector> images) { transformed_ = std::move(images); }

 private:
  GfpField field_;
  std::size_t order_;
  std::vector<Word> powers_;
  std::vector<Word> inverse_weights_;
  std::vector<EvalVector> transformed_;
};

/// How general field products inside a transform are carried out.
class ExpensiveProduct {
 public:
  virtual ~ExpensiveProduct() = default;
  /// out = a * b; out may alias a.
  virtual void mul(const Word* a, const Word* b, Word* out) const = 0;
  /// out = a * table.power(j); out may alias a.
  virtual void mul_power(const Word* a, std::size_t j, Word* out) const = 0;
};

/// Field products done directly with GfpField::mul.
class DirectProduct final : public ExpensiveProduct {
 public:
  explicit DirectProduct(const TwiddleTable& table) : table_(table) {}
  void mul(const Word* a, const Word* b, Word* out) const override { table_.field().mul(a, b, out); }
  void mul_power(const Word* a, std::size_t j, Word* out) const override {
    table_.field().mul(a, table_.power(j), out);
  }

 private:
  const TwiddleTable& table_;
};

enum class TwiddleMode { kGeneric, kCheapR };

/// values[i] = P(omega^i), radix-2 decimation in time. kCheapR requires omega
/// to be a power of r and routes every twiddle through GfpField::shift.
EvalVector radix2_fft(const EvalVector& v, const GfpElement& omega, const GfpParams& params,
                      TwiddleMode mode, OpCounters* counters = nullptr);

/// DFT of length N = v.length at the root table.power(order/N), computed with
/// blocks of 2^(lambda+1) whose inner twiddles are powers of r.
EvalVector large_radix_fft(const EvalVector& v, const TwiddleTable& table, OpCounters* counters = nullptr,
                           Direction dir = Direction::kForward, const ExpensiveProduct* product = nullptr);

/// Forward: coefficients of P mod x^N+1 to (P(w), P(w^3), ..., P(w^(2N-1))).
/// Inverse: the exact inverse map. Requires table.order() == 2N.
EvalVector half_dft(const EvalVector& v, const TwiddleTable& table, Direction dir,
                    OpCounters* counters = nullptr, const ExpensiveProduct* product = nullptr);

EvalVector pointwise_product(const EvalVector& a, const EvalVector& b, const GfpParams& params,
                             OpCounters* counters = nullptr, const ExpensiveProduct* product = nullptr);

/// In-place kernels over n flat elements; used by the multiplier.
void large_radix_fft_inplace(Word* data, std::size_t n, const TwiddleTable& table, Direction dir,
                             const ExpensiveProduct& product, OpCounters* counters);
void half_dft_inplace(Word* data, std::size_t n, const TwiddleTable& table, Direction dir,
                      const ExpensiveProduct& product, OpCounters* counters);
/// Cyclic DFT of length n = order/2 at omega^2, with the inverse scaled by
/// 1/n; the weightless variant of half_dft_inplace.
void cyclic_dft_inplace(Word* data, std::size_t n, const TwiddleTable& table, Direction dir,
                        const ExpensiveProduct& product, OpCounters* counters);

}  // namespace gfpmul

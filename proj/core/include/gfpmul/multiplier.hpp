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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfpmul/biguint.hpp"
#include "gfpmul/gfp.hpp"
#include "gfpmul/primes.hpp"
#include "gfpmul/transform.hpp"

namespace gfpmul {

enum class PrimeSelection {
  kPractical,    // smallest prime with floor(log2 p) >= 2 eta + log2 N
  kTheoretical,  // first prime above R inside the window [R, R (1 + lambda^2)]
};

struct PlanConfig {
  /// Levels whose operands are smaller than this many bits use the base case.
  std::size_t threshold_bits = 4096;
  unsigned max_depth = 4;
  PrimeSelection selection = PrimeSelection::kPractical;
  GammaShape gamma = GammaShape::kIdentity;
  /// Forces lambda at the top level.
  std::optional<unsigned> top_lambda;
  /// Multiply field elements by coefficient grouping when a valid beta exists.
  bool grouping = true;
  /// Use a plain cyclic transform at the top level instead of the half-DFT.
  bool skip_top_weights = false;
  /// Precompute next-level transforms of every twiddle factor.
  bool cache_twiddles = true;
  /// Off: levels only, no twiddle tables; such a plan can be printed but not executed.
  bool build_tables = true;
  /// Twiddle images are skipped for a level when they would exceed this.
  std::size_t cache_limit_bytes = std::size_t{1} << 28;
  /// Theoretical mode searches r up to R (1 + lambda^2) times this factor.
  double window_multiplier = 1.0;
};

struct PlanLevel {
  GfpParams params;
  /// Chunk size in bits for integer levels; 0 on grouped levels.
  std::uint64_t eta = 0;
  /// Transform length.
  std::size_t big_n = 0;
  /// How this level's field elements are multiplied by the next level:
  /// grouping factor, or 0 for Kronecker substitution (and for the last level).
  unsigned beta = 0;
  /// Largest operand handled, in bits (integer levels).
  std::size_t operand_bits = 0;
  /// True when the level multiplies beta-grouped chunk polynomials of the
  /// previous field rather than integers.
  bool grouped = false;
  /// Root of order 2N over this level's field.
  std::shared_ptr<const TwiddleTable> table;
};

struct MultiplyPlan {
  std::size_t top_n = 0;
  std::vector<PlanLevel> levels;
  PlanConfig config;

  std::size_t depth() const noexcept { return levels.size(); }
};

/// Builds the chain of fields and tables for n-bit operands.
MultiplyPlan precompute(std::size_t n, const PlanConfig& config = {});

/// Exact product. `counters`, when given, is resized to plan.depth() and
/// receives the per-level transform counts. Throws Overflow when the operands
/// exceed the plan.
BigUint multiply(const BigUint& a, const BigUint& b, const MultiplyPlan& plan,
                 std::vector<OpCounters>* counters = nullptr);

/// Product of two elements of levels[level]'s field through the deeper levels.
GfpElement mul_recursive(const GfpElement& a, const GfpElement& b, const MultiplyPlan& plan, std::size_t level,
                         std::vector<OpCounters>* counters = nullptr);

/// Largest power of two beta (at most 2^lambda) with
/// 2 beta log2 r + lambda - log2 beta <= 2 gamma(next_lambda) 2^next_lambda.
/// Throws NoValidBeta when beta = 1 already fails.
unsigned choose_beta(const GfpParams& params, unsigned next_lambda, GammaShape gamma = GammaShape::kIdentity);

/// Smallest lambda' with 2^lambda' >= log2 log2 p.
unsigned next_level_lambda(const GfpParams& params);

/// Chunks sum_{i<beta} coeffs[j beta + i] r^i of an element whose flag is clear.
std::vector<BigUint> group_coefficients(const GfpElement& e, unsigned beta, const GfpParams& params);
GfpElement ungroup_coefficients(const std::vector<BigUint>& chunks, unsigned beta, const GfpParams& params);

/// Integer with a sign, for centered coefficients.
struct SignedInt {
  bool negative = false;
  BigUint magnitude;
  friend bool operator==(const SignedInt&, const SignedInt&) = default;
};

/// Negacyclic product of two chunk polynomials of length M = big_n of the
/// grouped level `level`, computed by half-DFT over that level's field.
std::vector<SignedInt> recursive_level_multiply(const std::vector<BigUint>& a, const std::vector<BigUint>& b,
                                                const MultiplyPlan& plan, std::size_t level,
                                                std::vector<OpCounters>* counters = nullptr);

/// Packs both elements at 2 ceil(log2 r) + lambda bits per digit, multiplies
/// the packed integers with `inner`, unpacks with negacyclic folding.
using IntegerMultiplier = std::function<BigUint(const BigUint&, const BigUint&)>;
GfpElement kronecker_multiply(const GfpElement& a, const GfpElement& b, const GfpParams& params,
                              const IntegerMultiplier& inner);

/// Assembles a plan from explicit levels; validates and builds tables.
MultiplyPlan plan_from_levels(std::size_t top_n, std::vector<PlanLevel> levels, const PlanConfig& config = {});

/// `level i: r=<r> lambda=<l> eta=<eta> N=<N> beta=<beta>`, one line per level.
std::string serialize_plan(const MultiplyPlan& plan);
/// Rebuilds a plan (tables included) from serialize_plan output. Throws Parse.
MultiplyPlan parse_plan(const std::string& text, const PlanConfig& config = {});

}  // namespace gfpmul

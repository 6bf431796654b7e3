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
#include <vector>

#include "gfpmul/primality.hpp"

namespace gfpmul {

/// Shape of the exponent sequence gamma(lambda) in the density hypotheses.
enum class GammaShape {
  kIdentity,  // gamma(lambda) = lambda
  kLogUpper,  // max(lambda, floor(lambda*log2(lambda)/2 - lambda/4))
  kSquare,    // lambda^2
};

unsigned gamma_value(unsigned lambda, GammaShape shape);

struct DensityParams {
  unsigned lambda = 1;
  std::uint64_t K = 1'000'000;
  GammaShape gamma_shape = GammaShape::kIdentity;
};

/// Even bases r in [lo, hi] for exponent 2^lambda.
struct SearchWindow {
  unsigned lambda = 1;
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;

  /// [X, X(1+lambda^2)].
  static SearchWindow around(unsigned lambda, std::uint64_t x);
};

/// Every even r in the window with r^(2^lambda)+1 prime, ascending.
/// `jobs` worker threads split the candidates; the result does not depend on it.
std::vector<std::uint64_t> list_gfp(const SearchWindow& window, unsigned jobs = 1);
std::uint64_t count_gfp(const SearchWindow& window, unsigned jobs = 1);

enum class SearchDirection { kUp, kDown };

/// kUp: smallest even r >= r_start (up to `ceiling`) with r^(2^lambda)+1
/// prime. kDown: largest such r <= r_start. Throws SearchExhausted.
std::uint64_t next_gfp(std::uint64_t r_start, unsigned lambda, SearchDirection dir = SearchDirection::kUp,
                       std::uint64_t ceiling = std::uint64_t{1} << 32);

/// Smallest even r with r^(2^lambda) >= 2^min_bits, i.e. floor(log2 p) >= min_bits.
std::uint64_t first_base_with_bits(unsigned lambda, std::size_t min_bits);

/// Smallest generalized Fermat prime base r with floor(log2 p) >= min_bits.
std::uint64_t smallest_gfp_with_bits(unsigned lambda, std::size_t min_bits,
                                     std::uint64_t ceiling = std::uint64_t{1} << 32);

struct CLambdaReport {
  double value = 1.0;       // t(K)/u(K)
  double value_2k = 1.0;    // t(2K)/u(2K)
  double rel_change = 0.0;  // |value_2k - value| / value
};

/// t(K,lambda)/u(K,lambda): t over primes q = k*2^(lambda+1)+1 with k <= K of
/// (1 - 2^lambda/q), u over all primes q <= K*2^(lambda+1)+1 of (1 - 1/q).
double c_lambda(const DensityParams& dp, unsigned jobs = 1);
CLambdaReport c_lambda_report(const DensityParams& dp, unsigned jobs = 1);

/// E(R) = (C/2) / 2^lambda * sum_{r=2}^{R} 1/ln r, with C = c_lambda. The
/// factor 1/2 is the local factor at q = 2 that t omits.
double expectancy(std::uint64_t R, unsigned lambda, double c);
double expectancy(std::uint64_t R, const DensityParams& dp);

/// E(R(1+lambda^2)) - E(R).
double delta(std::uint64_t R, unsigned lambda, double c);
double delta(std::uint64_t R, const DensityParams& dp);

/// Asymptotic form (C/2) (R/2^lambda) ((1+lambda^2)/ln(R(1+lambda^2)) - 1/ln R).
double delta_closed(double R, unsigned lambda, double c);

struct WindowSample {
  std::uint64_t x = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool exists = false;
  std::uint64_t first = 0;  // smallest base found, 0 when none
};

struct WindowReport {
  unsigned lambda = 0;
  unsigned gamma = 0;
  std::vector<WindowSample> samples;
};

/// Checks whether [X, X(1+lambda^2)] holds a generalized Fermat prime base for
/// X = 2^gamma, 2^(2 gamma) and `samples` geometrically spaced values between.
WindowReport hypothesis_window_check(unsigned lambda, GammaShape shape, unsigned samples = 0);

/// One line of a prime table: `min_bits max_bits r lambda`.
struct PrimeTableEntry {
  std::string min_bits;
  std::string max_bits;
  std::uint64_t r = 0;
  unsigned lambda = 0;
};

/// Parses prime-table text; `#` starts a comment. Throws Parse.
std::vector<PrimeTableEntry> parse_prime_table(const std::string& text);

}  // namespace gfpmul

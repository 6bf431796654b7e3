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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gfpmul {

/// How the chunk size eta is chosen for a prime.
enum class EtaRule {
  kTable,   ///< largest power of two with 2 eta <= floor(log2 p)
  kStrict,  ///< largest power of two with 2 eta + log2(2n/eta) <= floor(log2 p)
};

/// Prime descriptor; (r, lambda) stands for r^(2^lambda) + 1.
struct PrimeSpec {
  std::uint64_t r = 2;
  unsigned lambda = 1;
};

/// One prime per line: `r^D+1` (D a power of two), `r lambda`, or a
/// `min_bits max_bits r lambda` table row. `#` starts a comment. Throws Parse.
std::vector<PrimeSpec> parse_prime_list(const std::string& text);

struct CountResult {
  std::uint64_t eta = 0;
  std::uint64_t big_n = 0;
  std::uint64_t count = 0;
};

struct CostReport {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  unsigned lambda = 0;
  std::uint64_t eta = 0;
  std::uint64_t big_n = 0;
  std::uint64_t expensive_count = 0;
  std::uint64_t ks_bits = 0;
  std::optional<double> est_time_s;
};

/// floor(log2(r^(2^lambda) + 1)).
std::uint64_t floor_log2_gfp(std::uint64_t r, unsigned lambda);

/// N (3 ceil(log2 N / (lambda+1)) + 1): transforms, weights and pointwise products.
std::uint64_t full_multiply_count(std::uint64_t big_n, unsigned lambda);
/// N (2 ceil(log2 N / (lambda+1)) + 1): one operand transform saved.
std::uint64_t cached_multiply_count(std::uint64_t big_n, unsigned lambda);
/// N (ceil(log2 N / radix_log) - 1).
std::uint64_t fermat_fft_count(std::uint64_t big_n, unsigned radix_log);

/// Throws NoValidEta when no power-of-two eta fits, OutOfRange unless n is a power of two.
CountResult expensive_count(std::uint64_t n, std::uint64_t r, unsigned lambda, EtaRule rule = EtaRule::kTable);

/// (2 ceil(log2 r) + lambda) 2^lambda.
std::uint64_t ks_bitsize(std::uint64_t r, unsigned lambda);

/// Approximate Schonhage-Strassen split count 2^ceil((log2 n + 1) / 2).
std::uint64_t ssa_split_count(std::uint64_t n);

/// Seconds per multiplication keyed by bit size.
class TimingProfile {
 public:
  TimingProfile() = default;
  /// Throws Parse unless sizes are positive and strictly increasing.
  explicit TimingProfile(std::map<std::uint64_t, double> points);
  /// Lines `bits=<b> seconds=<s>`; blank lines and '#' comments ignored.
  static TimingProfile parse(const std::string& text);

  bool empty() const noexcept { return points_.empty(); }
  /// Piecewise linear in log2(bits), clamped to the end points.
  double seconds(std::uint64_t bits) const;

 private:
  std::map<std::uint64_t, double> points_;
};

std::vector<CostReport> table_report(std::uint64_t n, const std::vector<PrimeSpec>& primes,
                                     const std::optional<TimingProfile>& profile = std::nullopt,
                                     EtaRule rule = EtaRule::kTable);

/// "2^26*19" style rendering of N (3 ceil(..) + 1).
std::string format_count(const CostReport& row);
std::string format_report_text(const std::vector<CostReport>& rows);
std::string format_report_records(const std::vector<CostReport>& rows);

}  // namespace gfpmul

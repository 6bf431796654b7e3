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

#include "gfpmul/primes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "gfpmul/biguint.hpp"
#include "gfpmul/error.hpp"

namespace gfpmul {

namespace {

std::uint64_t first_even_at_least(std::uint64_t x) { return x <= 2 ? 2 : x + (x & 1U); }

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

struct SegmentSums {
  long double log_t_k = 0;
  long double log_u_k = 0;
  long double log_t_2k = 0;
  long double log_u_2k = 0;
};

// Sieves [lo, hi) and accumulates log t and log u for both cutoffs.
SegmentSums sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                          unsigned lambda, std::uint64_t bound_k, std::uint64_t K) {
  SegmentSums sums;
  std::vector<char> composite(hi - lo, 0);
  for (const std::uint32_t q : base) {
    const std::uint64_t qq = std::uint64_t{q} * q;
    if (qq >= hi) break;
    std::uint64_t start = std::max(qq, (lo + q - 1) / q * q);
    for (std::uint64_t j = start; j < hi; j += q) composite[j - lo] = 1;
  }
  const std::uint64_t modulus = std::uint64_t{2} << lambda;
  const long double two_lambda = std::ldexp(1.0L, static_cast<int>(lambda));
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n) {
    if (composite[n - lo]) continue;
    const long double q = static_cast<long double>(n);
    const long double lu = std::log1p(-1.0L / q);
    const bool proth = (n - 1) % modulus == 0 && (n - 1) / modulus >= 1;
    const long double lt = proth ? std::log1p(-two_lambda / q) : 0.0L;
    const bool in_t_2k = proth && (n - 1) / modulus <= 2 * K;
    sums.log_u_2k += lu;
    if (in_t_2k) sums.log_t_2k += lt;
    if (n <= bound_k) {
      sums.log_u_k += lu;
      if (proth && (n - 1) / modulus <= K) sums.log_t_k += lt;
    }
  }
  return sums;
}

CLambdaReport run_c_lambda(const DensityParams& dp, unsigned jobs, bool with_2k) {
  const std::uint64_t modulus = std::uint64_t{2} << dp.lambda;
  const std::uint64_t bound_k = dp.K * modulus + 1;
  const std::uint64_t bound = with_2k ? 2 * dp.K * modulus + 1 : bound_k;
  CLambdaReport report;
  if (dp.K == 0) return report;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(bound))) + 2;
  const std::vector<std::uint32_t> base = small_primes(root);
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;
  const std::uint64_t segments = bound / kSegment + 1;
  std::vector<SegmentSums> sums(segments);
  jobs = std::max(1U, jobs);
  auto worker = [&](unsigned id) {
    for (std::uint64_t s = id; s < segments; s += jobs) {
      const std::uint64_t lo = s * kSegment;
      const std::uint64_t hi = std::min(bound + 1, lo + kSegment);
      sums[s] = sieve_segment(lo, hi, base, dp.lambda, bound_k, dp.K);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  SegmentSums total;
  for (const SegmentSums& s : sums) {
    total.log_t_k += s.log_t_k;
    total.log_u_k += s.log_u_k;
    total.log_t_2k += s.log_t_2k;
    total.log_u_2k += s.log_u_2k;
  }
  report.value = static_cast<double>(std::exp(total.log_t_k - total.log_u_k));
  if (with_2k) {
    report.value_2k = static_cast<double>(std::exp(total.log_t_2k - total.log_u_2k));
    report.rel_change = std::abs(report.value_2k - report.value) / report.value;
  } else {
    report.value_2k = report.value;
  }
  return report;
}

long double inverse_log_sum(std::uint64_t from, std::uint64_t to) {
  long double s = 0;
  for (std::uint64_t r = std::max<std::uint64_t>(from, 2); r <= to; ++r) {
    s += 1.0L / std::log(static_cast<long double>(r));
  }
  return s;
}

std::uint64_t window_hi(unsigned lambda, std::uint64_t x) {
  const unsigned __int128 hi = static_cast<unsigned __int128>(x) * (1 + std::uint64_t{lambda} * lambda);
  if (hi >> 63) throw Error(Errc::kOutOfRange, "search window exceeds 2^63");
  return static_cast<std::uint64_t>(hi);
}

}  // namespace

unsigned gamma_value(unsigned lambda, GammaShape shape) {
  switch (shape) {
    case GammaShape::kIdentity: return lambda;
    case GammaShape::kLogUpper: {
      const double v = 0.5 * lambda * std::log2(static_cast<double>(lambda)) - 0.25 * lambda;
      return std::max(lambda, static_cast<unsigned>(std::floor(v)));
    }
    case GammaShape::kSquare: return lambda * lambda;
  }
  return lambda;
}

SearchWindow SearchWindow::around(unsigned lambda, std::uint64_t x) {
  return SearchWindow{lambda, x, window_hi(lambda, x)};
}

std::vector<std::uint64_t> list_gfp(const SearchWindow& window, unsigned jobs) {
  if (window.lo > window.hi) throw Error(Errc::kOutOfRange, "window lower bound exceeds upper bound");
  const std::uint64_t first = first_even_at_least(window.lo);
  if (first > window.hi) return {};
  const std::uint64_t count = (window.hi - first) / 2 + 1;
  jobs = std::max(1U, jobs);
  std::vector<std::vector<std::uint64_t>> found(jobs);
  auto worker = [&](unsigned id) {
    for (std::uint64_t i = id; i < count; i += jobs) {
      const std::uint64_t r = first + 2 * i;
      if (is_gfp_prime(r, window.lambda)) found[id].push_back(r);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  std::vector<std::uint64_t> out;
  for (const auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_gfp(const SearchWindow& window, unsigned jobs) { return list_gfp(window, jobs).size(); }

std::uint64_t next_gfp(std::uint64_t r_start, unsigned lambda, SearchDirection dir, std::uint64_t ceiling) {
  if (r_start < 2) r_start = 2;
  if (dir == SearchDirection::kUp) {
    for (std::uint64_t r = first_even_at_least(r_start); r <= ceiling; r += 2) {
      if (is_gfp_prime(r, lambda)) return r;
    }
  } else {
    for (std::uint64_t r = r_start & ~std::uint64_t{1}; r >= 2; r -= 2) {
      if (is_gfp_prime(r, lambda)) return r;
    }
  }
  throw Error(Errc::kSearchExhausted, "no generalized Fermat prime with exponent 2^" + std::to_string(lambda) +
                                          " from r = " + std::to_string(r_start));
}

std::uint64_t first_base_with_bits(unsigned lambda, std::size_t min_bits) {
  const std::uint64_t e = std::uint64_t{1} << lambda;
  const BigUint target = BigUint::power_of_two(min_bits);
  std::uint64_t lo = 1;
  std::uint64_t hi = 2;
  while (BigUint::pow(hi, e) < target) {
    if (hi >> 62) throw Error(Errc::kOutOfRange, "base for 2^" + std::to_string(min_bits) + " exceeds 64 bits");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (BigUint::pow(mid, e) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return first_even_at_least(hi);
}

std::uint64_t smallest_gfp_with_bits(unsigned lambda, std::size_t min_bits, std::uint64_t ceiling) {
  return next_gfp(first_base_with_bits(lambda, min_bits), lambda, SearchDirection::kUp, ceiling);
}

double c_lambda(const DensityParams& dp, unsigned jobs) { return run_c_lambda(dp, jobs, false).value; }

CLambdaReport c_lambda_report(const DensityParams& dp, unsigned jobs) { return run_c_lambda(dp, jobs, true); }

double expectancy(std::uint64_t R, unsigned lambda, double c) {
  const long double scale = 0.5L * c / std::ldexp(1.0L, static_cast<int>(lambda));
  return static_cast<double>(scale * inverse_log_sum(2, R));
}

double expectancy(std::uint64_t R, const DensityParams& dp) { return expectancy(R, dp.lambda, c_lambda(dp)); }

double delta(std::uint64_t R, unsigned lambda, double c) {
  const long double scale = 0.5L * c / std::ldexp(1.0L, static_cast<int>(lambda));
  return static_cast<double>(scale * inverse_log_sum(R + 1, window_hi(lambda, R)));
}

double delta(std::uint64_t R, const DensityParams& dp) { return delta(R, dp.lambda, c_lambda(dp)); }

double delta_closed(double R, unsigned lambda, double c) {
  const double w = 1.0 + static_cast<double>(lambda) * lambda;
  return 0.5 * c * (R / std::ldexp(1.0, static_cast<int>(lambda))) * (w / std::log(R * w) - 1.0 / std::log(R));
}

WindowReport hypothesis_window_check(unsigned lambda, GammaShape shape, unsigned samples) {
  WindowReport report;
  report.lambda = lambda;
  report.gamma = gamma_value(lambda, shape);
  if (2 * report.gamma > 56) throw Error(Errc::kOutOfRange, "gamma too large for a desk-scale window check");
  std::vector<std::uint64_t> xs;
  const double lo = report.gamma;
  const double hi = 2.0 * report.gamma;
  xs.push_back(std::uint64_t{1} << report.gamma);
  for (unsigned i = 1; i <= samples; ++i) {
    const double e = lo + (hi - lo) * i / (samples + 1);
    xs.push_back(static_cast<std::uint64_t>(std::llround(std::exp2(e))));
  }
  xs.push_back(std::uint64_t{1} << (2 * report.gamma));
  for (const std::uint64_t x : xs) {
    WindowSample s;
    s.x = x;
    s.lo = x;
    s.hi = window_hi(lambda, x);
    try {
      s.first = next_gfp(x, lambda, SearchDirection::kUp, s.hi);
      s.exists = true;
    } catch (const Error& e) {
      if (e.code() != Errc::kSearchExhausted) throw;
    }
    report.samples.push_back(s);
  }
  return report;
}

std::vector<PrimeTableEntry> parse_prime_table(const std::string& text) {
  std::vector<PrimeTableEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 4) {
      throw Error(Errc::kParse, "line " + std::to_string(lineno) + ": expected `min_bits max_bits r lambda`");
    }
    PrimeTableEntry e;
    e.min_bits = tok[0];
    e.max_bits = tok[1];
    try {
      std::size_t used = 0;
      e.r = std::stoull(tok[2], &used);
      if (used != tok[2].size()) throw std::invalid_argument(tok[2]);
      e.lambda = static_cast<unsigned>(std::stoul(tok[3], &used));
      if (used != tok[3].size()) throw std::invalid_argument(tok[3]);
    } catch (const std::logic_error&) {
      throw Error(Errc::kParse, "line " + std::to_string(lineno) + ": r and lambda must be integers");
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace gfpmul

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

#include "gfpmul/costmodel.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "gfpmul/biguint.hpp"
#include "gfpmul/error.hpp"

namespace gfpmul {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

unsigned log2_pow2(std::uint64_t x, const char* what) {
  if (x == 0 || (x & (x - 1)) != 0) throw Error(Errc::kOutOfRange, std::string(what) + " must be a power of two");
  return static_cast<unsigned>(std::countr_zero(x));
}

unsigned ceil_log2(std::uint64_t r) { return r <= 1 ? 0 : static_cast<unsigned>(std::bit_width(r - 1)); }

}  // namespace

std::vector<PrimeSpec> parse_prime_list(const std::string& text) {
  std::vector<PrimeSpec> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto bad = [&] { return Error(Errc::kParse, "prime list line " + std::to_string(line_no) + ": " + line); };
    const auto number = [&](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) throw bad();
      return std::stoull(s);
    };
    PrimeSpec spec;
    if (tok.size() == 1) {
      const auto caret = tok[0].find('^');
      if (caret == std::string::npos || tok[0].size() < caret + 3 || tok[0].substr(tok[0].size() - 2) != "+1") {
        throw bad();
      }
      spec.r = number(tok[0].substr(0, caret));
      const std::uint64_t degree = number(tok[0].substr(caret + 1, tok[0].size() - caret - 3));
      if (degree < 2 || (degree & (degree - 1)) != 0) throw bad();
      spec.lambda = static_cast<unsigned>(std::countr_zero(degree));
    } else if (tok.size() == 2 || tok.size() == 4) {
      spec.r = number(tok[tok.size() - 2]);
      spec.lambda = static_cast<unsigned>(number(tok[tok.size() - 1]));
    } else {
      throw bad();
    }
    if (spec.r < 2 || spec.lambda == 0 || spec.lambda > 20) throw bad();
    out.push_back(spec);
  }
  return out;
}

std::uint64_t floor_log2_gfp(std::uint64_t r, unsigned lambda) {
  if (r < 2 || lambda > 20) throw Error(Errc::kOutOfRange, "prime descriptor out of range");
  BigUint p = BigUint::pow(r, std::uint64_t{1} << lambda);
  p.add_small(1);
  return p.bit_length() - 1;
}

std::uint64_t full_multiply_count(std::uint64_t big_n, unsigned lambda) {
  const unsigned l = log2_pow2(big_n, "N");
  return big_n * (3 * ceil_div(l, lambda + 1) + 1);
}

std::uint64_t cached_multiply_count(std::uint64_t big_n, unsigned lambda) {
  const unsigned l = log2_pow2(big_n, "N");
  return big_n * (2 * ceil_div(l, lambda + 1) + 1);
}

std::uint64_t fermat_fft_count(std::uint64_t big_n, unsigned radix_log) {
  if (radix_log == 0) throw Error(Errc::kOutOfRange, "radix_log must be positive");
  const unsigned l = log2_pow2(big_n, "N");
  if (l == 0) return 0;
  return big_n * (ceil_div(l, radix_log) - 1);
}

CountResult expensive_count(std::uint64_t n, std::uint64_t r, unsigned lambda, EtaRule rule) {
  const unsigned log_n = log2_pow2(n, "n");
  const std::uint64_t budget = floor_log2_gfp(r, lambda);
  std::optional<unsigned> best;
  for (unsigned e = 0; e <= log_n; ++e) {
    const std::uint64_t eta = std::uint64_t{1} << e;
    std::uint64_t need = 2 * eta;
    if (rule == EtaRule::kStrict) need += log_n + 1 - e;
    if (need > budget) break;
    best = e;
  }
  if (!best) {
    throw Error(Errc::kNoValidEta, "no power-of-two eta fits " + std::to_string(r) + "^" +
                                       std::to_string(std::uint64_t{1} << lambda) + "+1 at n=2^" +
                                       std::to_string(log_n));
  }
  CountResult out;
  out.eta = std::uint64_t{1} << *best;
  out.big_n = std::uint64_t{1} << (log_n + 1 - *best);
  out.count = full_multiply_count(out.big_n, lambda);
  return out;
}

std::uint64_t ks_bitsize(std::uint64_t r, unsigned lambda) {
  return (2 * std::uint64_t{ceil_log2(r)} + lambda) << lambda;
}

std::uint64_t ssa_split_count(std::uint64_t n) {
  const unsigned l = log2_pow2(n, "n");
  return std::uint64_t{1} << ((l + 2) / 2);
}

TimingProfile::TimingProfile(std::map<std::uint64_t, double> points) : points_(std::move(points)) {
  if (!points_.empty() && points_.begin()->first == 0) throw Error(Errc::kParse, "profile sizes must be positive");
}

TimingProfile TimingProfile::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::uint64_t, double> points;
  std::uint64_t last = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    const auto bad = [&] { return Error(Errc::kParse, "profile line " + std::to_string(line_no) + ": " + line); };
    if (!(fields >> b) || (fields >> extra) || a.rfind("bits=", 0) != 0 || b.rfind("seconds=", 0) != 0) throw bad();
    std::uint64_t bits = 0;
    double seconds = 0;
    try {
      std::size_t pos = 0;
      bits = std::stoull(a.substr(5), &pos);
      if (pos != a.size() - 5) throw bad();
      seconds = std::stod(b.substr(8), &pos);
      if (pos != b.size() - 8) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (bits == 0 || bits <= last || !(seconds >= 0)) throw bad();
    last = bits;
    points.emplace(bits, seconds);
  }
  return TimingProfile(std::move(points));
}

double TimingProfile::seconds(std::uint64_t bits) const {
  if (points_.empty()) throw Error(Errc::kOutOfRange, "empty timing profile");
  if (bits <= points_.begin()->first) return points_.begin()->second;
  if (bits >= points_.rbegin()->first) return points_.rbegin()->second;
  const auto hi = points_.upper_bound(bits);
  const auto lo = std::prev(hi);
  const double x0 = std::log2(static_cast<double>(lo->first));
  const double x1 = std::log2(static_cast<double>(hi->first));
  const double t = (std::log2(static_cast<double>(bits)) - x0) / (x1 - x0);
  return lo->second + t * (hi->second - lo->second);
}

std::vector<CostReport> table_report(std::uint64_t n, const std::vector<PrimeSpec>& primes,
                                     const std::optional<TimingProfile>& profile, EtaRule rule) {
  std::vector<CostReport> rows;
  rows.reserve(primes.size());
  for (const PrimeSpec& prime : primes) {
    const CountResult c = expensive_count(n, prime.r, prime.lambda, rule);
    CostReport row;
    row.n = n;
    row.r = prime.r;
    row.lambda = prime.lambda;
    row.eta = c.eta;
    row.big_n = c.big_n;
    row.expensive_count = c.count;
    row.ks_bits = ks_bitsize(prime.r, prime.lambda);
    if (profile && !profile->empty()) {
      row.est_time_s = static_cast<double>(row.expensive_count) * profile->seconds(row.ks_bits);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_count(const CostReport& row) {
  return "2^" + std::to_string(std::countr_zero(row.big_n)) + "*" +
         std::to_string(row.expensive_count / row.big_n);
}

std::string format_report_text(const std::vector<CostReport>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "prime" << std::setw(8) << "eta" << std::setw(10) << "N" << std::setw(12)
      << "count" << std::setw(9) << "ks_bits" << "est_time_s\n";
  for (const CostReport& row : rows) {
    const std::string prime = std::to_string(row.r) + "^" + std::to_string(std::uint64_t{1} << row.lambda) + "+1";
    out << std::setw(16) << prime << std::setw(8) << row.eta << std::setw(10)
        << ("2^" + std::to_string(std::countr_zero(row.big_n))) << std::setw(12) << format_count(row) << std::setw(9)
        << row.ks_bits;
    if (row.est_time_s) {
      out << std::setprecision(6) << *row.est_time_s;
    } else {
      out << '-';
    }
    out << '\n';
  }
  if (!rows.empty()) {
    out << "# ssa splits ~ " << ssa_split_count(rows.front().n) << " (approximate)\n";
  }
  return out.str();
}

std::string format_report_records(const std::vector<CostReport>& rows) {
  std::ostringstream out;
  for (const CostReport& row : rows) {
    out << "n=" << row.n << " r=" << row.r << " lambda=" << row.lambda << " eta=" << row.eta
        << " big_n=" << row.big_n << " expensive_count=" << row.expensive_count << " ks_bits=" << row.ks_bits;
    if (row.est_time_s) out << " est_time_s=" << std::setprecision(17) << *row.est_time_s;
    out << '\n';
  }
  return out.str();
}

}  // namespace gfpmul

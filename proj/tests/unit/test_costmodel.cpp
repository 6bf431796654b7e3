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

#include <gtest/gtest.h>

#include <cmath>

#include "gfpmul/costmodel.hpp"
#include "gfpmul/error.hpp"

namespace gfpmul {
namespace {

constexpr std::uint64_t pow2(unsigned k) { return std::uint64_t{1} << k; }

struct Cell {
  std::uint64_t r;
  unsigned lambda;
  unsigned log_n;
  unsigned log_big_n;
  std::uint64_t factor;
  std::uint64_t ks;
};

// Every filled cell of the expensive-multiplication comparison table.
const Cell kCostCells[] = {
    {2097208, 3, 30, 25, 22, 376}, {2097208, 3, 36, 31, 25, 376}, {2097208, 3, 40, 35, 28, 376},
    {2072, 4, 36, 31, 22, 448},    {2072, 4, 40, 35, 22, 448},    {2072, 4, 46, 41, 28, 448},
    {74, 4, 30, 26, 19, 288},      {54, 5, 30, 25, 16, 544},      {54, 5, 36, 31, 19, 544},
    {54, 5, 40, 35, 19, 544},      {54, 5, 46, 41, 22, 544},      {562, 5, 30, 24, 13, 800},
    {562, 5, 36, 30, 16, 800},     {562, 5, 40, 34, 19, 800},     {884, 5, 46, 40, 22, 800},
    {131090, 5, 30, 23, 13, 1312}, {131090, 5, 36, 29, 16, 1312}, {131090, 5, 40, 33, 19, 1312},
    {131090, 5, 46, 39, 22, 1312}, {102, 6, 36, 30, 16, 1280},    {102, 6, 40, 34, 16, 1280},
    {562, 6, 36, 29, 16, 1664},    {562, 6, 40, 33, 16, 1664},    {562, 6, 46, 39, 19, 1664},
};

TEST(CostModel, KnownCountsAndBitsizes) {
  for (const Cell& c : kCostCells) {
    const CountResult res = expensive_count(pow2(c.log_n), c.r, c.lambda);
    EXPECT_EQ(res.big_n, pow2(c.log_big_n)) << c.r << "^" << pow2(c.lambda) << " n=2^" << c.log_n;
    EXPECT_EQ(res.count, pow2(c.log_big_n) * c.factor) << c.r << "^" << pow2(c.lambda) << " n=2^" << c.log_n;
    EXPECT_EQ(ks_bitsize(c.r, c.lambda), c.ks) << c.r;
    EXPECT_EQ(res.big_n * res.eta, 2 * pow2(c.log_n));
  }
}

TEST(CostModel, EtaIsMaximal) {
  for (const Cell& c : kCostCells) {
    for (const EtaRule rule : {EtaRule::kTable, EtaRule::kStrict}) {
      const CountResult res = expensive_count(pow2(c.log_n), c.r, c.lambda, rule);
      const std::uint64_t budget = floor_log2_gfp(c.r, c.lambda);
      const auto need = [&](std::uint64_t eta) {
        std::uint64_t bits = 2 * eta;
        if (rule == EtaRule::kStrict) bits += static_cast<std::uint64_t>(std::log2(2.0 * pow2(c.log_n) / eta));
        return bits;
      };
      EXPECT_LE(need(res.eta), budget);
      EXPECT_GT(need(2 * res.eta), budget);
    }
  }
}

TEST(CostModel, StrictRuleExamples) {
  const CountResult a = expensive_count(pow2(30), 74, 4, EtaRule::kStrict);
  EXPECT_EQ(a.eta, 32U);
  EXPECT_EQ(a.count, pow2(26) * 19);
  const CountResult b = expensive_count(pow2(30), 562, 5, EtaRule::kStrict);
  EXPECT_EQ(b.count, pow2(24) * 13);
  const CountResult c = expensive_count(pow2(36), 562, 5, EtaRule::kStrict);
  EXPECT_EQ(c.count, pow2(30) * 16);
  EXPECT_EQ(expensive_count(pow2(40), 131090, 5, EtaRule::kStrict).big_n, pow2(34));
}

TEST(CostModel, ClosedForms) {
  EXPECT_EQ(ks_bitsize(74, 4), 288U);
  EXPECT_EQ(ks_bitsize(54, 5), 544U);
  EXPECT_EQ(ks_bitsize(2, 1), 6U);
  EXPECT_EQ(fermat_fft_count(pow2(5), 5), 0U);
  EXPECT_EQ(fermat_fft_count(pow2(10), 5), 1024U);
  EXPECT_EQ(fermat_fft_count(1, 3), 0U);
  EXPECT_EQ(full_multiply_count(pow2(26), 4), pow2(26) * 19);
  EXPECT_EQ(cached_multiply_count(pow2(26), 4), pow2(26) * 13);
  EXPECT_EQ(ssa_split_count(pow2(30)), pow2(16));
  EXPECT_EQ(floor_log2_gfp(74, 4), 99U);
  for (std::uint64_t r = 2; r < 3000; r += 2) {
    ASSERT_LE(ks_bitsize(r, 4), ks_bitsize(r + 2, 4));
    ASSERT_LT(ks_bitsize(r, 4), ks_bitsize(r, 5));
  }
}

TEST(CostModel, Errors) {
  try {
    (void)expensive_count(pow2(30), 2, 1, EtaRule::kStrict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoValidEta);
  }
  EXPECT_THROW(expensive_count(3000, 74, 4), Error);
  EXPECT_THROW(fermat_fft_count(12, 4), Error);
}

TEST(Profile, ParseAndInterpolate) {
  const TimingProfile p = TimingProfile::parse("# t\nbits=256 seconds=1\n\nbits=1024 seconds=3\n");
  EXPECT_DOUBLE_EQ(p.seconds(256), 1.0);
  EXPECT_DOUBLE_EQ(p.seconds(512), 2.0);
  EXPECT_DOUBLE_EQ(p.seconds(100), 1.0);
  EXPECT_DOUBLE_EQ(p.seconds(5000), 3.0);
  EXPECT_THROW(TimingProfile::parse("bits=512 seconds=1\nbits=256 seconds=2\n"), Error);
  EXPECT_THROW(TimingProfile::parse("bits=512\n"), Error);
  EXPECT_THROW(TimingProfile::parse("bits=x seconds=1\n"), Error);
  EXPECT_THROW(TimingProfile::parse("bits=0 seconds=1\n"), Error);
}

TEST(Report, RowsAndProfiles) {
  EXPECT_TRUE(table_report(pow2(30), {}).empty());
  const std::vector<PrimeSpec> primes = {{2097208, 3}, {74, 4}, {54, 5}, {562, 5}, {131090, 5}};
  const auto rows = table_report(pow2(30), primes);
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(format_count(rows[1]), "2^26*19");
  EXPECT_FALSE(rows[1].est_time_s.has_value());
  const TimingProfile one({{1, 1.0}});
  const auto timed = table_report(pow2(30), primes, one);
  for (const CostReport& row : timed) EXPECT_DOUBLE_EQ(*row.est_time_s, static_cast<double>(row.expensive_count));
  const TimingProfile ramp({{256, 1e-6}, {2048, 4e-6}});
  for (const CostReport& row : table_report(pow2(36), primes, ramp)) {
    EXPECT_DOUBLE_EQ(*row.est_time_s, row.expensive_count * ramp.seconds(row.ks_bits));
  }
  const std::string text = format_report_text(rows);
  EXPECT_NE(text.find("74^16+1"), std::string::npos);
  EXPECT_NE(text.find("approximate"), std::string::npos);
  const std::string rec = format_report_records(timed);
  EXPECT_NE(rec.find("r=74 lambda=4 eta=32 big_n=67108864 expensive_count=1275068416 ks_bits=288 est_time_s="),
            std::string::npos);
}

TEST(Report, PrimeListFormats) {
  const auto list = parse_prime_list("# c\n74^16+1\n54 5\n2^16 2^32 884 5\n");
  ASSERT_EQ(list.size(), 3U);
  EXPECT_EQ(list[0].r, 74U);
  EXPECT_EQ(list[0].lambda, 4U);
  EXPECT_EQ(list[1].lambda, 5U);
  EXPECT_EQ(list[2].r, 884U);
  EXPECT_THROW(parse_prime_list("74^15+1\n"), Error);
  EXPECT_THROW(parse_prime_list("74^16\n"), Error);
  EXPECT_THROW(parse_prime_list("1 2 3\n"), Error);
}

}  // namespace
}  // namespace gfpmul

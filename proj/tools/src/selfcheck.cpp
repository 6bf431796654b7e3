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

#include "gfpmul_tools/selfcheck.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "gfpmul/biguint.hpp"
#include "gfpmul/error.hpp"
#include "gfpmul/gfp.hpp"
#include "gfpmul/multiplier.hpp"
#include "gfpmul/reference/oracles.hpp"
#include "gfpmul/transform.hpp"

namespace gfpmul::tools {

namespace {

using ref::BigNat;

ref::BigNat to_ref(const BigUint& x) { return BigNat::from_hex(x.to_hex()); }

BigNat ref_value(const GfpElement& e, const GfpParams& params) {
  return ref::radix_decode(e.coeffs, e.minus_one_flag, params.r, params.lambda);
}

std::vector<GfpParams> field_zoo() {
  std::vector<GfpParams> out;
  for (auto [r, lambda] : std::initializer_list<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {6, 1}, {44, 4}, {74, 4}, {118, 3}, {54, 5}, {1084, 6}, {1738, 7}}) {
    out.push_back(make_params(r, lambda));
  }
  return out;
}

GfpElement random_element(const GfpParams& params, std::mt19937_64& rng) {
  GfpElement e;
  e.coeffs.assign(params.degree(), 0);
  switch (rng() % 16) {
    case 0:
      e.minus_one_flag = true;
      return e;
    case 1:
      return e;
    case 2:
      for (auto& c : e.coeffs) c = static_cast<Word>(params.r - 1);
      return e;
    default:
      for (auto& c : e.coeffs) c = static_cast<Word>(rng() % params.r);
      return e;
  }
}

std::string describe(const GfpParams& params) {
  return std::to_string(params.r) + "^" + std::to_string(params.degree()) + "+1";
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what();
    }
  }
  void fail(std::string what) {
    result_.passed = false;
    if (result_.detail.empty()) result_.detail = std::move(what);
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<BigNat> ref_values(const EvalVector& v, const GfpParams& params) {
  std::vector<BigNat> out;
  for (const GfpElement& e : v.to_elements(params)) out.push_back(ref_value(e, params));
  return out;
}

EvalVector random_vector(std::size_t n, const GfpParams& params, std::mt19937_64& rng) {
  std::vector<GfpElement> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(random_element(params, rng));
  return EvalVector::from_elements(elems, params);
}

BigUint random_operand(std::size_t bits, std::mt19937_64& rng, unsigned kind) {
  switch (kind % 6) {
    case 0: return BigUint::power_of_two(bits) - BigUint(1);
    case 1: return BigUint::power_of_two(bits - 1);
    case 2: return BigUint(1);
    case 3: return BigUint::random_bits(1 + rng() % bits, rng);
    default: return BigUint::random_bits(bits, rng);
  }
}

}  // namespace

CheckResult check_field_ops(const SelfcheckOptions& opt) {
  Recorder rec("field_ops");
  std::mt19937_64 rng(opt.seed);
  const auto zoo = field_zoo();
  for (std::uint64_t s = 0; s < opt.field_samples; ++s) {
    const GfpParams& params = zoo[s % zoo.size()];
    const BigNat p = ref::gfp_modulus(params.r, params.lambda);
    const GfpElement a = random_element(params, rng);
    const GfpElement b = random_element(params, rng);
    const GfpElement c = random_element(params, rng);
    const BigNat ra = ref_value(a, params);
    const BigNat rb = ref_value(b, params);
    const auto ctx = [&](const char* op) {
      return std::string(op) + " mismatch in " + describe(params) + " at sample " + std::to_string(s);
    };
    rec.expect(ref_value(add(a, b, params), params) == (ra + rb) % p, [&] { return ctx("add"); });
    rec.expect(ref_value(sub(a, b, params), params) == (ra + (p - rb)) % p, [&] { return ctx("sub"); });
    rec.expect(ref_value(neg(a, params), params) == (p - ra) % p, [&] { return ctx("neg"); });
    const GfpElement prod = mul_generic(a, b, params);
    rec.expect(ref_value(prod, params) == ref::mul_mod(ra, rb, p), [&] { return ctx("mul"); });
    rec.expect(mul_generic(a, b, params, MulStrategy::kKronecker) == prod, [&] { return ctx("kronecker mul"); });
    if (params.degree() <= GfpField::kSchoolbookMaxDegree) {
      rec.expect(mul_generic(a, b, params, MulStrategy::kSchoolbook) == prod, [&] { return ctx("schoolbook mul"); });
    }
    rec.expect(decode(encode(decode(a, params), params), params) == decode(a, params),
               [&] { return ctx("encode/decode"); });
    const GfpElement lhs = mul_generic(a, add(b, c, params), params);
    const GfpElement rhs = add(prod, mul_generic(a, c, params), params);
    rec.expect(lhs == rhs, [&] { return ctx("distributivity"); });
    rec.expect(mul_generic(b, a, params) == prod, [&] { return ctx("commutativity"); });
  }
  return rec.done();
}

CheckResult check_shifts(const SelfcheckOptions& opt) {
  Recorder rec("shifts");
  std::mt19937_64 rng(opt.seed + 1);
  for (const GfpParams& params : field_zoo()) {
    const BigNat p = ref::gfp_modulus(params.r, params.lambda);
    for (int rep = 0; rep < 4; ++rep) {
      const GfpElement a = random_element(params, rng);
      const BigNat ra = ref_value(a, params);
      for (std::size_t j = 0; j < params.shift_period(); ++j) {
        const GfpElement shifted = mul_by_r_power(a, j, params);
        const GfpElement rj = encode(BigUint::pow(params.r, j) % params.p, params);
        rec.expect(shifted == mul_generic(a, rj, params), [&] {
          return "shift by r^" + std::to_string(j) + " differs from generic product in " + describe(params);
        });
        rec.expect(ref_value(shifted, params) == ref::mul_mod(ra, ref::pow_mod(BigNat(params.r), j, p), p), [&] {
          return "shift by r^" + std::to_string(j) + " differs from reference in " + describe(params);
        });
      }
    }
    bool threw = false;
    try {
      (void)mul_by_r_power(GfpElement{std::vector<Word>(params.degree(), 0), false}, params.shift_period(), params);
    } catch (const Error& e) {
      threw = e.code() == Errc::kShiftOutOfRange;
    }
    rec.expect(threw, [&] { return "shift by 2^(lambda+1) accepted in " + describe(params); });
  }
  return rec.done();
}

CheckResult check_fft(const SelfcheckOptions& opt) {
  Recorder rec("fft_vs_naive");
  std::mt19937_64 rng(opt.seed + 2);
  for (const GfpParams& params : {make_params(44, 4), make_params(54, 5), make_params(6, 1)}) {
    const BigNat p = ref::gfp_modulus(params.r, params.lambda);
    const std::uint64_t two_adic = static_cast<std::uint64_t>(std::countr_zero(params.r)) * params.degree();
    for (std::size_t n = 2; n <= 64 && std::countr_zero(n) <= static_cast<int>(two_adic); n *= 2) {
      const TwiddleTable table(params, n);
      const GfpElement omega = table.root();
      for (int rep = 0; rep < 3; ++rep) {
        const EvalVector v = random_vector(n, params, rng);
        const auto expect = ref::naive_dft(ref_values(v, params), ref_value(omega, params), p);
        const auto ctx = [&](const char* which) {
          return std::string(which) + " N=" + std::to_string(n) + " in " + describe(params);
        };
        const EvalVector large = large_radix_fft(v, table);
        rec.expect(ref_values(large, params) == expect, [&] { return ctx("large-radix FFT"); });
        const EvalVector r2 = radix2_fft(v, omega, params, TwiddleMode::kGeneric);
        rec.expect(ref_values(r2, params) == expect, [&] { return ctx("radix-2 FFT"); });
        if (n <= params.shift_period()) {
          const EvalVector cheap = radix2_fft(v, omega, params, TwiddleMode::kCheapR);
          rec.expect(ref_values(cheap, params) == expect, [&] { return ctx("cheap radix-2 FFT"); });
        }
        EvalVector back = large_radix_fft(large, table, nullptr, Direction::kInverse);
        // The unscaled inverse returns N times the input.
        std::vector<BigNat> scaled;
        for (const BigNat& x : ref_values(v, params)) scaled.push_back(ref::mul_mod(x, BigNat(n), p));
        back.phase = Phase::kCoeff;
        rec.expect(ref_values(back, params) == scaled, [&] { return ctx("inverse large-radix FFT"); });
      }
    }
  }
  return rec.done();
}

CheckResult check_half_dft_roundtrip(const SelfcheckOptions& opt) {
  Recorder rec("half_dft_roundtrip");
  std::mt19937_64 rng(opt.seed + 3);
  for (const GfpParams& params : {make_params(44, 4), make_params(54, 5), make_params(1084, 6)}) {
    const BigNat p = ref::gfp_modulus(params.r, params.lambda);
    const std::size_t max_n = params.degree() >= 64 ? 16 : 64;
    for (std::size_t n = 1; n <= max_n; n *= 2) {
      const TwiddleTable table(params, 2 * n);
      const BigNat omega = ref_value(table.root(), params);
      for (int rep = 0; rep < 3; ++rep) {
        const EvalVector v = random_vector(n, params, rng);
        const EvalVector fwd = half_dft(v, table, Direction::kForward);
        std::vector<BigNat> padded = ref_values(v, params);
        padded.resize(2 * n);
        const auto full = ref::naive_dft(padded, omega, p);
        std::vector<BigNat> odd;
        for (std::size_t i = 0; i < n; ++i) odd.push_back(full[2 * i + 1]);
        rec.expect(ref_values(fwd, params) == odd,
                   [&] { return "half-DFT values N=" + std::to_string(n) + " in " + describe(params); });
        const EvalVector back = half_dft(fwd, table, Direction::kInverse);
        rec.expect(back.words == v.words,
                   [&] { return "half-DFT roundtrip N=" + std::to_string(n) + " in " + describe(params); });
      }
    }
  }
  return rec.done();
}

CheckResult check_negacyclic(const SelfcheckOptions& opt) {
  Recorder rec("negacyclic");
  std::mt19937_64 rng(opt.seed + 4);
  for (const GfpParams& params : {make_params(44, 4), make_params(54, 5), make_params(118, 3)}) {
    const BigNat p = ref::gfp_modulus(params.r, params.lambda);
    for (std::size_t n = 1; n <= 64; n *= 2) {
      const TwiddleTable table(params, 2 * n);
      for (int rep = 0; rep < 3; ++rep) {
        const EvalVector a = random_vector(n, params, rng);
        const EvalVector b = random_vector(n, params, rng);
        const EvalVector prod = half_dft(
            pointwise_product(half_dft(a, table, Direction::kForward), half_dft(b, table, Direction::kForward),
                              params),
            table, Direction::kInverse);
        rec.expect(ref_values(prod, params) == ref::naive_negacyclic(ref_values(a, params), ref_values(b, params), p),
                   [&] { return "negacyclic N=" + std::to_string(n) + " in " + describe(params); });
      }
    }
  }
  return rec.done();
}

CheckResult check_grouping(const SelfcheckOptions& opt) {
  Recorder rec("grouping_vs_kronecker");
  std::mt19937_64 rng(opt.seed + 5);
  for (unsigned top_lambda : {4U, 5U}) {
    const std::size_t n = std::size_t{1} << 12;
    PlanConfig grouped;
    grouped.threshold_bits = 256;
    grouped.top_lambda = top_lambda;
    PlanConfig kron = grouped;
    kron.grouping = false;
    const MultiplyPlan pg = precompute(n, grouped);
    const MultiplyPlan pk = precompute(n, kron);
    if (pg.depth() < 2 || !pg.levels[1].grouped || pk.depth() < 2 || pk.levels[1].grouped) {
      rec.fail("expected a grouped and a Kronecker second level for top lambda " + std::to_string(top_lambda));
      continue;
    }
    const GfpParams& params = pg.levels[0].params;
    const BigNat p = ref::gfp_modulus(params.r, params.lambda);
    const std::uint64_t samples = std::max<std::uint64_t>(16, opt.field_samples / 50);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const GfpElement a = random_element(params, rng);
      const GfpElement b = random_element(params, rng);
      const GfpElement via_group = mul_recursive(a, b, pg, 0);
      const GfpElement via_kron = mul_recursive(a, b, pk, 0);
      const GfpElement via_pack =
          kronecker_multiply(a, b, params, [](const BigUint& x, const BigUint& y) { return x * y; });
      const BigNat expect = ref::mul_mod(ref_value(a, params), ref_value(b, params), p);
      const auto ctx = [&](const char* which) {
        return std::string(which) + " in " + describe(params) + " at sample " + std::to_string(s);
      };
      rec.expect(ref_value(via_group, params) == expect, [&] { return ctx("grouped recursion"); });
      rec.expect(via_kron == via_group, [&] { return ctx("Kronecker recursion"); });
      rec.expect(via_pack == via_group, [&] { return ctx("Kronecker substitution"); });
      if (!a.minus_one_flag) {
        const unsigned beta = pg.levels[0].beta;
        rec.expect(ungroup_coefficients(group_coefficients(a, beta, params), beta, params) == a,
                   [&] { return ctx("group/ungroup"); });
      }
    }
  }
  return rec.done();
}

CheckResult check_multiply(const SelfcheckOptions& opt) {
  Recorder rec("multiply_vs_schoolbook");
  std::mt19937_64 rng(opt.seed + 6);
  struct Case {
    std::size_t threshold;
    bool grouping;
    std::size_t depth;
  };
  for (const Case c : {Case{1u << 30, true, 0}, Case{1024, true, 1}, Case{256, true, 2}, Case{256, false, 2}}) {
    for (std::size_t n : {std::size_t{1} << 10, std::size_t{5000}}) {
      PlanConfig config;
      config.threshold_bits = c.threshold;
      config.grouping = c.grouping;
      const MultiplyPlan plan = precompute(n, config);
      if (plan.depth() < c.depth) {
        rec.fail("plan for n=" + std::to_string(n) + " has depth " + std::to_string(plan.depth()) + ", expected " +
                 std::to_string(c.depth));
        continue;
      }
      for (std::uint64_t i = 0; i < opt.multiply_pairs; ++i) {
        const BigUint a = random_operand(n, rng, static_cast<unsigned>(i));
        const BigUint b = random_operand(n, rng, static_cast<unsigned>(i / 6 + 1));
        const bool ok = to_ref(multiply(a, b, plan)) == ref::schoolbook_mul(to_ref(a), to_ref(b));
        rec.expect(ok, [&] {
          std::ostringstream out;
          out << "product mismatch n=" << n << " depth=" << plan.depth() << " pair " << i;
          return out.str();
        });
      }
    }
  }
  return rec.done();
}

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opt) {
  return {check_field_ops(opt), check_shifts(opt),    check_fft(opt),     check_half_dft_roundtrip(opt),
          check_negacyclic(opt), check_grouping(opt), check_multiply(opt)};
}

}  // namespace gfpmul::tools

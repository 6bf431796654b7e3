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

#include "gfpmul/multiplier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gfpmul/error.hpp"

namespace gfpmul {

namespace {

std::size_t pow2_ceil(std::size_t x) { return x <= 1 ? 1 : std::bit_ceil(x); }

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

unsigned log2_exact(std::size_t x) { return static_cast<unsigned>(std::countr_zero(x)); }

// 2-adic valuation of p - 1 = r^(2^lambda).
std::uint64_t two_adic_order(const GfpParams& params) {
  return static_cast<std::uint64_t>(std::countr_zero(params.r)) * params.degree();
}

bool supports_order(const GfpParams& params, std::size_t two_n) {
  return two_adic_order(params) >= log2_exact(two_n);
}

bool fits_kernels(std::uint64_t r, unsigned lambda) {
  if (r > 0xFFFFFFFFULL) return false;
  const unsigned __int128 bound = (static_cast<unsigned __int128>(r) * r) << (lambda + 1);
  return (bound >> 63) == 0;
}

// Smallest r >= start giving a prime usable with transforms of order two_n.
GfpParams find_level_prime(unsigned lambda, std::uint64_t start, std::uint64_t ceiling, std::size_t two_n) {
  for (std::uint64_t r = start + (start & 1U); r <= ceiling; r += 2) {
    if (!fits_kernels(r, lambda)) break;
    if (std::countr_zero(r) * (std::uint64_t{1} << lambda) < log2_exact(two_n)) continue;
    if (is_gfp_prime(r, lambda)) return make_params_unchecked(r, lambda);
  }
  throw Error(Errc::kPrimeNotFound, "no usable generalized Fermat prime with exponent 2^" + std::to_string(lambda) +
                                        " in [" + std::to_string(start) + ", " + std::to_string(ceiling) + "]");
}

unsigned lambda_for_size(std::size_t s) {
  const double l = std::log2(static_cast<double>(std::max<std::size_t>(s, 2)));
  unsigned lambda = 2;
  while (static_cast<double>(std::uint64_t{1} << lambda) < l) ++lambda;
  return lambda;
}

std::uint64_t mu_for(unsigned lambda, GammaShape shape) {
  const double half = 0.5 * gamma_value(lambda, shape);
  std::uint64_t mu = 1;
  while (static_cast<double>(mu) < half) mu *= 2;
  return mu;
}

PlanLevel integer_level(std::size_t s, unsigned lambda, const PlanConfig& config) {
  PlanLevel level;
  const std::uint64_t mu = mu_for(lambda, config.gamma);
  level.eta = (std::uint64_t{1} << lambda) * mu;
  level.big_n = std::max<std::size_t>(2, pow2_ceil(ceil_div(2 * s, level.eta)));
  level.operand_bits = s;
  const std::size_t min_bits = 2 * level.eta + log2_exact(level.big_n);
  const std::uint64_t floor_r = first_base_with_bits(lambda, min_bits);
  if (config.selection == PrimeSelection::kPractical) {
    level.params = find_level_prime(lambda, floor_r, std::uint64_t{1} << 32, 2 * level.big_n);
  } else {
    const double d = static_cast<double>(std::uint64_t{1} << lambda);
    const double log_r = 2.0 * static_cast<double>(mu) + std::log2(static_cast<double>(s)) / d -
                         std::log2(static_cast<double>(level.eta)) / d;
    const double big_r = std::exp2(log_r);
    const double hi = big_r * (1.0 + static_cast<double>(lambda) * lambda) * config.window_multiplier;
    const auto lo = std::max<std::uint64_t>(floor_r, static_cast<std::uint64_t>(std::floor(big_r)) + 1);
    level.params = find_level_prime(lambda, lo, static_cast<std::uint64_t>(std::floor(hi)), 2 * level.big_n);
  }
  if (log2_exact(level.big_n) + 2 * level.eta > level.params.floor_log2_p()) {
    throw Error(Errc::kOverflow, "level prime too small for its coefficients");
  }
  return level;
}

double grouped_bits(const GfpParams& params, unsigned beta) {
  return 2.0 * beta * std::log2(static_cast<double>(params.r)) + params.lambda - std::log2(static_cast<double>(beta));
}

// Grouped level below `prev`, or nullopt when grouping is unavailable or useless.
std::optional<PlanLevel> grouped_level(const GfpParams& prev, const PlanConfig& config, unsigned& beta_out) {
  const unsigned next_lambda = next_level_lambda(prev);
  unsigned beta = 0;
  try {
    beta = choose_beta(prev, next_lambda, config.gamma);
  } catch (const Error& e) {
    if (e.code() != Errc::kNoValidBeta) throw;
    return std::nullopt;
  }
  PlanLevel level;
  level.grouped = true;
  level.big_n = prev.degree() / beta;
  const auto min_bits = static_cast<std::size_t>(std::ceil(grouped_bits(prev, beta))) + 1;
  try {
    level.params = find_level_prime(next_lambda, first_base_with_bits(next_lambda, min_bits), std::uint64_t{1} << 32,
                                    2 * level.big_n);
  } catch (const Error& e) {
    if (e.code() != Errc::kPrimeNotFound) throw;
    return std::nullopt;
  }
  if (level.params.p_bits >= prev.p_bits) return std::nullopt;
  beta_out = beta;
  return level;
}

void add_at_bit(BigUint& acc, const BigUint& v, std::size_t bit) {
  const auto limbs = v.limbs();
  for (std::size_t t = 0; t < limbs.size(); ++t) acc.add_shifted(limbs[t], bit + 64 * t);
}

// Bits [bit, bit+len) of x into a field element.
void load_bits(const GfpField& f, const BigUint& x, std::size_t bit, std::size_t len, Word* out) {
  if (len <= 64) {
    std::uint64_t v = x.extract_bits(bit, static_cast<unsigned>(len));
    f.set_zero(out);
    for (std::size_t i = 0; i < f.degree() && v != 0; ++i) {
      out[i] = static_cast<Word>(v % f.params().r);
      v /= f.params().r;
    }
    return;
  }
  std::vector<BigUint::Limb> limbs;
  for (std::size_t off = 0; off < len; off += 64) {
    limbs.push_back(x.extract_bits(bit + off, static_cast<unsigned>(std::min<std::size_t>(64, len - off))));
  }
  f.from_integer(BigUint::from_limbs(std::move(limbs)), out);
}

class Runner;

class LevelProduct final : public ExpensiveProduct {
 public:
  LevelProduct(const Runner& runner, std::size_t level) : runner_(runner), level_(level) {}
  void mul(const Word* a, const Word* b, Word* out) const override;
  void mul_power(const Word* a, std::size_t j, Word* out) const override;

 private:
  const Runner& runner_;
  std::size_t level_;
};

class Runner {
 public:
  Runner(const MultiplyPlan& plan, std::vector<OpCounters>* counters) : plan_(plan), counters_(counters) {
    fields_.reserve(plan.depth());
    for (const PlanLevel& level : plan.levels) fields_.emplace_back(level.params);
    if (counters_ != nullptr) counters_->assign(plan.depth(), OpCounters{});
  }

  const GfpField& field(std::size_t i) const { return fields_[i]; }
  OpCounters* counters(std::size_t i) const { return counters_ == nullptr ? nullptr : &(*counters_)[i]; }

  void mul_element(std::size_t i, const Word* a, const Word* b, Word* out) const {
    const GfpField& f = fields_[i];
    if (i + 1 >= plan_.depth()) {
      f.mul(a, b, out);
      return;
    }
    const std::size_t d = f.degree();
    if (a[d] != 0) {
      f.neg(b, out);
      return;
    }
    if (b[d] != 0) {
      f.neg(a, out);
      return;
    }
    std::vector<Word> va = forward_element(i + 1, a);
    const std::vector<Word> vb = forward_element(i + 1, b);
    pointwise(i + 1, va.data(), vb.data());
    finish_element(i + 1, va, out);
  }

  void mul_element_power(std::size_t i, const Word* a, std::size_t j, Word* out) const {
    const TwiddleTable& table = *plan_.levels[i].table;
    const GfpField& f = fields_[i];
    if (i + 1 < plan_.depth() && table.has_transformed() && a[f.degree()] == 0) {
      const EvalVector& image = table.transformed()[j % table.order()];
      if (image.length != 0) {
        std::vector<Word> va = forward_element(i + 1, a);
        pointwise(i + 1, va.data(), image.words.data());
        finish_element(i + 1, va, out);
        return;
      }
    }
    mul_element(i, a, table.power(j), out);
  }

  // Level j's transform of an element of level j-1's field.
  std::vector<Word> forward_element(std::size_t j, const Word* elem) const {
    const PlanLevel& level = plan_.levels[j];
    const GfpField& f = fields_[j];
    const GfpField& prev = fields_[j - 1];
    const std::size_t s = f.stride();
    std::vector<Word> v(level.big_n * s, 0);
    if (level.grouped) {
      const unsigned beta = plan_.levels[j - 1].beta;
      const std::uint64_t r = prev.params().r;
      for (std::size_t t = 0; t < level.big_n; ++t) {
        BigUint chunk;
        for (unsigned u = beta; u-- > 0;) {
          chunk.mul_small(r);
          chunk.add_small(elem[t * beta + u]);
        }
        f.from_integer(chunk, v.data() + t * s);
      }
    } else {
      const BigUint packed = prev.kronecker_pack(elem);
      split(level, f, packed, v.data());
    }
    const LevelProduct product(*this, j);
    half_dft_inplace(v.data(), level.big_n, *level.table, Direction::kForward, product, counters(j));
    return v;
  }

  // Inverse transform at level j and reduction into level j-1's field.
  void finish_element(std::size_t j, std::vector<Word>& v, Word* out) const {
    const PlanLevel& level = plan_.levels[j];
    const GfpField& f = fields_[j];
    const GfpField& prev = fields_[j - 1];
    const std::size_t s = f.stride();
    const LevelProduct product(*this, j);
    half_dft_inplace(v.data(), level.big_n, *level.table, Direction::kInverse, product, counters(j));
    if (level.grouped) {
      const unsigned beta = plan_.levels[j - 1].beta;
      const std::size_t d = prev.degree();
      const std::uint64_t r = prev.params().r;
      const BigUint& p = f.params().p;
      std::vector<std::int64_t> raw(d, 0);
      for (std::size_t t = 0; t < level.big_n; ++t) {
        BigUint mag = f.to_integer(v.data() + t * s);
        bool negative = false;
        if ((mag << 1) > p) {
          mag = p - mag;
          negative = true;
        }
        for (std::size_t pos = t * beta; !mag.is_zero(); ++pos) {
          auto digit = static_cast<std::int64_t>(mag.divmod_small(r));
          if (negative) digit = -digit;
          const std::size_t wrapped = pos % (2 * d);
          if (wrapped < d) {
            raw[wrapped] += digit;
          } else {
            raw[wrapped - d] -= digit;
          }
        }
      }
      prev.normalize(raw.data(), out);
    } else {
      prev.kronecker_unpack(recompose(level, f, v.data()), out);
    }
  }

  void pointwise(std::size_t j, Word* a, const Word* b) const {
    const std::size_t s = fields_[j].stride();
    const std::size_t n = plan_.levels[j].big_n;
    OpCounters* c = counters(j);
    for (std::size_t k = 0; k < n; ++k) {
      mul_element(j, a + k * s, b + k * s, a + k * s);
      if (c != nullptr) ++c->expensive_muls;
    }
  }

  BigUint mul_top(const BigUint& a, const BigUint& b) const {
    const PlanLevel& level = plan_.levels[0];
    const GfpField& f = fields_[0];
    const std::size_t ca = ceil_div(a.bit_length(), level.eta);
    const std::size_t cb = ceil_div(b.bit_length(), level.eta);
    if (ca == 0 || cb == 0) return {};
    if (ca + cb - 1 > level.big_n) {
      throw Error(Errc::kOverflow, "operands of " + std::to_string(a.bit_length()) + " and " +
                                       std::to_string(b.bit_length()) + " bits exceed the plan");
    }
    const std::size_t s = f.stride();
    std::vector<Word> va(level.big_n * s, 0);
    std::vector<Word> vb(level.big_n * s, 0);
    split(level, f, a, va.data());
    split(level, f, b, vb.data());
    const LevelProduct product(*this, 0);
    const bool cyclic = plan_.config.skip_top_weights;
    auto transform = [&](Word* data, Direction dir) {
      if (cyclic) {
        cyclic_dft_inplace(data, level.big_n, *level.table, dir, product, counters(0));
      } else {
        half_dft_inplace(data, level.big_n, *level.table, dir, product, counters(0));
      }
    };
    transform(va.data(), Direction::kForward);
    transform(vb.data(), Direction::kForward);
    pointwise(0, va.data(), vb.data());
    transform(va.data(), Direction::kInverse);
    return recompose(level, f, va.data());
  }

 private:
  static void split(const PlanLevel& level, const GfpField& f, const BigUint& x, Word* out) {
    const std::size_t s = f.stride();
    const std::size_t chunks = ceil_div(x.bit_length(), level.eta);
    if (chunks > level.big_n) throw Error(Errc::kOverflow, "operand exceeds the transform length");
    for (std::size_t k = 0; k < chunks; ++k) load_bits(f, x, k * level.eta, level.eta, out + k * s);
  }

  static BigUint recompose(const PlanLevel& level, const GfpField& f, const Word* v) {
    const std::size_t s = f.stride();
    BigUint acc;
    for (std::size_t k = 0; k < level.big_n; ++k) {
      const BigUint c = f.to_integer(v + k * s);
      if (!c.is_zero()) add_at_bit(acc, c, k * level.eta);
    }
    return acc;
  }

  const MultiplyPlan& plan_;
  std::vector<OpCounters>* counters_;
  std::vector<GfpField> fields_;
};

void LevelProduct::mul(const Word* a, const Word* b, Word* out) const { runner_.mul_element(level_, a, b, out); }

void LevelProduct::mul_power(const Word* a, std::size_t j, Word* out) const {
  runner_.mul_element_power(level_, a, j, out);
}

void attach_tables(MultiplyPlan& plan) {
  if (!plan.config.build_tables) return;
  for (PlanLevel& level : plan.levels) level.table = std::make_shared<TwiddleTable>(level.params, 2 * level.big_n);
  if (!plan.config.cache_twiddles) return;
  // Deepest first: building level i's images runs level i+1's transforms.
  for (std::size_t i = plan.depth(); i-- > 1;) {
    const std::size_t prev = i - 1;
    const TwiddleTable& table = *plan.levels[prev].table;
    const std::size_t bytes = table.order() * plan.levels[i].big_n * plan.levels[i].params.stride() * sizeof(Word);
    if (bytes > plan.config.cache_limit_bytes) continue;
    const Runner runner(plan, nullptr);
    const GfpField& f = runner.field(prev);
    std::vector<EvalVector> images(table.order());
    for (std::size_t j = 0; j < table.order(); ++j) {
      const Word* w = table.power(j);
      if (w[f.degree()] != 0) continue;
      EvalVector& img = images[j];
      img.length = plan.levels[i].big_n;
      img.stride = plan.levels[i].params.stride();
      img.words = runner.forward_element(i, w);
      img.phase = Phase::kEval;
    }
    auto updated = std::make_shared<TwiddleTable>(table);
    updated->attach_transformed(std::move(images));
    plan.levels[prev].table = std::move(updated);
  }
}

void validate(const MultiplyPlan& plan) {
  for (const PlanLevel& level : plan.levels) {
    if (!level.grouped && log2_exact(level.big_n) + 2 * level.eta > level.params.floor_log2_p()) {
      throw Error(Errc::kOverflow, "plan level violates log2 N + 2 eta <= floor(log2 p)");
    }
    if (!supports_order(level.params, 2 * level.big_n)) {
      throw Error(Errc::kOrderUnavailable, "plan level prime lacks roots of order 2N");
    }
  }
}

}  // namespace

unsigned next_level_lambda(const GfpParams& params) {
  const double ll = std::log2(params.p.log2());
  unsigned lambda = 1;
  while (static_cast<double>(std::uint64_t{1} << lambda) < ll) ++lambda;
  return lambda;
}

unsigned choose_beta(const GfpParams& params, unsigned next_lambda, GammaShape gamma) {
  const double bound = 2.0 * gamma_value(next_lambda, gamma) * static_cast<double>(std::uint64_t{1} << next_lambda);
  unsigned best = 0;
  for (unsigned beta = 1; beta <= params.degree(); beta *= 2) {
    if (grouped_bits(params, beta) > bound) break;
    best = beta;
  }
  if (best == 0) {
    throw Error(Errc::kNoValidBeta, "2 log2 r + lambda exceeds 2 gamma(lambda') 2^lambda' for r = " +
                                        std::to_string(params.r));
  }
  return best;
}

MultiplyPlan precompute(std::size_t n, const PlanConfig& config) {
  MultiplyPlan plan;
  plan.top_n = n;
  plan.config = config;
  if (n < config.threshold_bits || config.max_depth == 0) return plan;
  const unsigned top_lambda = config.top_lambda.value_or(lambda_for_size(n));
  plan.levels.push_back(integer_level(n, top_lambda, config));
  while (plan.depth() < config.max_depth) {
    PlanLevel& last = plan.levels.back();
    const GfpField field(last.params);
    if (field.kronecker_bits() < config.threshold_bits) break;
    std::optional<PlanLevel> next;
    unsigned beta = 0;
    if (config.grouping) next = grouped_level(last.params, config, beta);
    if (!next) {
      PlanLevel k = integer_level(field.kronecker_bits(), lambda_for_size(field.kronecker_bits()), config);
      if (k.params.p_bits >= last.params.p_bits) break;
      next = std::move(k);
      beta = 0;
    }
    last.beta = beta;
    plan.levels.push_back(std::move(*next));
  }
  validate(plan);
  attach_tables(plan);
  return plan;
}

BigUint multiply(const BigUint& a, const BigUint& b, const MultiplyPlan& plan, std::vector<OpCounters>* counters) {
  if (plan.depth() == 0) {
    if (counters != nullptr) counters->clear();
    return a * b;
  }
  if (!plan.levels[0].table) throw Error(Errc::kOutOfRange, "plan was built without twiddle tables");
  const Runner runner(plan, counters);
  return runner.mul_top(a, b);
}

GfpElement mul_recursive(const GfpElement& a, const GfpElement& b, const MultiplyPlan& plan, std::size_t level,
                         std::vector<OpCounters>* counters) {
  if (level >= plan.depth()) throw Error(Errc::kOutOfRange, "plan has no level " + std::to_string(level));
  if (!plan.levels[level].table) throw Error(Errc::kOutOfRange, "plan was built without twiddle tables");
  const Runner runner(plan, counters);
  const GfpField& f = runner.field(level);
  std::vector<Word> buf(3 * f.stride());
  f.load(a, buf.data());
  f.load(b, buf.data() + f.stride());
  runner.mul_element(level, buf.data(), buf.data() + f.stride(), buf.data() + 2 * f.stride());
  return f.store(buf.data() + 2 * f.stride());
}

std::vector<BigUint> group_coefficients(const GfpElement& e, unsigned beta, const GfpParams& params) {
  const std::size_t d = params.degree();
  if (beta == 0 || d % beta != 0) throw Error(Errc::kOutOfRange, "beta must divide 2^lambda");
  if (e.minus_one_flag) throw Error(Errc::kOutOfRange, "p-1 has no digit grouping");
  std::vector<BigUint> chunks(d / beta);
  for (std::size_t t = 0; t < chunks.size(); ++t) {
    for (unsigned u = beta; u-- > 0;) {
      chunks[t].mul_small(params.r);
      chunks[t].add_small(e.coeffs[t * beta + u]);
    }
  }
  return chunks;
}

GfpElement ungroup_coefficients(const std::vector<BigUint>& chunks, unsigned beta, const GfpParams& params) {
  const std::size_t d = params.degree();
  if (beta == 0 || chunks.size() * beta != d) throw Error(Errc::kOutOfRange, "chunk count does not match beta");
  GfpElement e;
  e.coeffs.assign(d, 0);
  for (std::size_t t = 0; t < chunks.size(); ++t) {
    BigUint rest = chunks[t];
    for (unsigned u = 0; u < beta; ++u) e.coeffs[t * beta + u] = static_cast<Word>(rest.divmod_small(params.r));
    if (!rest.is_zero()) throw Error(Errc::kOutOfRange, "chunk not below r^beta");
  }
  return e;
}

std::vector<SignedInt> recursive_level_multiply(const std::vector<BigUint>& a, const std::vector<BigUint>& b,
                                                const MultiplyPlan& plan, std::size_t level,
                                                std::vector<OpCounters>* counters) {
  if (level == 0 || level >= plan.depth() || !plan.levels[level].grouped) {
    throw Error(Errc::kOutOfRange, "level " + std::to_string(level) + " is not a grouped level");
  }
  const PlanLevel& lv = plan.levels[level];
  if (!lv.table) throw Error(Errc::kOutOfRange, "plan was built without twiddle tables");
  if (a.size() != lv.big_n || b.size() != lv.big_n) throw Error(Errc::kOutOfRange, "chunk polynomial length != M");
  const Runner runner(plan, counters);
  const GfpField& f = runner.field(level);
  const std::size_t s = f.stride();
  std::vector<Word> va(lv.big_n * s), vb(lv.big_n * s);
  for (std::size_t t = 0; t < lv.big_n; ++t) {
    f.from_integer(a[t], va.data() + t * s);
    f.from_integer(b[t], vb.data() + t * s);
  }
  const LevelProduct product(runner, level);
  half_dft_inplace(va.data(), lv.big_n, *lv.table, Direction::kForward, product, runner.counters(level));
  half_dft_inplace(vb.data(), lv.big_n, *lv.table, Direction::kForward, product, runner.counters(level));
  runner.pointwise(level, va.data(), vb.data());
  half_dft_inplace(va.data(), lv.big_n, *lv.table, Direction::kInverse, product, runner.counters(level));
  std::vector<SignedInt> out(lv.big_n);
  for (std::size_t t = 0; t < lv.big_n; ++t) {
    BigUint v = f.to_integer(va.data() + t * s);
    if ((v << 1) > lv.params.p) {
      out[t] = SignedInt{true, lv.params.p - v};
    } else {
      out[t] = SignedInt{false, std::move(v)};
    }
  }
  return out;
}

GfpElement kronecker_multiply(const GfpElement& a, const GfpElement& b, const GfpParams& params,
                              const IntegerMultiplier& inner) {
  const GfpField f(params);
  std::vector<Word> buf(3 * f.stride());
  f.load(a, buf.data());
  f.load(b, buf.data() + f.stride());
  Word* out = buf.data() + 2 * f.stride();
  if (a.minus_one_flag) {
    f.neg(buf.data() + f.stride(), out);
  } else if (b.minus_one_flag) {
    f.neg(buf.data(), out);
  } else {
    f.kronecker_unpack(inner(f.kronecker_pack(buf.data()), f.kronecker_pack(buf.data() + f.stride())), out);
  }
  return f.store(out);
}

MultiplyPlan plan_from_levels(std::size_t top_n, std::vector<PlanLevel> levels, const PlanConfig& config) {
  MultiplyPlan plan;
  plan.top_n = top_n;
  plan.config = config;
  plan.levels = std::move(levels);
  validate(plan);
  attach_tables(plan);
  return plan;
}

}  // namespace gfpmul

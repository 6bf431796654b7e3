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

#include "gfpmul/transform.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gfpmul/error.hpp"
#include "gfpmul/primality.hpp"

namespace gfpmul {

namespace {

bool is_pow2(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

void bump(OpCounters* c, std::uint64_t OpCounters::*field, std::uint64_t n = 1) {
  if (c != nullptr) c->*field += n;
}

void bit_reverse(Word* data, std::size_t n, std::size_t stride) {
  const unsigned bits = static_cast<unsigned>(std::countr_zero(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    for (unsigned b = 0; b < bits; ++b) j |= ((i >> b) & 1U) << (bits - 1 - b);
    if (i < j) std::swap_ranges(data + i * stride, data + (i + 1) * stride, data + j * stride);
  }
}

// In-place radix-2 DFT of length n at root r^e (exponent modulo 2^(lambda+1)).
void cheap_fft(const GfpField& f, Word* data, std::size_t n, std::size_t e, OpCounters* counters) {
  if (n <= 1) return;
  const std::size_t s = f.stride();
  const std::size_t period = f.params().shift_period();
  bit_reverse(data, n, s);
  std::vector<Word> t(s);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = (e * (n / len)) % period;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Word* u = data + (base + k) * s;
        Word* v = data + (base + k + half) * s;
        const std::size_t ex = (step * k) % period;
        if (ex == 0) {
          std::copy(v, v + s, t.data());
        } else {
          f.shift(v, ex, t.data());
          bump(counters, &OpCounters::cheap_shifts);
        }
        f.sub(u, t.data(), v);
        f.add(u, t.data(), u);
        bump(counters, &OpCounters::additions, 2);
      }
    }
  }
}

std::size_t root_step(const TwiddleTable& table, std::size_t n) {
  if (!is_pow2(n)) throw Error(Errc::kOutOfRange, "transform length must be a power of two");
  if (table.order() < n || table.order() % n != 0) {
    throw Error(Errc::kTableTooSmall,
                "table of order " + std::to_string(table.order()) + " cannot serve length " + std::to_string(n));
  }
  return table.order() / n;
}

// DFT of length n at root table.power(step) (or its inverse).
void large_radix(Word* data, std::size_t n, std::size_t step, const TwiddleTable& table, Direction dir,
                 const ExpensiveProduct& product, OpCounters* counters) {
  const GfpField& f = table.field();
  const std::size_t n1 = f.params().shift_period();
  if (n <= n1) {
    const std::size_t e = n1 / n;
    cheap_fft(f, data, n, dir == Direction::kForward ? e : (n1 - e) % n1, counters);
    return;
  }
  const std::size_t s = f.stride();
  const std::size_t n2 = n / n1;
  const std::size_t order = table.order();
  std::vector<Word> buf(n * s);
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      const Word* src = data + (a + n1 * b) * s;
      std::copy(src, src + s, buf.data() + (a * n2 + b) * s);
    }
  }
  for (std::size_t a = 0; a < n1; ++a) {
    large_radix(buf.data() + a * n2 * s, n2, step * n1, table, dir, product, counters);
  }
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t k = 0; k < n2; ++k) {
      const std::size_t e = (step * a * k) % order;
      const std::size_t idx = dir == Direction::kForward ? e : (order - e) % order;
      Word* x = buf.data() + (a * n2 + k) * s;
      product.mul_power(x, idx, x);
      bump(counters, &OpCounters::expensive_muls);
    }
  }
  std::vector<Word> col(n1 * s);
  for (std::size_t k = 0; k < n2; ++k) {
    for (std::size_t a = 0; a < n1; ++a) {
      const Word* src = buf.data() + (a * n2 + k) * s;
      std::copy(src, src + s, col.data() + a * s);
    }
    cheap_fft(f, col.data(), n1, dir == Direction::kForward ? 1 : n1 - 1, counters);
    for (std::size_t a = 0; a < n1; ++a) {
      std::copy(col.data() + a * s, col.data() + (a + 1) * s, data + (n2 * a + k) * s);
    }
  }
}

void check_phase(const EvalVector& v, Phase expected, const char* what) {
  if (v.phase != expected) {
    throw Error(Errc::kPhaseMismatch, std::string(what) + " expects a vector in " +
                                          (expected == Phase::kCoeff ? "coefficient" : "evaluation") + " phase");
  }
}

void check_stride(const EvalVector& v, const GfpParams& params) {
  if (v.stride != params.stride() || v.words.size() != v.length * v.stride) {
    throw Error(Errc::kOutOfRange, "vector layout does not match the field");
  }
}

}  // namespace

std::uint64_t find_generator_u64(const GfpParams& params) {
  const std::vector<std::uint64_t> primes = prime_factors(params.r);
  const BigUint p_minus_1 = params.p - BigUint(1);
  std::vector<BigUint> exponents;
  for (const std::uint64_t q : primes) {
    BigUint e = p_minus_1;
    if (e.divmod_small(q) != 0) throw Error(Errc::kFactorizationFailure, "factor does not divide p-1");
    exponents.push_back(std::move(e));
  }
  const MontgomeryContext ctx(params.p);
  const BigUint one(1);
  for (std::uint64_t g = 2; g < (1U << 20); ++g) {
    const bool generates = std::all_of(exponents.begin(), exponents.end(),
                                       [&](const BigUint& e) { return ctx.pow(BigUint(g), e) != one; });
    if (generates) return g;
  }
  throw Error(Errc::kFactorizationFailure, "no generator below 2^20");
}

GfpElement find_generator(const GfpParams& params) {
  return encode(BigUint(find_generator_u64(params)), params);
}

GfpElement principal_root(const GfpParams& params, std::uint64_t two_n) {
  const GfpField f(params);
  const std::size_t period = params.shift_period();
  const std::uint64_t v2 = static_cast<std::uint64_t>(std::countr_zero(params.r)) * params.degree();
  if (!is_pow2(two_n) || (v2 < 64 && two_n > (std::uint64_t{1} << v2))) {
    throw Error(Errc::kOrderUnavailable, "no element of order " + std::to_string(two_n) + " modulo p");
  }
  std::vector<Word> x(f.stride());
  std::vector<Word> y(f.stride());
  if (two_n <= period) {
    f.set_one(x.data());
    f.shift(x.data(), period / two_n, y.data());
    return f.store(y.data());
  }
  const BigUint g(find_generator_u64(params));
  BigUint cofactor = params.p - BigUint(1);
  cofactor >>= static_cast<std::size_t>(std::countr_zero(two_n));
  const BigUint h = pow_mod(g, cofactor, params.p);
  const BigUint z = pow_mod(h, BigUint(two_n / period), params.p);
  // z has order 2^(lambda+1), so z = r^m for a unique odd m.
  f.set_one(x.data());
  std::size_t m = period;
  for (std::size_t j = 1; j < period; j += 2) {
    f.shift(x.data(), j, y.data());
    if (f.to_integer(y.data()) == z) {
      m = j;
      break;
    }
  }
  if (m == period) throw Error(Errc::kOrderUnavailable, "root does not align with r");
  std::size_t k = 1;
  while ((k * m) % period != 1) k += 2;
  return encode(pow_mod(h, BigUint(k), params.p), params);
}

EvalVector EvalVector::from_elements(std::span<const GfpElement> elems, const GfpParams& params, Phase ph) {
  const GfpField f(params);
  EvalVector v(elems.size(), f.stride(), ph);
  for (std::size_t i = 0; i < elems.size(); ++i) f.load(elems[i], v.at(i));
  return v;
}

std::vector<GfpElement> EvalVector::to_elements(const GfpParams& params) const {
  const GfpField f(params);
  std::vector<GfpElement> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(f.store(at(i)));
  return out;
}

TwiddleTable::TwiddleTable(GfpParams params, std::size_t order) : field_(std::move(params)), order_(order) {
  if (!is_pow2(order) || order < 2) throw Error(Errc::kOutOfRange, "twiddle order must be a power of two >= 2");
  const std::size_t s = field_.stride();
  powers_.assign(order * s, 0);
  field_.load(principal_root(field_.params(), order), powers_.data() + s);
  field_.set_one(powers_.data());
  for (std::size_t j = 2; j < order; ++j) {
    field_.mul(powers_.data() + (j - 1) * s, powers_.data() + s, powers_.data() + j * s);
  }
  const std::size_t n = order / 2;
  std::vector<Word> scale(s);
  field_.load(inv_pow2(static_cast<unsigned>(std::countr_zero(n)), field_.params()), scale.data());
  inverse_weights_.assign(n * s, 0);
  for (std::size_t j = 0; j < n; ++j) {
    field_.mul(power((order - j) % order), scale.data(), inverse_weights_.data() + j * s);
  }
}

EvalVector radix2_fft(const EvalVector& v, const GfpElement& omega, const GfpParams& params, TwiddleMode mode,
                      OpCounters* counters) {
  check_stride(v, params);
  check_phase(v, Phase::kCoeff, "radix2_fft");
  if (!is_pow2(v.length)) throw Error(Errc::kOutOfRange, "transform length must be a power of two");
  const GfpField f(params);
  const std::size_t s = f.stride();
  const std::size_t n = v.length;
  EvalVector out = v;
  out.phase = Phase::kEval;
  if (mode == TwiddleMode::kCheapR) {
    std::vector<Word> w(s), x(s), y(s);
    f.load(omega, w.data());
    f.set_one(x.data());
    const std::size_t period = params.shift_period();
    std::size_t e = period;
    for (std::size_t j = 0; j < period; ++j) {
      f.shift(x.data(), j, y.data());
      if (f.equal(y.data(), w.data())) {
        e = j;
        break;
      }
    }
    if (e == period) throw Error(Errc::kCheapModeViolation, "root is not a power of r");
    cheap_fft(f, out.words.data(), n, e, counters);
    return out;
  }
  std::vector<Word> pw(std::max<std::size_t>(n / 2, 1) * s);
  f.set_one(pw.data());
  std::vector<Word> w(s);
  f.load(omega, w.data());
  for (std::size_t j = 1; j < n / 2; ++j) f.mul(pw.data() + (j - 1) * s, w.data(), pw.data() + j * s);
  Word* data = out.words.data();
  bit_reverse(data, n, s);
  std::vector<Word> t(s);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Word* a = data + (base + k) * s;
        Word* b = data + (base + k + half) * s;
        f.mul(b, pw.data() + (step * k) * s, t.data());
        bump(counters, &OpCounters::expensive_muls);
        f.sub(a, t.data(), b);
        f.add(a, t.data(), a);
        bump(counters, &OpCounters::additions, 2);
      }
    }
  }
  return out;
}

void large_radix_fft_inplace(Word* data, std::size_t n, const TwiddleTable& table, Direction dir,
                             const ExpensiveProduct& product, OpCounters* counters) {
  large_radix(data, n, root_step(table, n), table, dir, product, counters);
}

void half_dft_inplace(Word* data, std::size_t n, const TwiddleTable& table, Direction dir,
                      const ExpensiveProduct& product, OpCounters* counters) {
  if (table.order() != 2 * n) throw Error(Errc::kTableTooSmall, "half-DFT needs a table of order 2N");
  const std::size_t s = table.field().stride();
  if (dir == Direction::kForward) {
    for (std::size_t j = 0; j < n; ++j) {
      product.mul_power(data + j * s, j, data + j * s);
      bump(counters, &OpCounters::expensive_muls);
    }
    large_radix(data, n, 2, table, dir, product, counters);
  } else {
    large_radix(data, n, 2, table, dir, product, counters);
    for (std::size_t j = 0; j < n; ++j) {
      product.mul(data + j * s, table.inverse_weight(j), data + j * s);
      bump(counters, &OpCounters::expensive_muls);
    }
  }
}

void cyclic_dft_inplace(Word* data, std::size_t n, const TwiddleTable& table, Direction dir,
                        const ExpensiveProduct& product, OpCounters* counters) {
  if (table.order() != 2 * n) throw Error(Errc::kTableTooSmall, "cyclic DFT needs a table of order 2N");
  large_radix(data, n, 2, table, dir, product, counters);
  if (dir == Direction::kInverse) {
    const std::size_t s = table.field().stride();
    for (std::size_t j = 0; j < n; ++j) {
      product.mul(data + j * s, table.inverse_weight(0), data + j * s);
      bump(counters, &OpCounters::expensive_muls);
    }
  }
}

EvalVector large_radix_fft(const EvalVector& v, const TwiddleTable& table, OpCounters* counters, Direction dir,
                           const ExpensiveProduct* product) {
  check_stride(v, table.params());
  check_phase(v, dir == Direction::kForward ? Phase::kCoeff : Phase::kEval, "large_radix_fft");
  const DirectProduct direct(table);
  EvalVector out = v;
  large_radix_fft_inplace(out.words.data(), out.length, table, dir, product ? *product : direct, counters);
  out.phase = dir == Direction::kForward ? Phase::kEval : Phase::kCoeff;
  return out;
}

EvalVector half_dft(const EvalVector& v, const TwiddleTable& table, Direction dir, OpCounters* counters,
                    const ExpensiveProduct* product) {
  check_stride(v, table.params());
  check_phase(v, dir == Direction::kForward ? Phase::kCoeff : Phase::kEval, "half_dft");
  const DirectProduct direct(table);
  EvalVector out = v;
  half_dft_inplace(out.words.data(), out.length, table, dir, product ? *product : direct, counters);
  out.phase = dir == Direction::kForward ? Phase::kEval : Phase::kCoeff;
  return out;
}

EvalVector pointwise_product(const EvalVector& a, const EvalVector& b, const GfpParams& params,
                             OpCounters* counters, const ExpensiveProduct* product) {
  check_stride(a, params);
  check_stride(b, params);
  check_phase(a, Phase::kEval, "pointwise_product");
  check_phase(b, Phase::kEval, "pointwise_product");
  if (a.length != b.length) throw Error(Errc::kOutOfRange, "pointwise operands differ in length");
  const GfpField f(params);
  EvalVector out(a.length, a.stride, Phase::kEval);
  for (std::size_t i = 0; i < a.length; ++i) {
    if (product != nullptr) {
      product->mul(a.at(i), b.at(i), out.at(i));
    } else {
      f.mul(a.at(i), b.at(i), out.at(i));
    }
    bump(counters, &OpCounters::expensive_muls);
  }
  return out;
}

}  // namespace gfpmul

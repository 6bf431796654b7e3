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

#include "gfpmul/gfp.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gfpmul/error.hpp"
#include "gfpmul/primality.hpp"

namespace gfpmul {

namespace {

// Floor division and modulus for a positive divisor.
inline void floor_divmod(__int128 v, std::int64_t m, std::int64_t& q, std::int64_t& rem) {
  __int128 qq = v / m;
  __int128 rr = v % m;
  if (rr < 0) {
    rr += m;
    --qq;
  }
  q = static_cast<std::int64_t>(qq);
  rem = static_cast<std::int64_t>(rr);
}

}  // namespace

GfpParams make_params_unchecked(std::uint64_t r, unsigned lambda) {
  if (r % 2 != 0) throw Error(Errc::kOddBase, "r = " + std::to_string(r) + " is odd");
  if (r < 2) throw Error(Errc::kOutOfRange, "r must be at least 2");
  if (lambda < 1 || lambda > 16) throw Error(Errc::kOutOfRange, "lambda must lie in [1, 16]");
  if (r > 0xFFFFFFFFULL) throw Error(Errc::kOutOfRange, "r must fit in 32 bits");
  const unsigned __int128 bound = (static_cast<unsigned __int128>(r) * r) << (lambda + 1);
  if (bound >> 63) throw Error(Errc::kOutOfRange, "2^(lambda+1) * r^2 must stay below 2^63");
  GfpParams params;
  params.r = r;
  params.lambda = lambda;
  params.p = BigUint::pow(r, std::uint64_t{1} << lambda);
  params.p.add_small(1);
  params.coeff_bits = static_cast<unsigned>(std::bit_width(r - 1));
  params.p_bits = params.p.bit_length();
  return params;
}

GfpParams make_params(std::uint64_t r, unsigned lambda) {
  GfpParams params = make_params_unchecked(r, lambda);
  if (!is_gfp_prime(r, lambda)) {
    throw Error(Errc::kCompositeModulus,
                std::to_string(r) + "^" + std::to_string(params.degree()) + "+1 is composite");
  }
  return params;
}

GfpField::GfpField(GfpParams params)
    : params_(std::move(params)),
      d_(params_.degree()),
      r_(params_.r),
      ks_stride_(2 * params_.coeff_bits + params_.lambda) {}

void GfpField::set_zero(Word* out) const { std::fill(out, out + d_ + 1, Word{0}); }

void GfpField::set_one(Word* out) const {
  set_zero(out);
  out[0] = 1;
}

bool GfpField::is_zero(const Word* a) const {
  return std::all_of(a, a + d_ + 1, [](Word w) { return w == 0; });
}

bool GfpField::equal(const Word* a, const Word* b) const { return std::equal(a, a + d_ + 1, b); }

void GfpField::load(const GfpElement& e, Word* out) const {
  if (e.coeffs.size() != d_) throw Error(Errc::kOutOfRange, "element has the wrong number of coefficients");
  for (std::size_t i = 0; i < d_; ++i) {
    if (e.coeffs[i] >= r_) throw Error(Errc::kOutOfRange, "coefficient not below r");
    out[i] = e.coeffs[i];
  }
  if (e.minus_one_flag && std::any_of(out, out + d_, [](Word w) { return w != 0; })) {
    throw Error(Errc::kOutOfRange, "p-1 flag set with nonzero coefficients");
  }
  out[d_] = e.minus_one_flag ? 1 : 0;
}

GfpElement GfpField::store(const Word* a) const {
  GfpElement e;
  e.coeffs.assign(a, a + d_);
  e.minus_one_flag = a[d_] != 0;
  return e;
}

void GfpField::from_integer(const BigUint& x, Word* out) const {
  if (x >= params_.p) throw Error(Errc::kOutOfRange, "value not below p");
  set_zero(out);
  if (x.bit_length() == params_.p.bit_length() && x + BigUint(1) == params_.p) {
    out[d_] = 1;
    return;
  }
  BigUint rest = x;
  for (std::size_t i = 0; i < d_ && !rest.is_zero(); ++i) out[i] = static_cast<Word>(rest.divmod_small(r_));
}

BigUint GfpField::to_integer(const Word* a) const {
  if (a[d_] != 0) return params_.p - BigUint(1);
  BigUint acc;
  for (std::size_t i = d_; i-- > 0;) {
    acc.mul_small(r_);
    acc.add_small(a[i]);
  }
  return acc;
}

void GfpField::adjust(Word* e, int delta) const {
  e[d_] = 0;
  if (delta > 0) {
    std::uint64_t carry = static_cast<std::uint64_t>(delta);
    for (std::size_t i = 0; i < d_ && carry != 0; ++i) {
      const std::uint64_t v = e[i] + carry;
      e[i] = static_cast<Word>(v % r_);
      carry = v / r_;
    }
    if (carry == 0) return;
    // Wrapped past r^d = -1.
    if (carry == 1 && std::all_of(e, e + d_, [](Word w) { return w == 0; })) {
      e[d_] = 1;
      return;
    }
    adjust(e, -static_cast<int>(carry));
  } else if (delta < 0) {
    std::int64_t borrow = -delta;
    const auto r = static_cast<std::int64_t>(r_);
    for (std::size_t i = 0; i < d_ && borrow != 0; ++i) {
      std::int64_t v = static_cast<std::int64_t>(e[i]) - borrow;
      borrow = 0;
      while (v < 0) {
        v += r;
        ++borrow;
      }
      e[i] = static_cast<Word>(v);
    }
    if (borrow != 0) adjust(e, static_cast<int>(borrow));
  }
}

void GfpField::add(const Word* a, const Word* b, Word* out) const {
  const int fa = static_cast<int>(a[d_]);
  const int fb = static_cast<int>(b[d_]);
  Word carry = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    std::uint64_t v = std::uint64_t{a[i]} + b[i] + carry;
    carry = v >= r_ ? 1 : 0;
    if (carry) v -= r_;
    out[i] = static_cast<Word>(v);
  }
  adjust(out, -(static_cast<int>(carry) + fa + fb));
}

void GfpField::sub(const Word* a, const Word* b, Word* out) const {
  const int fa = static_cast<int>(a[d_]);
  const int fb = static_cast<int>(b[d_]);
  Word borrow = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    std::int64_t v = static_cast<std::int64_t>(a[i]) - b[i] - borrow;
    borrow = v < 0 ? 1 : 0;
    if (borrow) v += static_cast<std::int64_t>(r_);
    out[i] = static_cast<Word>(v);
  }
  adjust(out, static_cast<int>(borrow) + fb - fa);
}

void GfpField::neg(const Word* a, Word* out) const {
  if (a[d_] != 0) {
    set_one(out);
    return;
  }
  bool zero = true;
  for (std::size_t i = 0; i < d_; ++i) zero = zero && a[i] == 0;
  if (zero) {
    set_zero(out);
    return;
  }
  // (r^d - a) + 1, where r^d - a is the radix-r complement.
  Word borrow = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    std::int64_t v = -static_cast<std::int64_t>(a[i]) - borrow;
    borrow = v < 0 ? 1 : 0;
    if (borrow) v += static_cast<std::int64_t>(r_);
    out[i] = static_cast<Word>(v);
  }
  adjust(out, 1);
}

void GfpField::shift(const Word* a, std::size_t j, Word* out) const {
  bool negate = false;
  if (j >= d_) {
    j -= d_;
    negate = true;
  }
  if (a[d_] != 0) {
    // (-1) * r^j
    set_zero(out);
    out[j] = 1;
    if (!negate) neg(out, out);
    return;
  }
  if (j == 0) {
    std::copy(a, a + d_, out);
    out[d_] = 0;
  } else {
    // a * r^j = Lo - Hi with Lo the low d-j digits moved up and Hi the top j.
    std::fill(out, out + j, Word{0});
    std::copy(a, a + (d_ - j), out + j);
    const Word* hi = a + (d_ - j);
    Word borrow = 0;
    std::size_t i = 0;
    for (; i < j; ++i) {
      std::int64_t v = static_cast<std::int64_t>(out[i]) - hi[i] - borrow;
      borrow = v < 0 ? 1 : 0;
      if (borrow) v += static_cast<std::int64_t>(r_);
      out[i] = static_cast<Word>(v);
    }
    for (; i < d_ && borrow != 0; ++i) {
      if (out[i] == 0) {
        out[i] = static_cast<Word>(r_ - 1);
      } else {
        --out[i];
        borrow = 0;
      }
    }
    out[d_] = 0;
    if (borrow != 0) adjust(out, 1);
  }
  if (negate) neg(out, out);
}

void GfpField::propagate(std::int64_t* raw, std::int64_t& carry, Word* out) const {
  const auto r = static_cast<std::int64_t>(r_);
  for (std::size_t i = 0; i < d_; ++i) {
    std::int64_t q = 0;
    std::int64_t m = 0;
    floor_divmod(static_cast<__int128>(raw[i]) + carry, r, q, m);
    out[i] = static_cast<Word>(m);
    carry = q;
  }
}

void GfpField::normalize(std::int64_t* raw, Word* out) const {
  std::int64_t carry = 0;
  propagate(raw, carry, out);
  // carry * r^d == -carry; fold until the residual fits adjust().
  while (carry > 3 || carry < -3) {
    std::int64_t c = -carry;
    carry = 0;
    const auto r = static_cast<std::int64_t>(r_);
    for (std::size_t i = 0; i < d_ && c != 0; ++i) {
      std::int64_t q = 0;
      std::int64_t m = 0;
      floor_divmod(static_cast<__int128>(out[i]) + c, r, q, m);
      out[i] = static_cast<Word>(m);
      c = q;
    }
    carry = c;
  }
  adjust(out, static_cast<int>(-carry));
}

void GfpField::mul(const Word* a, const Word* b, Word* out) const {
  if (d_ <= kSchoolbookMaxDegree) {
    mul_schoolbook(a, b, out);
  } else {
    mul_kronecker(a, b, out);
  }
}

void GfpField::mul_schoolbook(const Word* a, const Word* b, Word* out) const {
  if (a[d_] != 0) {
    neg(b, out);
    return;
  }
  if (b[d_] != 0) {
    neg(a, out);
    return;
  }
  std::int64_t stack_raw[kSchoolbookMaxDegree];
  std::vector<std::int64_t> heap_raw;
  std::int64_t* raw = stack_raw;
  if (d_ > kSchoolbookMaxDegree) {
    heap_raw.resize(d_);
    raw = heap_raw.data();
  }
  std::fill(raw, raw + d_, std::int64_t{0});
  for (std::size_t i = 0; i < d_; ++i) {
    const auto ai = static_cast<std::int64_t>(a[i]);
    if (ai == 0) continue;
    const std::size_t split = d_ - i;
    for (std::size_t j = 0; j < split; ++j) raw[i + j] += ai * b[j];
    for (std::size_t j = split; j < d_; ++j) raw[i + j - d_] -= ai * b[j];
  }
  normalize(raw, out);
}

BigUint GfpField::kronecker_pack(const Word* a) const {
  std::vector<BigUint::Limb> limbs((kronecker_bits() + 63) / 64 + 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    const std::size_t bit = i * ks_stride_;
    const std::uint64_t v = a[i];
    limbs[bit / 64] |= v << (bit % 64);
    if (bit % 64 != 0) limbs[bit / 64 + 1] |= v >> (64 - bit % 64);
  }
  return BigUint::from_limbs(std::move(limbs));
}

void GfpField::kronecker_unpack(const BigUint& product, Word* out) const {
  std::vector<std::int64_t> raw(d_, 0);
  for (std::size_t k = 0; k + 1 < 2 * d_; ++k) {
    const auto c = static_cast<std::int64_t>(product.extract_bits(k * ks_stride_, ks_stride_));
    if (k < d_) {
      raw[k] += c;
    } else {
      raw[k - d_] -= c;
    }
  }
  normalize(raw.data(), out);
}

void GfpField::mul_kronecker(const Word* a, const Word* b, Word* out) const {
  if (a[d_] != 0) {
    neg(b, out);
    return;
  }
  if (b[d_] != 0) {
    neg(a, out);
    return;
  }
  kronecker_unpack(kronecker_pack(a) * kronecker_pack(b), out);
}

void GfpField::from_small(std::int64_t v, Word* out) const {
  std::vector<std::int64_t> raw(d_, 0);
  raw[0] = v;
  normalize(raw.data(), out);
}

GfpElement encode(const BigUint& x, const GfpParams& params) {
  const GfpField field(params);
  std::vector<Word> e(field.stride());
  field.from_integer(x, e.data());
  return field.store(e.data());
}

BigUint decode(const GfpElement& e, const GfpParams& params) {
  const GfpField field(params);
  std::vector<Word> w(field.stride());
  field.load(e, w.data());
  return field.to_integer(w.data());
}

namespace {

template <typename Op>
GfpElement binary_op(const GfpElement& a, const GfpElement& b, const GfpParams& params, Op op) {
  const GfpField field(params);
  const std::size_t s = field.stride();
  std::vector<Word> buf(3 * s);
  field.load(a, buf.data());
  field.load(b, buf.data() + s);
  op(field, buf.data(), buf.data() + s, buf.data() + 2 * s);
  return field.store(buf.data() + 2 * s);
}

}  // namespace

GfpElement add(const GfpElement& a, const GfpElement& b, const GfpParams& params) {
  return binary_op(a, b, params,
                   [](const GfpField& f, const Word* x, const Word* y, Word* z) { f.add(x, y, z); });
}

GfpElement sub(const GfpElement& a, const GfpElement& b, const GfpParams& params) {
  return binary_op(a, b, params,
                   [](const GfpField& f, const Word* x, const Word* y, Word* z) { f.sub(x, y, z); });
}

GfpElement neg(const GfpElement& a, const GfpParams& params) {
  const GfpField field(params);
  std::vector<Word> buf(2 * field.stride());
  field.load(a, buf.data());
  field.neg(buf.data(), buf.data() + field.stride());
  return field.store(buf.data() + field.stride());
}

GfpElement mul_by_r_power(const GfpElement& a, std::size_t j, const GfpParams& params) {
  if (j >= params.shift_period()) {
    throw Error(Errc::kShiftOutOfRange,
                "j = " + std::to_string(j) + " not below " + std::to_string(params.shift_period()));
  }
  const GfpField field(params);
  std::vector<Word> buf(2 * field.stride());
  field.load(a, buf.data());
  field.shift(buf.data(), j, buf.data() + field.stride());
  return field.store(buf.data() + field.stride());
}

GfpElement normalize(std::span<const std::int64_t> raw, const GfpParams& params) {
  const GfpField field(params);
  if (raw.size() != field.degree()) throw Error(Errc::kOutOfRange, "raw vector has the wrong length");
  std::vector<std::int64_t> copy(raw.begin(), raw.end());
  std::vector<Word> out(field.stride());
  field.normalize(copy.data(), out.data());
  return field.store(out.data());
}

GfpElement mul_generic(const GfpElement& a, const GfpElement& b, const GfpParams& params,
                       MulStrategy strategy) {
  return binary_op(a, b, params, [strategy](const GfpField& f, const Word* x, const Word* y, Word* z) {
    switch (strategy) {
      case MulStrategy::kSchoolbook: f.mul_schoolbook(x, y, z); break;
      case MulStrategy::kKronecker: f.mul_kronecker(x, y, z); break;
      case MulStrategy::kAuto: f.mul(x, y, z); break;
    }
  });
}

GfpElement inv_pow2(unsigned k, const GfpParams& params) {
  BigUint half = params.p + BigUint(1);
  half >>= 1;
  return encode(pow_mod(half, BigUint(k), params.p), params);
}

}  // namespace gfpmul

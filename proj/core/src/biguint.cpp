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

#include "gfpmul/biguint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>

#include "gfpmul/error.hpp"

namespace gfpmul {

namespace {

using Limb = BigUint::Limb;
using Wide = unsigned __int128;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// out[0..n+m) = a[0..n) * b[0..m); out must not alias the inputs.
void mul_schoolbook(const Limb* a, std::size_t n, const Limb* b, std::size_t m, Limb* out) {
  std::fill(out, out + n + m, Limb{0});
  for (std::size_t i = 0; i < n; ++i) {
    const Limb ai = a[i];
    if (ai == 0) continue;
    Limb carry = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const Wide t = static_cast<Wide>(ai) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> 64);
    }
    out[i + m] = carry;
  }
}

}  // namespace

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

void BigUint::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_limbs(std::vector<Limb> limbs) {
  BigUint out;
  out.limbs_ = std::move(limbs);
  out.trim();
  return out;
}

BigUint BigUint::from_hex(std::string_view text) {
  std::string digits;
  digits.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i + 1 < text.size() && text[i] == '0' && (text[i + 1] == 'x' || text[i + 1] == 'X')) i += 2;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (hex_value(c) < 0) throw Error(Errc::kParse, std::string("invalid hex digit '") + c + "'");
    digits.push_back(c);
  }
  if (digits.empty()) throw Error(Errc::kParse, "empty hexadecimal integer");
  BigUint out;
  out.limbs_.assign((digits.size() + 15) / 16, 0);
  std::size_t bit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
    out.limbs_[bit / 64] |= static_cast<Limb>(hex_value(*it)) << (bit % 64);
  }
  out.trim();
  return out;
}

BigUint BigUint::from_decimal(std::string_view text) {
  BigUint out;
  bool any = false;
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '0' || c > '9') throw Error(Errc::kParse, std::string("invalid decimal digit '") + c + "'");
    out.mul_small(10);
    out.add_small(static_cast<Limb>(c - '0'));
    any = true;
  }
  if (!any) throw Error(Errc::kParse, "empty decimal integer");
  return out;
}

BigUint BigUint::power_of_two(std::size_t exponent) {
  BigUint out;
  out.limbs_.assign(exponent / 64 + 1, 0);
  out.limbs_.back() = Limb{1} << (exponent % 64);
  return out;
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exponent) {
  BigUint result(1);
  BigUint square(base);
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

BigUint BigUint::random_bits(std::size_t bits, std::mt19937_64& rng) {
  BigUint out;
  out.limbs_.resize((bits + 63) / 64);
  for (auto& limb : out.limbs_) limb = rng();
  if (bits % 64 != 0 && !out.limbs_.empty()) out.limbs_.back() &= (Limb{1} << (bits % 64)) - 1;
  out.trim();
  return out;
}

std::string BigUint::to_hex() const {
  if (limbs_.empty()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(limbs_.size() * 16);
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(kDigits[(*it >> shift) & 0xF]);
  }
  const auto first = out.find_first_not_of('0');
  return out.substr(first);
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  constexpr Limb kChunk = 10'000'000'000'000'000'000ULL;
  BigUint rest = *this;
  std::vector<Limb> chunks;
  while (!rest.is_zero()) chunks.push_back(rest.divmod_small(kChunk));
  std::string out = std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    std::string part = std::to_string(*it);
    out.append(19 - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t BigUint::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool BigUint::test_bit(std::size_t index) const noexcept {
  const std::size_t limb = index / 64;
  return limb < limbs_.size() && ((limbs_[limb] >> (index % 64)) & 1U);
}

std::uint64_t BigUint::extract_bits(std::size_t pos, unsigned len) const noexcept {
  if (len == 0) return 0;
  const std::size_t limb = pos / 64;
  const unsigned offset = pos % 64;
  if (limb >= limbs_.size()) return 0;
  Limb value = limbs_[limb] >> offset;
  if (offset != 0 && limb + 1 < limbs_.size()) value |= limbs_[limb + 1] << (64 - offset);
  return len >= 64 ? value : value & ((Limb{1} << len) - 1);
}

double BigUint::log2() const {
  if (limbs_.empty()) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = bit_length();
  if (bits <= 64) return std::log2(static_cast<double>(limbs_[0]));
  // Top 64 bits carry far more precision than a double holds.
  const std::size_t shift = bits - 64;
  const double top = static_cast<double>(extract_bits(shift, 64));
  return std::log2(top) + static_cast<double>(shift);
}

void BigUint::add_shifted(std::uint64_t value, std::size_t shift) {
  if (value == 0) return;
  const std::size_t limb = shift / 64;
  const unsigned offset = shift % 64;
  const std::size_t needed = limb + 2;
  if (limbs_.size() < needed) limbs_.resize(needed, 0);
  const Limb lo = value << offset;
  const Limb hi = offset == 0 ? 0 : value >> (64 - offset);
  Wide t = static_cast<Wide>(limbs_[limb]) + lo;
  limbs_[limb] = static_cast<Limb>(t);
  Limb carry = static_cast<Limb>(t >> 64);
  t = static_cast<Wide>(limbs_[limb + 1]) + hi + carry;
  limbs_[limb + 1] = static_cast<Limb>(t);
  carry = static_cast<Limb>(t >> 64);
  for (std::size_t i = limb + 2; carry != 0; ++i) {
    if (i == limbs_.size()) limbs_.push_back(0);
    t = static_cast<Wide>(limbs_[i]) + carry;
    limbs_[i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  trim();
}

BigUint& BigUint::mul_small(Limb factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  Limb carry = 0;
  for (auto& limb : limbs_) {
    const Wide t = static_cast<Wide>(limb) * factor + carry;
    limb = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::add_small(Limb addend) {
  for (std::size_t i = 0; addend != 0; ++i) {
    if (i == limbs_.size()) {
      limbs_.push_back(addend);
      break;
    }
    const Limb before = limbs_[i];
    limbs_[i] += addend;
    addend = limbs_[i] < before ? 1 : 0;
  }
  return *this;
}

BigUint::Limb BigUint::divmod_small(Limb divisor) {
  Wide rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    const Wide cur = (rem << 64) | *it;
    *it = static_cast<Limb>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<Limb>(rem);
}

BigUint::Limb BigUint::mod_small(Limb divisor) const {
  Wide rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) rem = ((rem << 64) | *it) % divisor;
  return static_cast<Limb>(rem);
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  Limb carry = 0;
  std::size_t i = 0;
  for (; i < rhs.limbs_.size(); ++i) {
    const Wide t = static_cast<Wide>(limbs_[i]) + rhs.limbs_[i] + carry;
    limbs_[i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  for (; carry != 0 && i < limbs_.size(); ++i) {
    limbs_[i] += carry;
    carry = limbs_[i] == 0 ? 1 : 0;
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs) throw Error(Errc::kOutOfRange, "BigUint subtraction underflow");
  Limb borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const Limb sub = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
    if (sub == 0 && borrow == 0 && i >= rhs.limbs_.size()) break;
    const Limb before = limbs_[i];
    const Limb diff = before - sub - borrow;
    borrow = (before < sub || (before == sub && borrow != 0)) ? 1 : 0;
    limbs_[i] = diff;
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Limb> out(lhs.limbs_.size() + rhs.limbs_.size());
  mul_schoolbook(lhs.limbs_.data(), lhs.limbs_.size(), rhs.limbs_.data(), rhs.limbs_.size(), out.data());
  return BigUint::from_limbs(std::move(out));
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  *this = *this * rhs;
  return *this;
}

BigUint& BigUint::operator<<=(std::size_t shift) {
  if (limbs_.empty() || shift == 0) return *this;
  const std::size_t whole = shift / 64;
  const unsigned offset = shift % 64;
  if (offset == 0) {
    limbs_.insert(limbs_.begin(), whole, 0);
    return *this;
  }
  limbs_.push_back(0);
  for (std::size_t i = limbs_.size() - 1; i > 0; --i) {
    limbs_[i] = (limbs_[i] << offset) | (limbs_[i - 1] >> (64 - offset));
  }
  limbs_[0] <<= offset;
  limbs_.insert(limbs_.begin(), whole, 0);
  trim();
  return *this;
}

BigUint& BigUint::operator>>=(std::size_t shift) {
  const std::size_t whole = shift / 64;
  if (whole >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
  const unsigned offset = shift % 64;
  if (offset != 0) {
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
      limbs_[i] = (limbs_[i] >> offset) | (limbs_[i + 1] << (64 - offset));
    }
    limbs_.back() >>= offset;
  }
  trim();
  return *this;
}

std::strong_ordering operator<=>(const BigUint& lhs, const BigUint& rhs) noexcept {
  if (lhs.limbs_.size() != rhs.limbs_.size()) return lhs.limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

// Knuth, TAOCP vol. 2, Algorithm D.
std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& dividend, const BigUint& divisor) {
  if (divisor.is_zero()) throw Error(Errc::kOutOfRange, "division by zero");
  if (dividend < divisor) return {BigUint{}, dividend};
  if (divisor.limbs_.size() == 1) {
    BigUint q = dividend;
    const Limb r = q.divmod_small(divisor.limbs_[0]);
    return {std::move(q), BigUint(r)};
  }
  const unsigned shift = static_cast<unsigned>(std::countl_zero(divisor.limbs_.back()));
  const BigUint v = divisor << shift;
  BigUint u = dividend << shift;
  const std::size_t n = v.limbs_.size();
  if (u.limbs_.size() == dividend.limbs_.size()) u.limbs_.push_back(0);
  if (u.limbs_.size() < dividend.limbs_.size() + 1) u.limbs_.resize(dividend.limbs_.size() + 1, 0);
  const std::size_t m = u.limbs_.size() - n;
  std::vector<Limb> q(m, 0);
  const Limb vtop = v.limbs_[n - 1];
  const Limb vnext = v.limbs_[n - 2];
  for (std::size_t j = m; j-- > 0;) {
    const Wide num = (static_cast<Wide>(u.limbs_[j + n]) << 64) | u.limbs_[j + n - 1];
    Wide qhat = num / vtop;
    Wide rhat = num % vtop;
    while (qhat >> 64 ||
           qhat * vnext > ((rhat << 64) | u.limbs_[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat >> 64) break;
    }
    // u[j..j+n] -= qhat * v
    Limb borrow = 0;
    Limb carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Wide p = qhat * v.limbs_[i] + carry;
      carry = static_cast<Limb>(p >> 64);
      const Limb plo = static_cast<Limb>(p);
      const Limb before = u.limbs_[i + j];
      const Limb diff = before - plo - borrow;
      borrow = (static_cast<Wide>(plo) + borrow > before) ? 1 : 0;
      u.limbs_[i + j] = diff;
    }
    const Limb before = u.limbs_[j + n];
    u.limbs_[j + n] = before - carry - borrow;
    const bool negative = static_cast<Wide>(carry) + borrow > before;
    if (negative) {
      --qhat;
      Limb c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Wide t = static_cast<Wide>(u.limbs_[i + j]) + v.limbs_[i] + c;
        u.limbs_[i + j] = static_cast<Limb>(t);
        c = static_cast<Limb>(t >> 64);
      }
      u.limbs_[j + n] += c;
    }
    q[j] = static_cast<Limb>(qhat);
  }
  u.limbs_.resize(n);
  u.trim();
  u >>= shift;
  return {from_limbs(std::move(q)), std::move(u)};
}

MontgomeryContext::MontgomeryContext(BigUint odd_modulus) : modulus_(std::move(odd_modulus)) {
  if (!modulus_.is_odd()) throw Error(Errc::kOutOfRange, "Montgomery modulus must be odd");
  mod_limbs_.assign(modulus_.limbs().begin(), modulus_.limbs().end());
  // Newton iteration for m0^-1 mod 2^64.
  const Limb m0 = mod_limbs_[0];
  Limb inv = m0;
  for (int i = 0; i < 6; ++i) inv *= 2 - m0 * inv;
  neg_inv_ = ~inv + 1;
  const std::size_t k = mod_limbs_.size();
  one_ = BigUint::power_of_two(64 * k) % modulus_;
  r_squared_ = BigUint::power_of_two(128 * k) % modulus_;
}

void MontgomeryContext::multiply_into(const Limb* a, const Limb* b, Limb* out, Limb* t) const {
  const std::size_t k = mod_limbs_.size();
  const Limb* n = mod_limbs_.data();
  std::fill(t, t + k + 2, Limb{0});
  for (std::size_t i = 0; i < k; ++i) {
    Limb carry = 0;
    const Limb bi = b[i];
    for (std::size_t j = 0; j < k; ++j) {
      const Wide s = static_cast<Wide>(a[j]) * bi + t[j] + carry;
      t[j] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> 64);
    }
    Wide s = static_cast<Wide>(t[k]) + carry;
    t[k] = static_cast<Limb>(s);
    t[k + 1] = static_cast<Limb>(s >> 64);
    const Limb m = t[0] * neg_inv_;
    s = static_cast<Wide>(m) * n[0] + t[0];
    carry = static_cast<Limb>(s >> 64);
    for (std::size_t j = 1; j < k; ++j) {
      s = static_cast<Wide>(m) * n[j] + t[j] + carry;
      t[j - 1] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> 64);
    }
    s = static_cast<Wide>(t[k]) + carry;
    t[k - 1] = static_cast<Limb>(s);
    t[k] = t[k + 1] + static_cast<Limb>(s >> 64);
  }
  // Conditional final subtraction.
  bool ge = t[k] != 0;
  if (!ge) {
    ge = true;
    for (std::size_t i = k; i-- > 0;) {
      if (t[i] != n[i]) {
        ge = t[i] > n[i];
        break;
      }
    }
  }
  if (ge) {
    Limb borrow = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Limb before = t[i];
      t[i] = before - n[i] - borrow;
      borrow = (static_cast<Wide>(n[i]) + borrow > before) ? 1 : 0;
    }
  }
  std::copy(t, t + k, out);
}

namespace {

std::vector<Limb> padded(const BigUint& x, std::size_t k) {
  std::vector<Limb> out(k, 0);
  std::copy(x.limbs().begin(), x.limbs().end(), out.begin());
  return out;
}

}  // namespace

BigUint MontgomeryContext::multiply(const BigUint& lhs, const BigUint& rhs) const {
  const std::size_t k = mod_limbs_.size();
  const auto a = padded(lhs, k);
  const auto b = padded(rhs, k);
  std::vector<Limb> out(k), scratch(k + 2);
  multiply_into(a.data(), b.data(), out.data(), scratch.data());
  return BigUint::from_limbs(std::move(out));
}

BigUint MontgomeryContext::to_montgomery(const BigUint& value) const {
  return multiply(value % modulus_, r_squared_);
}

BigUint MontgomeryContext::from_montgomery(const BigUint& value) const {
  return multiply(value, BigUint(1));
}

BigUint MontgomeryContext::pow(const BigUint& base, const BigUint& exponent) const {
  const std::size_t k = mod_limbs_.size();
  constexpr unsigned kWindow = 4;
  std::vector<std::vector<Limb>> table(1U << kWindow);
  table[0] = padded(one_, k);
  table[1] = padded(to_montgomery(base), k);
  std::vector<Limb> scratch(k + 2);
  for (std::size_t i = 2; i < table.size(); ++i) {
    table[i].resize(k);
    multiply_into(table[i - 1].data(), table[1].data(), table[i].data(), scratch.data());
  }
  std::vector<Limb> acc = table[0];
  std::vector<Limb> tmp(k);
  const std::size_t bits = exponent.bit_length();
  const std::size_t windows = (bits + kWindow - 1) / kWindow;
  for (std::size_t w = windows; w-- > 0;) {
    for (unsigned s = 0; s < kWindow; ++s) {
      multiply_into(acc.data(), acc.data(), tmp.data(), scratch.data());
      acc.swap(tmp);
    }
    const auto digit = static_cast<std::size_t>(exponent.extract_bits(w * kWindow, kWindow));
    if (digit != 0) {
      multiply_into(acc.data(), table[digit].data(), tmp.data(), scratch.data());
      acc.swap(tmp);
    }
  }
  return from_montgomery(BigUint::from_limbs(std::move(acc)));
}

BigUint pow_mod(const BigUint& base, const BigUint& exponent, const BigUint& modulus) {
  if (modulus.is_zero()) throw Error(Errc::kOutOfRange, "pow_mod with zero modulus");
  if (modulus == BigUint(1)) return {};
  if (modulus.is_odd()) return MontgomeryContext(modulus).pow(base, exponent);
  BigUint result(1);
  BigUint square = base % modulus;
  for (std::size_t i = 0, bits = exponent.bit_length(); i < bits; ++i) {
    if (exponent.test_bit(i)) result = (result * square) % modulus;
    if (i + 1 < bits) square = (square * square) % modulus;
  }
  return result;
}

}  // namespace gfpmul

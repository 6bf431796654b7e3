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

#include <algorithm>
#include <stdexcept>

#include "gfpmul/reference/oracles.hpp"

namespace gfpmul::ref {

BigNat::BigNat(std::uint64_t v) {
  while (v != 0) {
    w_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigNat::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

BigNat BigNat::from_hex(std::string_view hex) {
  BigNat out;
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    const char c = *it;
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      continue;
    } else {
      throw std::invalid_argument("bad hex digit");
    }
    if (bit / 32 >= out.w_.size()) out.w_.push_back(0);
    out.w_[bit / 32] |= v << (bit % 32);
    bit += 4;
  }
  out.trim();
  return out;
}

std::string BigNat::to_hex() const {
  if (w_.empty()) return "0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    for (int k = 0; k < 8; ++k) s.push_back(digits[(w_[i] >> (4 * k)) & 0xF]);
  }
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  std::reverse(s.begin(), s.end());
  return s;
}

std::size_t BigNat::bit_length() const {
  if (w_.empty()) return 0;
  std::size_t bits = 32 * (w_.size() - 1);
  for (std::uint32_t top = w_.back(); top != 0; top >>= 1) ++bits;
  return bits;
}

bool BigNat::bit(std::size_t i) const { return i / 32 < w_.size() && ((w_[i / 32] >> (i % 32)) & 1U); }

int compare(const BigNat& a, const BigNat& b) {
  if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size() ? -1 : 1;
  for (std::size_t i = a.w_.size(); i-- > 0;) {
    if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
  }
  return 0;
}

BigNat operator+(const BigNat& a, const BigNat& b) {
  BigNat out;
  const std::size_t n = std::max(a.w_.size(), b.w_.size());
  out.w_.resize(n + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = carry + (i < a.w_.size() ? a.w_[i] : 0) + (i < b.w_.size() ? b.w_[i] : 0);
    out.w_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  out.w_[n] = static_cast<std::uint32_t>(carry);
  out.trim();
  return out;
}

BigNat operator-(const BigNat& a, const BigNat& b) {
  if (compare(a, b) < 0) throw std::domain_error("negative difference");
  BigNat out;
  out.w_.resize(a.w_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.w_[i]) - (i < b.w_.size() ? b.w_[i] : 0) - borrow;
    borrow = 0;
    if (d < 0) {
      d += std::int64_t{1} << 32;
      borrow = 1;
    }
    out.w_[i] = static_cast<std::uint32_t>(d);
  }
  out.trim();
  return out;
}

BigNat schoolbook_mul(const BigNat& a, const BigNat& b) {
  const auto& x = a.words();
  const auto& y = b.words();
  if (x.empty() || y.empty()) return BigNat{};
  std::vector<std::uint32_t> z(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::uint64_t t = std::uint64_t{x[i]} * y[j] + z[i + j] + carry;
      z[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    z[i + y.size()] = static_cast<std::uint32_t>(carry);
  }
  BigNat out;
  out.w_ = std::move(z);
  out.trim();
  return out;
}

BigNat operator*(const BigNat& a, const BigNat& b) { return schoolbook_mul(a, b); }

BigNat BigNat::shl(std::size_t bits) const {
  if (w_.empty()) return {};
  BigNat out;
  out.w_.assign(bits / 32, 0);
  const unsigned s = bits % 32;
  std::uint32_t carry = 0;
  for (const std::uint32_t v : w_) {
    out.w_.push_back((v << s) | carry);
    carry = s == 0 ? 0 : v >> (32 - s);
  }
  out.w_.push_back(carry);
  out.trim();
  return out;
}

// Binary long division: one bit of the dividend at a time.
BigNat operator%(const BigNat& a, const BigNat& m) {
  if (m.is_zero()) throw std::domain_error("modulus is zero");
  BigNat rem;
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    rem = rem.shl(1);
    if (a.bit(i)) rem = rem + BigNat(1);
    if (compare(rem, m) >= 0) rem = rem - m;
  }
  return rem;
}

}  // namespace gfpmul::ref

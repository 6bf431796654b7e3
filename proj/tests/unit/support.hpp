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

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "gfpmul/biguint.hpp"
#include "gfpmul/gfp.hpp"
#include "gfpmul/reference/oracles.hpp"

namespace gfpmul::testing {

inline mpz_class to_mpz(const BigUint& x) { return mpz_class(x.to_hex(), 16); }
inline mpz_class to_mpz(const ref::BigNat& x) { return mpz_class(x.to_hex(), 16); }
inline BigUint from_mpz(const mpz_class& x) { return BigUint::from_hex(x.get_str(16)); }
inline ref::BigNat to_ref(const BigUint& x) { return ref::BigNat::from_hex(x.to_hex()); }

inline mpz_class gfp_mpz(std::uint64_t r, unsigned lambda) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), r, 1UL << lambda);
  return p + 1;
}

/// Value of an element computed independently of the core decoder.
inline mpz_class element_value(const GfpElement& e, std::uint64_t r, unsigned lambda) {
  if (e.minus_one_flag) return gfp_mpz(r, lambda) - 1;
  mpz_class v = 0;
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) v = v * static_cast<unsigned long>(r) + *it;
  return v;
}

inline GfpElement random_element(const GfpParams& params, std::mt19937_64& rng) {
  GfpElement e;
  e.coeffs.assign(params.degree(), 0);
  const auto kind = rng() % 12;
  if (kind == 0) {
    e.minus_one_flag = true;
  } else if (kind == 1) {
    for (auto& c : e.coeffs) c = static_cast<Word>(params.r - 1);
  } else if (kind != 2) {
    for (auto& c : e.coeffs) c = static_cast<Word>(rng() % params.r);
  }
  return e;
}

}  // namespace gfpmul::testing

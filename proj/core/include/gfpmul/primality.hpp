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

#include <cstdint>
#include <vector>

#include "gfpmul/biguint.hpp"

namespace gfpmul {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Strong-pseudoprime test to the first `rounds` prime bases. Exact for
/// n < 2^64 regardless of `rounds`.
bool is_probable_prime(const BigUint& n, unsigned rounds = 25);

/// Prime factors of n in increasing order, without multiplicity.
/// Trial division up to 2^20, then Pollard rho on the cofactor.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True iff r^(2^lambda) + 1 is prime (probable prime above 2^64).
///
/// Candidates q = k*2^(lambda+1) + 1 <= `trial_bound` are tried as divisors
/// first; every prime factor of a generalized Fermat number has that shape.
bool is_gfp_prime(std::uint64_t r, unsigned lambda, std::uint64_t trial_bound = 1U << 20);

}  // namespace gfpmul

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
#include <string>
#include <vector>

namespace gfpmul::tools {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first mismatch, empty on success
};

struct SelfcheckOptions {
  std::uint64_t field_samples = 2000;
  std::uint64_t multiply_pairs = 20;
  std::uint64_t seed = 20260101;
};

/// Field operations against the reference modular arithmetic.
CheckResult check_field_ops(const SelfcheckOptions& opt);
/// Every shift a*r^j against the generic product and the reference.
CheckResult check_shifts(const SelfcheckOptions& opt);
/// Large-radix and radix-2 FFTs against the naive DFT for N <= 64.
CheckResult check_fft(const SelfcheckOptions& opt);
/// Inverse half-DFT undoes the forward one.
CheckResult check_half_dft_roundtrip(const SelfcheckOptions& opt);
/// Half-DFT product against the naive negacyclic convolution.
CheckResult check_negacyclic(const SelfcheckOptions& opt);
/// Grouped recursion, Kronecker recursion and the reference agree.
CheckResult check_grouping(const SelfcheckOptions& opt);
/// Integer products through plans of depth 0, 1 and 2 against schoolbook.
CheckResult check_multiply(const SelfcheckOptions& opt);

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opt);

}  // namespace gfpmul::tools

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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfpmul {

enum class Errc {
  kOddBase,
  kCompositeModulus,
  kOutOfRange,
  kShiftOutOfRange,
  kFactorizationFailure,
  kOrderUnavailable,
  kCheapModeViolation,
  kTableTooSmall,
  kPhaseMismatch,
  kPrimeNotFound,
  kOverflow,
  kNoValidBeta,
  kSearchExhausted,
  kNoValidEta,
  kParse,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported with this type; `code()` identifies the
// failure class, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kOddBase: return "OddBase";
    case Errc::kCompositeModulus: return "CompositeModulus";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kShiftOutOfRange: return "ShiftOutOfRange";
    case Errc::kFactorizationFailure: return "FactorizationFailure";
    case Errc::kOrderUnavailable: return "OrderUnavailable";
    case Errc::kCheapModeViolation: return "CheapModeViolation";
    case Errc::kTableTooSmall: return "TableTooSmall";
    case Errc::kPhaseMismatch: return "PhaseMismatch";
    case Errc::kPrimeNotFound: return "PrimeNotFound";
    case Errc::kOverflow: return "Overflow";
    case Errc::kNoValidBeta: return "NoValidBeta";
    case Errc::kSearchExhausted: return "SearchExhausted";
    case Errc::kNoValidEta: return "NoValidEta";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gfpmul

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

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>

#include "gfpmul/error.hpp"
#include "gfpmul/multiplier.hpp"

namespace gfpmul {

namespace {

std::uint64_t field_value(std::string_view token, std::string_view key, std::size_t line_no) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=') {
    throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": expected " + std::string(key) + "=");
  }
  const std::string_view digits = token.substr(key.size() + 1);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": bad value for " + std::string(key));
  }
  return v;
}

}  // namespace

std::string serialize_plan(const MultiplyPlan& plan) {
  std::ostringstream out;
  for (std::size_t i = 0; i < plan.levels.size(); ++i) {
    const PlanLevel& l = plan.levels[i];
    out << "level " << i << ": r=" << l.params.r << " lambda=" << l.params.lambda << " eta=" << l.eta
        << " N=" << l.big_n << " beta=" << l.beta << '\n';
  }
  return out.str();
}

MultiplyPlan parse_plan(const std::string& text, const PlanConfig& config) {
  std::istringstream in(text);
  std::string line;
  std::vector<PlanLevel> levels;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string word, index, r, lambda, eta, n, beta, extra;
    if (!(fields >> word >> index >> r >> lambda >> eta >> n >> beta) || (fields >> extra) || word != "level" ||
        index != std::to_string(levels.size()) + ":") {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": malformed plan level");
    }
    PlanLevel level;
    const auto lam = field_value(lambda, "lambda", line_no);
    if (lam == 0 || lam > 16) throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": lambda out of range");
    level.params = make_params(field_value(r, "r", line_no), static_cast<unsigned>(lam));
    level.eta = field_value(eta, "eta", line_no);
    level.big_n = field_value(n, "N", line_no);
    level.beta = static_cast<unsigned>(field_value(beta, "beta", line_no));
    if (level.big_n < 2 || (level.big_n & (level.big_n - 1)) != 0) {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": N must be a power of two >= 2");
    }
    if (levels.empty()) {
      level.operand_bits = level.big_n * level.eta / 2;
    } else {
      const PlanLevel& prev = levels.back();
      level.grouped = prev.beta != 0;
      if (level.grouped) {
        if (prev.params.degree() % prev.beta != 0 || prev.params.degree() / prev.beta != level.big_n ||
            level.eta != 0) {
          throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": grouped level inconsistent with beta");
        }
      } else {
        level.operand_bits = GfpField(prev.params).kronecker_bits();
        if (level.eta == 0 || level.operand_bits > level.big_n * level.eta / 2) {
          throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": level too small for Kronecker operands");
        }
      }
    }
    if (!level.grouped && level.eta == 0) {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": eta must be positive");
    }
    levels.push_back(std::move(level));
  }
  if (!levels.empty() && levels.back().beta != 0) throw Error(Errc::kParse, "last level has a nonzero beta");
  const std::size_t top_n = levels.empty() ? 0 : levels.front().operand_bits;
  return plan_from_levels(top_n, std::move(levels), config);
}

}  // namespace gfpmul

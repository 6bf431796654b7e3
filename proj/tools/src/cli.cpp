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

#include "gfpmul_tools/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gfpmul/biguint.hpp"
#include "gfpmul/costmodel.hpp"
#include "gfpmul/error.hpp"
#include "gfpmul/multiplier.hpp"
#include "gfpmul/primes.hpp"
#include "gfpmul/reference/oracles.hpp"
#include "gfpmul_tools/selfcheck.hpp"

namespace gfpmul::tools {

namespace {

enum class Format { kText, kRecords };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Decimal, or 2^k.
std::uint64_t parse_size(const std::string& text) {
  try {
    std::size_t used = 0;
    if (text.rfind("2^", 0) == 0) {
      const unsigned long k = std::stoul(text.substr(2), &used);
      if (used == text.size() - 2 && k < 64) return std::uint64_t{1} << k;
    } else {
      const unsigned long long v = std::stoull(text, &used);
      if (used == text.size()) return v;
    }
  } catch (const std::logic_error&) {
  }
  throw CLI::ValidationError("size", "expected a decimal integer or 2^k, got '" + text + "'");
}

std::string gfp_name(std::uint64_t r, unsigned lambda) {
  return std::to_string(r) + "^" + std::to_string(std::uint64_t{1} << lambda) + "+1";
}

GammaShape parse_gamma(const std::string& name) {
  if (name == "identity") return GammaShape::kIdentity;
  if (name == "log") return GammaShape::kLogUpper;
  if (name == "square") return GammaShape::kSquare;
  throw CLI::ValidationError("--gamma", "unknown shape '" + name + "'");
}

struct PlanOptions {
  std::size_t threshold = PlanConfig{}.threshold_bits;
  std::size_t max_depth = PlanConfig{}.max_depth;
  bool theoretical = false;
  bool no_grouping = false;
  bool skip_top_weights = false;
  bool no_cache = false;
  unsigned top_lambda = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--threshold", threshold, "Stop recursing below this many bits");
    cmd->add_option("--max-depth", max_depth, "Maximum number of levels");
    cmd->add_flag("--theoretical", theoretical, "Select primes in the (R, R(1+lambda^2)] window");
    cmd->add_flag("--no-grouping", no_grouping, "Recurse by Kronecker substitution only");
    cmd->add_flag("--skip-top-weights", skip_top_weights, "Cyclic transform at the top level");
    cmd->add_flag("--no-twiddle-cache", no_cache, "Do not precompute transformed twiddles");
    cmd->add_option("--top-lambda", top_lambda, "Force lambda at the top level");
  }

  PlanConfig config() const {
    PlanConfig c;
    c.threshold_bits = threshold;
    c.max_depth = max_depth;
    c.selection = theoretical ? PrimeSelection::kTheoretical : PrimeSelection::kPractical;
    c.grouping = !no_grouping;
    c.skip_top_weights = skip_top_weights;
    c.cache_twiddles = !no_cache;
    if (top_lambda != 0) c.top_lambda = top_lambda;
    return c;
  }
};

void print_counters(std::ostream& out, const std::vector<OpCounters>& counters) {
  for (std::size_t i = 0; i < counters.size(); ++i) {
    out << "level=" << i << " expensive_muls=" << counters[i].expensive_muls
        << " cheap_shifts=" << counters[i].cheap_shifts << " additions=" << counters[i].additions << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer multiplication over generalized Fermat prime fields", "gfpmul"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  unsigned jobs = 1;
  if (const char* env = std::getenv("GFPMUL_JOBS"); env != nullptr) {
    try {
      jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::logic_error&) {
      err << "ignoring invalid GFPMUL_JOBS='" << env << "'\n";
    }
  }
  std::string format_name = "text";
  app.add_option("--jobs,-j", jobs, "Worker threads (default $GFPMUL_JOBS or 1)")->check(CLI::Range(1U, 1024U));
  app.add_option("--format", format_name, "Output form: text or records")
      ->check(CLI::IsMember({"text", "records"}));

  // mul
  auto* mul = app.add_subcommand("mul", "Multiply two hexadecimal integers read from files");
  std::string file_a, file_b, plan_file;
  bool check = false;
  PlanOptions mul_plan;
  mul->add_option("a", file_a, "File holding the first operand")->required();
  mul->add_option("b", file_b, "File holding the second operand")->required();
  mul->add_option("--plan", plan_file, "Serialized plan to use");
  mul->add_flag("--check", check, "Verify the product against schoolbook multiplication");
  mul_plan.attach(mul);

  // primes-search
  auto* search = app.add_subcommand("primes-search", "Smallest generalized Fermat prime above a bit size");
  unsigned search_lambda = 0;
  std::size_t min_bits = 0;
  search->add_option("--lambda", search_lambda, "Exponent 2^lambda")->required()->check(CLI::Range(1U, 16U));
  search->add_option("--min-bits", min_bits, "Require floor(log2 p) >= this")->required();

  // primes-count
  auto* count = app.add_subcommand("primes-count", "Count generalized Fermat primes with r in [lo, hi]");
  unsigned count_lambda = 0;
  std::string lo_text, hi_text;
  bool list = false;
  count->add_option("--lambda", count_lambda, "Exponent 2^lambda")->required()->check(CLI::Range(1U, 16U));
  count->add_option("--lo", lo_text, "Lower bound on r")->required();
  count->add_option("--hi", hi_text, "Upper bound on r")->required();
  count->add_flag("--list", list, "Print every base found");

  // density
  auto* density = app.add_subcommand("density", "Density constant and prime-count estimates");
  unsigned density_lambda = 0;
  std::uint64_t big_k = DensityParams{}.K;
  bool table1 = false;
  unsigned max_lambda = 7;
  std::string gamma_name = "identity";
  density->add_option("--lambda", density_lambda, "Exponent 2^lambda")->check(CLI::Range(1U, 16U));
  density->add_option("--K", big_k, "Truncation of the density products")->check(CLI::PositiveNumber);
  density->add_flag("--table1", table1, "Actual counts and estimates for lambda = 2..max-lambda");
  density->add_option("--max-lambda", max_lambda, "Last lambda of --table1")->check(CLI::Range(2U, 10U));
  density->add_option("--gamma", gamma_name, "identity, log or square");

  // cost
  auto* cost = app.add_subcommand("cost", "Expensive-multiplication counts and packed sizes per prime");
  std::string cost_n, primes_file, profile_file, eta_rule = "table";
  cost->add_option("--n", cost_n, "Input size in bits (power of two, decimal or 2^k)")->required();
  cost->add_option("--primes", primes_file, "Prime list file")->required();
  cost->add_option("--profile", profile_file, "Timing profile file");
  cost->add_option("--eta-rule", eta_rule, "table or strict")->check(CLI::IsMember({"table", "strict"}));

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Print the multiplication plan for an input size");
  std::string plan_n;
  PlanOptions plan_opts;
  plan_cmd->add_option("--n", plan_n, "Input size in bits")->required();
  plan_opts.attach(plan_cmd);

  // selfcheck
  auto* self = app.add_subcommand("selfcheck", "Compare every kernel against the reference oracles");
  SelfcheckOptions self_opts;
  self->add_option("--samples", self_opts.field_samples, "Random field samples");
  self->add_option("--pairs", self_opts.multiply_pairs, "Integer pairs per plan");
  self->add_option("--seed", self_opts.seed, "Random seed");

  // bench
  auto* bench = app.add_subcommand("bench", "Instrumented counters and wall time of repeated products");
  std::string bench_n;
  unsigned reps = 1;
  std::uint64_t bench_seed = 1;
  PlanOptions bench_plan;
  bench->add_option("--n", bench_n, "Operand size in bits")->required();
  bench->add_option("--reps", reps, "Repetitions")->check(CLI::Range(1U, 1000000U));
  bench->add_option("--seed", bench_seed, "Random seed");
  bench_plan.attach(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  const Format format = format_name == "records" ? Format::kRecords : Format::kText;

  try {
    if (mul->parsed()) {
      const BigUint a = BigUint::from_hex(read_file(file_a));
      const BigUint b = BigUint::from_hex(read_file(file_b));
      MultiplyPlan plan = plan_file.empty()
                              ? precompute(std::max(a.bit_length(), b.bit_length()), mul_plan.config())
                              : parse_plan(read_file(plan_file), mul_plan.config());
      const BigUint product = multiply(a, b, plan);
      if (check) {
        const ref::BigNat expect =
            ref::schoolbook_mul(ref::BigNat::from_hex(a.to_hex()), ref::BigNat::from_hex(b.to_hex()));
        if (expect.to_hex() != product.to_hex()) {
          err << "check failed: product differs from schoolbook multiplication\n";
          return 1;
        }
      }
      out << product.to_hex() << '\n';
    } else if (search->parsed()) {
      const std::uint64_t r = smallest_gfp_with_bits(search_lambda, min_bits);
      const GfpParams params = make_params(r, search_lambda);
      out << "r=" << r << " lambda=" << search_lambda << " p=" << gfp_name(r, search_lambda)
          << " bits=" << params.p_bits << '\n';
    } else if (count->parsed()) {
      const SearchWindow window{count_lambda, parse_size(lo_text), parse_size(hi_text)};
      const auto found = list_gfp(window, jobs);
      if (list) {
        for (std::uint64_t r : found) out << "r=" << r << '\n';
      }
      out << "lambda=" << count_lambda << " lo=" << window.lo << " hi=" << window.hi << " count=" << found.size()
          << '\n';
    } else if (density->parsed()) {
      const GammaShape gamma = parse_gamma(gamma_name);
      std::vector<unsigned> lambdas;
      if (table1) {
        for (unsigned l = 2; l <= max_lambda; ++l) lambdas.push_back(l);
      } else if (density_lambda != 0) {
        lambdas.push_back(density_lambda);
      } else {
        err << "usage error: density needs --lambda or --table1\n";
        return 2;
      }
      if (format == Format::kText) {
        out << std::left << std::setw(7) << "lambda" << std::setw(12) << "C_lambda" << std::setw(11) << "rel_2K"
            << std::setw(10) << "X=2^l" << std::setw(8) << "actual" << std::setw(10) << "estimate" << std::setw(10)
            << "X=2^2l" << std::setw(8) << "actual" << "estimate\n";
      }
      for (unsigned l : lambdas) {
        const DensityParams dp{l, big_k, gamma};
        const CLambdaReport c = c_lambda_report(dp, jobs);
        const std::uint64_t g = gamma_value(l, gamma);
        const std::uint64_t x1 = std::uint64_t{1} << g;
        const std::uint64_t x2 = std::uint64_t{1} << (2 * g);
        const std::uint64_t n1 = count_gfp(SearchWindow::around(l, x1), jobs);
        const std::uint64_t n2 = count_gfp(SearchWindow::around(l, x2), jobs);
        const double e1 = delta_closed(static_cast<double>(x1), l, c.value);
        const double e2 = delta_closed(static_cast<double>(x2), l, c.value);
        if (format == Format::kRecords) {
          out << std::setprecision(10) << "lambda=" << l << " K=" << big_k << " c_lambda=" << c.value
              << " c_lambda_2k=" << c.value_2k << " rel_change=" << c.rel_change << " x1=" << x1
              << " actual1=" << n1 << " estimate1=" << e1 << " x2=" << x2 << " actual2=" << n2
              << " estimate2=" << e2 << '\n';
        } else {
          out << std::fixed << std::setw(7) << l << std::setprecision(6) << std::setw(12) << c.value
              << std::scientific << std::setprecision(2) << std::setw(11) << c.rel_change << std::fixed
              << std::setprecision(2) << std::setw(10) << x1 << std::setw(8) << n1 << std::setw(10) << e1
              << std::setw(10) << x2 << std::setw(8) << n2 << e2 << '\n';
          out.unsetf(std::ios::floatfield);
        }
      }
    } else if (cost->parsed()) {
      const std::uint64_t n = parse_size(cost_n);
      std::optional<TimingProfile> profile;
      if (!profile_file.empty()) profile = TimingProfile::parse(read_file(profile_file));
      const auto rows = table_report(n, parse_prime_list(read_file(primes_file)), profile,
                                     eta_rule == "strict" ? EtaRule::kStrict : EtaRule::kTable);
      out << (format == Format::kRecords ? format_report_records(rows) : format_report_text(rows));
    } else if (plan_cmd->parsed()) {
      PlanConfig config = plan_opts.config();
      config.build_tables = false;
      const MultiplyPlan plan = precompute(parse_size(plan_n), config);
      out << serialize_plan(plan);
      if (plan.depth() == 0) err << "input below threshold: plain multiplication, no levels\n";
    } else if (self->parsed()) {
      bool all = true;
      for (const CheckResult& r : run_selfcheck(self_opts)) {
        all = all && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases;
        if (!r.passed) out << " first_failure=\"" << r.detail << '"';
        out << '\n';
      }
      return all ? 0 : 1;
    } else if (bench->parsed()) {
      const std::uint64_t n = parse_size(bench_n);
      const MultiplyPlan plan = precompute(n, bench_plan.config());
      std::mt19937_64 rng(bench_seed);
      const BigUint a = BigUint::random_bits(n, rng);
      const BigUint b = BigUint::random_bits(n, rng);
      std::vector<OpCounters> counters;
      const auto start = std::chrono::steady_clock::now();
      for (unsigned i = 0; i < reps; ++i) (void)multiply(a, b, plan, &counters);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << serialize_plan(plan);
      print_counters(out, counters);
      if (!plan.levels.empty()) {
        out << "model_top_count="
            << full_multiply_count(plan.levels[0].big_n, plan.levels[0].params.lambda) << '\n';
      }
      out << "# timing reps=" << reps << " wall_seconds=" << seconds << " per_product=" << seconds / reps << '\n';
    }
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gfpmul::tools

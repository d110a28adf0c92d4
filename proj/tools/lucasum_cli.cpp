// Copyright 2026 The lucasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lucasum: filtered binomial sums, Lucas sequences and the congruence sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lucasum/lucasum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_a(std::int64_t a) {
  if (a == 0 || a == 1 || a == -1) {
    throw UsageError("--a must not be 0, 1 or -1 (standing assumption a != 0, +-1), got " + std::to_string(a));
  }
}

struct SumArgs {
  std::int64_t n = 0, m = 0, r = 0, a = 0;
  std::string method = "direct";
};

int run_sum(const SumArgs& args) {
  check_a(args.a);
  if (args.n < 1 || args.m < 1) throw UsageError("--n and --m must be >= 1");
  const lucasum::BracketQuery q(args.n, args.m, args.r, args.a);
  if (args.method == "direct") {
    std::cout << lucasum::bracket_direct(q) << "\n";
  } else if (args.method == "via-w") {
    std::cout << lucasum::bracket_via_w(q) << "\n";
  } else {
    const auto direct = lucasum::bracket_direct(q);
    const auto via_w = lucasum::bracket_via_w(q);
    std::cout << "direct=" << direct << " via_w=" << via_w << " match=" << (direct == via_w ? "true" : "false")
              << "\n";
  }
  return kExitOk;
}

struct LucasArgs {
  std::int64_t A = 0, B = 0, p = 0;
  std::uint64_t index = 0;
  std::optional<std::int64_t> modulus;
};

int run_lucas(const LucasArgs& args) {
  const lucasum::LucasParams params(args.A, args.B);
  if (args.modulus) {
    const auto pair = lucasum::lucas_pair_mod(params, args.index, *args.modulus);
    std::cout << "u=" << pair.u << " v=" << pair.v << "\n";
  } else {
    const auto pair = lucasum::lucas_pair(params, args.index);
    std::cout << "u=" << pair.u << " v=" << pair.v << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::optional<std::string> id;
  std::int64_t prime_min = 3, prime_max = 200;
  std::optional<std::int64_t> a_min, a_max;
  std::int64_t ab_min = -4, ab_max = 4;
  std::string format = "table";
  unsigned parallelism = 1;
  std::string w_route = "recurrence";
};

int run_verify(const VerifyArgs& args) {
  namespace v = lucasum::verifier;
  if (args.prime_min > args.prime_max) throw UsageError("--prime-min must not exceed --prime-max");
  if (args.ab_min > args.ab_max) throw UsageError("--ab-min must not exceed --ab-max");
  v::SweepSpec spec;
  spec.prime_min = args.prime_min;
  spec.prime_max = args.prime_max;
  spec.ab_min = args.ab_min;
  spec.ab_max = args.ab_max;
  if (args.a_min || args.a_max) {
    const std::int64_t lo = args.a_min.value_or(-6), hi = args.a_max.value_or(6);
    if (lo > hi) throw UsageError("--a-min must not exceed --a-max");
    spec.a_values.clear();
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (a < -1 || a > 1) spec.a_values.push_back(a);
    }
    if (spec.a_values.empty()) throw UsageError("a range contains no value other than 0, +-1");
  }
  v::VerifyOptions options;
  options.parallelism = args.parallelism;
  options.eval.w_route = args.w_route == "closed-form" ? lucasum::WRoute::closed_form : lucasum::WRoute::recurrence;

  std::vector<v::VerificationReport> reports;
  if (args.id) {
    if (v::find_identity(*args.id) == nullptr) throw UsageError("unknown identity id: " + *args.id);
    reports.push_back(v::verify(*args.id, spec, options));
  } else {
    for (const auto& entry : v::registry()) reports.push_back(v::verify(entry, spec, options));
  }
  const auto format = args.format == "json-lines" ? v::ReportFormat::json_lines : v::ReportFormat::table;
  std::cout << v::render_reports(reports, format);
  return v::any_failed(reports) ? kExitFailed : kExitOk;
}

int run_list() {
  for (const auto& entry : lucasum::verifier::registry()) {
    std::cout << entry.id << " | " << entry.anchor << " | " << lucasum::verifier::to_string(entry.params_kind)
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filtered binomial sums, Lucas sequences and congruence verification"};
  app.require_subcommand(1);

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "Print sum_{k = r (mod m)} C(n,k) a^k");
  sum_cmd->add_option("--n", sum.n)->required();
  sum_cmd->add_option("--m", sum.m)->required();
  sum_cmd->add_option("--r", sum.r)->required();
  sum_cmd->add_option("--a", sum.a)->required();
  sum_cmd->add_option("--method", sum.method)->check(CLI::IsMember({"direct", "via-w", "both"}));

  std::int64_t poly_m = 0, poly_a = 0;
  auto* apoly_cmd = app.add_subcommand("apoly", "Print the coefficients of A_m(x), lowest degree first");
  apoly_cmd->add_option("--m", poly_m)->required()->check(CLI::PositiveNumber);
  apoly_cmd->add_option("--a", poly_a)->required();
  auto* cyclo_cmd = app.add_subcommand("cyclotomic", "Print the coefficients of Phi_m(x), lowest degree first");
  cyclo_cmd->add_option("--m", poly_m)->required()->check(CLI::PositiveNumber);

  LucasArgs lucas;
  auto* lucas_cmd = app.add_subcommand("lucas", "Print u_n(A,B) and v_n(A,B), optionally reduced");
  lucas_cmd->add_option("--A", lucas.A)->required();
  lucas_cmd->add_option("--B", lucas.B)->required();
  lucas_cmd->add_option("--index", lucas.index)->required();
  lucas_cmd->add_option("--modulus", lucas.modulus)->check(CLI::Range(std::int64_t{2}, INT64_C(3037000499)));
  auto* quot_cmd = app.add_subcommand("quotient", "Print the Lucas quotient u_index(A,B)/p mod p");
  quot_cmd->add_option("--A", lucas.A)->required();
  quot_cmd->add_option("--B", lucas.B)->required();
  quot_cmd->add_option("--p", lucas.p)->required();
  quot_cmd->add_option("--index", lucas.index)->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep registry identities over primes and parameters");
  verify_cmd->add_option("--id", verify.id, "Registry id (default: all)");
  verify_cmd->add_option("--prime-min", verify.prime_min);
  verify_cmd->add_option("--prime-max", verify.prime_max)->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 24));
  verify_cmd->add_option("--a-min", verify.a_min);
  verify_cmd->add_option("--a-max", verify.a_max);
  verify_cmd->add_option("--ab-min", verify.ab_min);
  verify_cmd->add_option("--ab-max", verify.ab_max);
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"table", "json-lines"}));
  verify_cmd->add_option("--parallelism", verify.parallelism)->check(CLI::Range(1U, 256U));
  verify_cmd->add_option("--w-route", verify.w_route)->check(CLI::IsMember({"recurrence", "closed-form"}));

  auto* list_cmd = app.add_subcommand("list", "List registry identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sum_cmd->parsed()) return run_sum(sum);
    if (apoly_cmd->parsed()) {
      check_a(poly_a);
      std::cout << lucasum::a_poly(poly_m, poly_a).to_string() << "\n";
      return kExitOk;
    }
    if (cyclo_cmd->parsed()) {
      std::cout << lucasum::cyclotomic_poly(poly_m).to_string() << "\n";
      return kExitOk;
    }
    if (lucas_cmd->parsed()) return run_lucas(lucas);
    if (quot_cmd->parsed()) {
      std::cout << lucasum::lucas_quotient(lucasum::LucasParams(lucas.A, lucas.B), lucas.p, lucas.index) << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) return run_verify(verify);
    if (list_cmd->parsed()) return run_list();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lucasum::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

// Copyright 2026 The fpgrid Authors
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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fpgrid/hermitian.hpp"
#include "fpgrid/modring.hpp"
#include "fpgrid/order.hpp"
#include "fpgrid/text.hpp"
#include "fpgrid/verify.hpp"

namespace {

// Exit codes, part of the documented interface:
//   0 success / suite passed, 1 suite violations, 2 usage or input error,
//   3 prime search cap exhausted, 4 refused as infeasible without --force.
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExhausted = 3;
constexpr int kExitInfeasible = 4;

fpgrid::Modulus modulus_from(bool has_p, std::uint64_t p, bool has_m, std::uint64_t m) {
    if (has_p == has_m)
        throw std::invalid_argument("exactly one of --p and --m is required");
    return has_p ? fpgrid::Modulus::prime_3mod4(p) : fpgrid::Modulus::general(m);
}

int cmd_norm(const fpgrid::Modulus& mod, const std::string& value) {
    if (value.find(',') != std::string::npos) {
        fpgrid::HVector v(fpgrid::parse_vector(value, mod));
        std::cout << fpgrid::vector_norm(v) << "\n";
    } else {
        std::cout << fpgrid::parse_element(value, mod).manhattan_norm() << "\n";
    }
    return 0;
}

int cmd_compare(std::uint64_t p, std::uint64_t x, std::uint64_t y) {
    fpgrid::Modulus mod = fpgrid::Modulus::prime_3mod4(p);
    switch (fpgrid::tournament_compare(x, y, mod)) {
    case fpgrid::TournamentVerdict::less:
        std::cout << x << " <_p " << y << "\n";
        break;
    case fpgrid::TournamentVerdict::greater:
        std::cout << y << " <_p " << x << "\n";
        break;
    case fpgrid::TournamentVerdict::equal:
        std::cout << x << " = " << y << "\n";
        break;
    }
    return 0;
}

int cmd_find_prime(std::uint64_t k, std::uint64_t cap, const std::string& format) {
    auto cert = fpgrid::find_kustaanheimo_prime(k, cap);
    if (!cert) {
        std::cerr << "error: no prime with 1.." << k << " all residues at or below cap " << cap
                  << "\n";
        return kExitCapExhausted;
    }
    if (format == "json")
        std::cout << cert->to_json_text() << "\n";
    else
        std::cout << cert->to_text();
    return 0;
}

int cmd_verify(const std::string& suite, const fpgrid::SuiteOptions& opts,
               const std::string& report_path) {
    auto reports = fpgrid::run_suite(suite, opts);
    std::cout << fpgrid::render_reports(reports);
    if (!report_path.empty()) fpgrid::write_reports(report_path, reports);
    for (const auto& report : reports)
        if (!report.passed()) return kExitViolations;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid norms, residue tournaments, and verification suites over F_p and F_p^2"};
    app.require_subcommand(1);

    std::uint64_t p = 0, m = 0, k = 0, n = 0;

    auto* norm = app.add_subcommand("norm", "Print the Manhattan norm of an element or vector");
    auto* norm_p = norm->add_option("--p", p, "prime modulus, 3 mod 4");
    auto* norm_m = norm->add_option("--m", m, "general ring modulus");
    std::string norm_value;
    norm->add_option("value", norm_value, "element 'a+bi' or comma-separated vector")->required();

    auto* compare = app.add_subcommand("compare", "Compare two elements in the residue tournament");
    compare->add_option("--p", p, "prime modulus, 3 mod 4")->required();
    std::uint64_t cmp_x = 0, cmp_y = 0;
    compare->add_option("x", cmp_x, "first element, in [0, p)")->required();
    compare->add_option("y", cmp_y, "second element, in [0, p)")->required();

    auto* find_prime =
        app.add_subcommand("find-prime", "Find the smallest prime with 1..k all residues");
    find_prime->add_option("--k", k, "residue range to certify")->required();
    std::uint64_t cap = fpgrid::SuiteOptions{}.cap;
    find_prime->add_option("--cap", cap, "search bound");
    std::string format = "text";
    find_prime->add_option("--format", format, "certificate format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "one of the suite names, or 'all'")->required();
    auto* verify_p = verify->add_option("--p", p, "prime modulus, 3 mod 4");
    auto* verify_m = verify->add_option("--m", m, "general ring modulus");
    auto* verify_k = verify->add_option("--k", k, "norm radius / residue range");
    auto* verify_n = verify->add_option("--n", n, "vector length");
    std::string kind_text;
    auto* verify_kind = verify->add_option("--kind", kind_text, "counterexample family");
    fpgrid::SuiteOptions opts;
    verify->add_option("--cap", opts.cap, "prime search bound");
    verify->add_option("--seed", opts.seed, "seed for sampling suites");
    verify->add_flag("--force", opts.force, "run past the case-count guard");
    std::string report_path;
    verify->add_option("--report", report_path, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*norm)
            return cmd_norm(modulus_from(norm_p->count() > 0, p, norm_m->count() > 0, m),
                            norm_value);
        if (*compare) return cmd_compare(p, cmp_x, cmp_y);
        if (*find_prime) return cmd_find_prime(k, cap, format);
        if (*verify) {
            if (*verify_p) opts.p = p;
            if (*verify_m) opts.m = m;
            if (*verify_k) opts.k = k;
            if (*verify_n) opts.n = n;
            if (*verify_kind) {
                auto kind = fpgrid::counterexample_kind_from_text(kind_text);
                if (!kind)
                    throw std::invalid_argument("unknown counterexample kind '" + kind_text + "'");
                opts.kind = kind;
            }
            return cmd_verify(suite, opts, report_path);
        }
    } catch (const fpgrid::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const fpgrid::CapExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExhausted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

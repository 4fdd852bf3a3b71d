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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fpgrid/verify.hpp"

using fpgrid::CapExhaustedError;
using fpgrid::CounterexampleKind;
using fpgrid::InfeasibleError;
using fpgrid::SuiteOptions;
using fpgrid::SuiteReport;
using fpgrid::run_suite;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x66706772; // 1718642546

std::string strip_wall(const std::string& rendered) {
    std::istringstream in(rendered);
    std::string out, line;
    while (std::getline(in, line)) {
        auto pos = line.find(" wall_ms=");
        out += pos == std::string::npos ? line : line.substr(0, pos);
        out += '\n';
    }
    return out;
}

} // namespace

TEST_CASE("suite names are stable") {
    const std::vector<std::string> expected = {
        "triangle", "submult",    "lemma",      "quotient",       "cpd",
        "cauchy-schwarz", "special-2d", "inner-norm", "counterexample"};
    CHECK(fpgrid::suite_names() == expected);
}

TEST_CASE("the full default battery passes, deterministically") {
    auto reports = run_suite("all", SuiteOptions{});
    std::set<std::string> seen;
    for (const SuiteReport& r : reports) {
        CAPTURE(r.suite);
        CAPTURE(r.params);
        REQUIRE(r.passed());
        REQUIRE(r.cases > 0);
        seen.insert(r.suite);
    }
    for (const std::string& name : fpgrid::suite_names()) REQUIRE(seen.count(name) == 1);

    // "all" ignores point parameters; only cap, seed, and force pass through.
    SuiteOptions junk;
    junk.p = 331;
    junk.m = 6;
    junk.k = 9;
    junk.n = 7;
    junk.kind = CounterexampleKind::real_n3;
    auto again = run_suite("all", junk);
    CHECK(strip_wall(fpgrid::render_reports(again)) ==
          strip_wall(fpgrid::render_reports(reports)));
}

TEST_CASE("triangle and submult sweep ordered pairs over the modulus battery") {
    auto reports = run_suite("triangle", SuiteOptions{});
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].params == "p=3");
    CHECK(reports[1].params == "p=7");
    CHECK(reports[2].params == "p=11");
    CHECK(reports[0].cases == 81);
    CHECK(reports[1].cases == 2401);
    CHECK(reports[2].cases == 14641);
    for (const SuiteReport& r : reports) CHECK(r.passed());

    SuiteOptions ring;
    ring.m = 4;
    auto composite = run_suite("submult", ring);
    REQUIRE(composite.size() == 1);
    CHECK(composite[0].params == "m=4");
    CHECK(composite[0].cases == 256);
    CHECK(composite[0].passed());
}

TEST_CASE("quotient runs its fixed battery as one entry") {
    auto reports = run_suite("quotient", SuiteOptions{});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].params.empty());
    // 34 cyclic divisor instances + 3 diagonal tori + 2 Gaussian grids,
    // two checks each.
    CHECK(reports[0].cases == 78);
    CHECK(reports[0].passed());
}

TEST_CASE("lemma entries embed the sampling seed") {
    auto reports = run_suite("lemma", SuiteOptions{});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].params == "p=3 seed=" + std::to_string(kDefaultSeed));
    CHECK(reports[1].params == "p=7 seed=" + std::to_string(kDefaultSeed));
    for (const SuiteReport& r : reports) CHECK(r.passed());

    SuiteOptions big;
    big.p = 11;
    big.seed = 9;
    auto eleven = run_suite("lemma", big);
    REQUIRE(eleven.size() == 1);
    CHECK(eleven[0].params == "p=11 seed=9");
    CHECK(eleven[0].passed());
}

TEST_CASE("cpd derives its primes and checks ball products") {
    auto reports = run_suite("cpd", SuiteOptions{});
    REQUIRE(reports.size() == 9);
    CHECK(reports[0].params == "k=1 p=7 n=1");
    CHECK(reports[5].params == "k=2 p=1559 n=1");
    const std::uint64_t radius_one_cases[] = {5, 9, 13, 17, 21};
    for (std::size_t j = 0; j < 5; ++j) CHECK(reports[j].cases == radius_one_cases[j]);
    for (const SuiteReport& r : reports) CHECK(r.passed());
}

TEST_CASE("cpd at a wrong prime reports non-residue products, truncated") {
    SuiteOptions opts;
    opts.k = 2;
    opts.p = 3;
    auto reports = run_suite("cpd", opts);
    REQUIRE(reports.size() == 4); // n = 1..4

    REQUIRE(reports[0].violation_count == 4);
    CHECK(reports[0].violations[0] ==
          "violation suite=cpd k=2 p=3 n=1 v=1+1i vv=2 reason=product-not-a-residue");
    CHECK_FALSE(reports[0].passed());

    const SuiteReport& worst = reports[3];
    CHECK(worst.violation_count > 100);
    CHECK(worst.violations.size() == 100);
    CHECK(fpgrid::render_reports({worst}).find("violations-truncated-to=100") !=
          std::string::npos);
}

TEST_CASE("violation lines replay") {
    SuiteOptions opts;
    opts.k = 2;
    opts.p = 3;
    auto reports = run_suite("cpd", opts);
    const std::string genuine = reports[0].violations[0];
    CHECK(fpgrid::reverify_violation(genuine));

    std::string tampered = genuine;
    tampered.replace(tampered.find("vv=2"), 4, "vv=1");
    CHECK_FALSE(fpgrid::reverify_violation(tampered));

    // Well formed but never produced: the triangle inequality holds at p = 3.
    CHECK_FALSE(fpgrid::reverify_violation("violation suite=triangle p=3 u=0 z=0"));

    CHECK_THROWS_AS(fpgrid::reverify_violation(""), std::invalid_argument);
    CHECK_THROWS_AS(fpgrid::reverify_violation("info suite=cpd k=2"), std::invalid_argument);
    CHECK_THROWS_AS(fpgrid::reverify_violation("violation k=2 p=3"), std::invalid_argument);
    CHECK_THROWS_AS(fpgrid::reverify_violation("violation suite=cpd k=x p=3"),
                    std::invalid_argument);
    CHECK_THROWS_AS(fpgrid::reverify_violation("violation suite=counterexample kind=bogus"),
                    std::invalid_argument);
    CHECK_THROWS_AS(fpgrid::reverify_violation("violation suite=nope p=3"),
                    std::invalid_argument);
}

TEST_CASE("cauchy-schwarz passes at the derived prime") {
    auto reports = run_suite("cauchy-schwarz", SuiteOptions{});
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].params == "k=1 p=23 n=2");
    CHECK(reports[0].cases == 81);   // (1+4n)^2 ordered pairs
    CHECK(reports[1].cases == 169);
    CHECK(reports[2].cases == 289);
    for (const SuiteReport& r : reports) CHECK(r.passed());
}

TEST_CASE("counterexample entries pass exactly when the family defeats the bound") {
    auto reports = run_suite("counterexample", SuiteOptions{});
    REQUIRE(reports.size() == 6);
    CHECK(reports[0].params == "p=3 n=2 kind=complex-n2");
    CHECK(reports[1].params == "p=3 n=3 kind=real-n3");
    for (const SuiteReport& r : reports) {
        CAPTURE(r.params);
        REQUIRE(r.passed());
        REQUIRE(r.cases == 1);
        REQUIRE(r.info.size() == 2);
    }
    CHECK(reports[0].info[1] ==
          "info suite=counterexample p=3 n=2 kind=complex-n2 LHS=0 RHS=-1 (non-residue)");

    SuiteOptions one;
    one.p = 7;
    one.kind = CounterexampleKind::real_n3;
    one.n = 5;
    auto padded = run_suite("counterexample", one);
    REQUIRE(padded.size() == 1);
    CHECK(padded[0].params == "p=7 n=5 kind=real-n3");
    CHECK(padded[0].passed());
}

TEST_CASE("inner-norm picks its mode from the pair budget") {
    SuiteOptions small;
    small.p = 3;
    small.n = 1;
    auto exhaustive = run_suite("inner-norm", small);
    REQUIRE(exhaustive.size() == 1);
    CHECK(exhaustive[0].params == "p=3 n=1 mode=exhaustive");
    CHECK(exhaustive[0].cases == 81);

    SuiteOptions ring;
    ring.m = 4;
    ring.n = 1;
    auto composite = run_suite("inner-norm", ring);
    CHECK(composite[0].params == "m=4 n=1 mode=exhaustive");
    CHECK(composite[0].cases == 256);
    CHECK(composite[0].passed());

    SuiteOptions big;
    big.p = 7;
    big.n = 3;
    auto sampled = run_suite("inner-norm", big);
    CHECK(sampled[0].params == "p=7 n=3 mode=random seed=" + std::to_string(kDefaultSeed));
    CHECK(sampled[0].cases == 10000);
    CHECK(sampled[0].passed());

    big.seed = 1;
    auto reseeded = run_suite("inner-norm", big);
    CHECK(reseeded[0].params == "p=7 n=3 mode=random seed=1");
    CHECK(reseeded[0].passed());
}

TEST_CASE("case guards and search caps") {
    SuiteOptions wide;
    wide.p = 331;
    try {
        run_suite("triangle", wide);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.estimated_cases == 12003612721ULL);
        CHECK(std::string(e.what()).find("guard") != std::string::npos);
    }

    SuiteOptions deep;
    deep.k = 6;
    try {
        run_suite("cauchy-schwarz", deep);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.estimated_cases == 186624); // 4k^6 residues to certify
    }
    deep.force = true;
    deep.cap = 50;
    CHECK_THROWS_AS(run_suite("cauchy-schwarz", deep), CapExhaustedError);

    SuiteOptions starved;
    starved.k = 2;
    starved.cap = 5;
    CHECK_THROWS_AS(run_suite("cpd", starved), CapExhaustedError);
    SuiteOptions all_starved;
    all_starved.cap = 5;
    CHECK_THROWS_AS(run_suite("all", all_starved), CapExhaustedError);
}

TEST_CASE("invalid names and parameter combinations are rejected") {
    SuiteOptions none;
    CHECK_THROWS_AS(run_suite("nope", none), std::invalid_argument);

    auto rejects = [](const char* suite, const SuiteOptions& opts) {
        CHECK_THROWS_AS(run_suite(suite, opts), std::invalid_argument);
    };
    SuiteOptions o;

    o = {}; o.k = 1;                rejects("triangle", o);
    o = {}; o.p = 3; o.m = 4;       rejects("triangle", o);
    o = {}; o.p = 3;                rejects("quotient", o);
    o = {}; o.m = 4;                rejects("lemma", o);
    o = {}; o.p = 23;               rejects("lemma", o);
    o = {}; o.m = 4;                rejects("cpd", o);
    o = {}; o.p = 7;                rejects("cpd", o); // p requires an explicit k
    o = {}; o.k = 0;                rejects("cpd", o);
    o = {}; o.k = 1; o.p = 7; o.n = 0; rejects("cpd", o);
    o = {}; o.m = 4;                rejects("cauchy-schwarz", o);
    o = {}; o.k = 0;                rejects("cauchy-schwarz", o);
    o = {}; o.k = 1; o.p = 23; o.n = 0; rejects("cauchy-schwarz", o);
    o = {}; o.n = 2;                rejects("special-2d", o);
    o = {}; o.k = 1;                rejects("inner-norm", o);
    o = {}; o.n = 2;                rejects("inner-norm", o); // n needs a modulus
    o = {}; o.p = 3; o.m = 4;       rejects("inner-norm", o);
    o = {}; o.p = 3; o.n = 0;       rejects("inner-norm", o);
    o = {}; o.m = 4;                rejects("counterexample", o);
    o = {}; o.k = 1;                rejects("counterexample", o);
}

TEST_CASE("balanced residue rendering") {
    CHECK(fpgrid::balanced_residue_text(0, 7) == "0");
    CHECK(fpgrid::balanced_residue_text(1, 7) == "1");
    CHECK(fpgrid::balanced_residue_text(3, 7) == "3");
    CHECK(fpgrid::balanced_residue_text(4, 7) == "-3");
    CHECK(fpgrid::balanced_residue_text(6, 7) == "-1");
    CHECK(fpgrid::balanced_residue_text(2, 4) == "2");
    CHECK(fpgrid::balanced_residue_text(3, 4) == "-1");
    CHECK(fpgrid::balanced_residue_text(0, 3) == "0");
}

TEST_CASE("report rendering and persistence") {
    SuiteReport r{"x",
                  "p=3",
                  5,
                  150,
                  {"violation suite=x p=3 a=1"},
                  {"info suite=x p=3 b=2"},
                  7};
    CHECK(fpgrid::render_reports({r}) ==
          "suite=x p=3 cases=5 violations=150 result=fail wall_ms=7\n"
          "violation suite=x p=3 a=1\n"
          "info suite=x violations-truncated-to=1\n"
          "info suite=x p=3 b=2\n");

    SuiteOptions opts;
    opts.p = 3;
    auto reports = run_suite("triangle", opts);
    auto path = std::filesystem::temp_directory_path() / "fpgrid_test_report.txt";
    fpgrid::write_reports(path.string(), reports);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == fpgrid::render_reports(reports));
    std::filesystem::remove(path);

    CHECK_THROWS_AS(fpgrid::write_reports("/nonexistent_dir_fpgrid/report.txt", reports),
                    std::runtime_error);
}

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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpgrid/hermitian.hpp"

namespace fpgrid {

/// Parameters accepted by the verification suites. Fields left empty fall
/// back to each suite's default battery (see docs/FORMATS.md). The seed
/// only affects suites that sample; its default is fixed so that repeated
/// runs are reproducible.
struct SuiteOptions {
    std::optional<std::uint64_t> p; // prime modulus, 3 mod 4
    std::optional<std::uint64_t> m; // general ring modulus
    std::optional<std::uint64_t> k; // norm radius / residue range parameter
    std::optional<std::uint64_t> n; // vector length
    std::optional<CounterexampleKind> kind;
    std::uint64_t cap = 100'000'000;  // prime search bound
    std::uint64_t seed = 0x66706772;  // "fpgr"
    bool force = false;               // run past the case-count guard
};

/// Outcome of one suite entry (one parameter point of a battery).
/// Violation and info entries are complete report lines; a suite passes
/// iff it recorded no violations. The counterexample suite records a
/// violation when the expected violation is NOT produced, so "pass" means
/// the family defeated the inequality as intended. Only the first 100
/// violation lines are retained; violation_count is always the full tally.
struct SuiteReport {
    std::string suite;
    std::string params; // "p=7 n=2", canonical key order, possibly empty
    std::uint64_t cases = 0;
    std::uint64_t violation_count = 0;
    std::vector<std::string> violations; // lines starting "violation suite=..."
    std::vector<std::string> info;       // lines starting "info suite=..."
    std::int64_t wall_ms = 0;
    bool passed() const { return violation_count == 0; }
};

/// A suite refused to run because the estimated case count exceeds the
/// guard (1e8) and force was not given.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, std::uint64_t estimated)
        : std::runtime_error(what), estimated_cases(estimated) {}
    std::uint64_t estimated_cases;
};

/// A required prime search exhausted its cap.
class CapExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The individual suite names; "all" additionally runs every one of these
/// with default parameters.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"). Returns one report per battery entry.
/// Throws std::invalid_argument for unknown suites or invalid parameter
/// combinations, InfeasibleError and CapExhaustedError as above.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts);

/// Canonical rendering: per report one record line
///   suite=<name> [<params>] cases=<N> violations=<N> result=<pass|fail> wall_ms=<ms>
/// followed by its violation lines, then its info lines. Byte-identical
/// across runs except for the wall_ms field.
std::string render_reports(const std::vector<SuiteReport>& reports);

/// Writes render_reports(reports) to path; throws std::runtime_error on
/// I/O failure.
void write_reports(const std::string& path, const std::vector<SuiteReport>& reports);

/// Replays a "violation suite=..." line: re-runs the named suite with the
/// parameters embedded in the line and reports whether the identical line
/// is reproduced. False for well-formed lines that no longer reproduce;
/// throws std::invalid_argument on lines that do not parse.
bool reverify_violation(const std::string& line);

/// Signed rendering of a canonical residue: values above (m-1)/2 print as
/// their negative representative, so p-1 prints "-1".
std::string balanced_residue_text(std::uint64_t x, std::uint64_t m);

} // namespace fpgrid

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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpgrid/modring.hpp"

namespace fpgrid {

/// Euler's criterion: true iff x is a nonzero square mod p, decided by
/// x^((p-1)/2) == 1. Requires a prime modulus and x in [1, p); x == 0 is
/// neither a residue nor a non-residue and is rejected.
bool legendre_is_residue(std::uint64_t x, const Modulus& p);

/// Outcome of comparing x, y in the quadratic residue tournament on F_p:
/// x is below y exactly when y - x is a nonzero square. For p = 3 mod 4,
/// -1 is a non-residue, so exactly one of x < y, y < x holds when x != y.
enum class TournamentVerdict { less, greater, equal };

TournamentVerdict tournament_compare(std::uint64_t x, std::uint64_t y, const Modulus& p);

/// Witnessed claim that every r in {1..k} is a quadratic residue mod p,
/// which makes the tournament order agree with the natural integer order
/// on {0..k}.
struct KustaanheimoCertificate {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses; // (r, s) with s*s = r mod p

    /// Full re-check: p prime and 3 mod 4, k <= (p-1)/2, witnesses cover
    /// exactly 1..k in order, and every s*s = r (mod p).
    bool verify() const;

    /// Line-oriented record:
    ///   k=<k> p=<p>
    ///   sqrt(<r>)=<s>        (one line per r, ascending)
    std::string to_text() const;

    /// Same content as a JSON object {"k":..,"p":..,"witnesses":[{"r":..,"s":..},..]}.
    std::string to_json_text() const;

    /// Inverse of to_text(); throws std::invalid_argument on malformed input.
    static KustaanheimoCertificate parse_text(std::string_view text);

    friend bool operator==(const KustaanheimoCertificate&, const KustaanheimoCertificate&) = default;
};

/// Smallest prime p <= cap with p = 3 mod 4 and 1..k all quadratic
/// residues mod p, with square-root witnesses s = r^((p+1)/4) mod p.
/// Existence for unbounded search is a theorem; this search is bounded and
/// returns nullopt when the cap is exhausted. Requires k >= 1.
std::optional<KustaanheimoCertificate> find_kustaanheimo_prime(std::uint64_t k,
                                                               std::uint64_t cap = 100'000'000);

/// True iff the tournament order restricted to {0..k} is transitive.
/// Requires k <= (p-1)/2 (beyond that the restriction cannot be linear).
bool transitivity_check(const Modulus& p, std::uint64_t k);

/// True iff on {0..k} the tournament verdicts coincide with the natural
/// integer order. Implies transitivity_check(p, k).
bool matches_natural_order(const Modulus& p, std::uint64_t k);

} // namespace fpgrid

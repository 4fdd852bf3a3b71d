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

// Acceptance gate: twelve independently stated checks, one PASS/FAIL line
// each. Every comparison is exact (zero tolerance). Checks 1, 5, 8, and 12
// carry their own oracles in this file; the rest assert that the library's
// verification suites run their default batteries clean. Exits nonzero if
// any line fails.

#include <cstdint>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fpgrid/gaussian.hpp"
#include "fpgrid/hermitian.hpp"
#include "fpgrid/order.hpp"
#include "fpgrid/verify.hpp"

namespace {

using fpgrid::Fp2Elem;
using fpgrid::HVector;
using fpgrid::Modulus;

bool suites_clean(const std::vector<std::string>& names) {
    for (const std::string& name : names) {
        auto reports = fpgrid::run_suite(name, fpgrid::SuiteOptions{});
        if (reports.empty()) return false;
        for (const auto& r : reports)
            if (!r.passed()) return false;
    }
    return true;
}

// 1. Closed-form norms against breadth-first search on the graph whose
// edges are exactly the solutions of (z-u)^4 = 1, plus the Gaussian
// integer grid inside an 8-ball.
bool norms_match_bfs() {
    for (std::uint64_t p : {3ULL, 7ULL, 11ULL}) {
        Modulus mod = Modulus::prime_3mod4(p);
        std::vector<Fp2Elem> elems;
        for (std::uint64_t re = 0; re < p; ++re)
            for (std::uint64_t im = 0; im < p; ++im)
                elems.push_back(Fp2Elem(mod, static_cast<std::int64_t>(re),
                                        static_cast<std::int64_t>(im)));
        Fp2Elem one = Fp2Elem::one(mod);
        auto adjacent = [&](const Fp2Elem& z, const Fp2Elem& u) {
            Fp2Elem d = z - u;
            return d * d * d * d == one;
        };
        std::vector<std::int64_t> dist(elems.size(), -1);
        std::deque<std::size_t> queue{0}; // elems[0] is 0
        dist[0] = 0;
        while (!queue.empty()) {
            std::size_t at = queue.front();
            queue.pop_front();
            for (std::size_t next = 0; next < elems.size(); ++next)
                if (dist[next] < 0 && adjacent(elems[next], elems[at])) {
                    dist[next] = dist[at] + 1;
                    queue.push_back(next);
                }
        }
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (dist[j] < 0 ||
                static_cast<std::uint64_t>(dist[j]) != elems[j].manhattan_norm())
                return false;
    }

    // Z[i]: BFS over a [-10,10]^2 window; shortest grid paths between
    // points of the 8-ball never leave it.
    const int w = 10, side = 2 * w + 1;
    auto at = [&](int a, int b) { return (a + w) * side + (b + w); };
    std::vector<int> dist(side * side, -1);
    std::deque<std::pair<int, int>> queue{{0, 0}};
    dist[at(0, 0)] = 0;
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        const int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (auto [da, db] : steps) {
            int na = a + da, nb = b + db;
            if (na < -w || na > w || nb < -w || nb > w || dist[at(na, nb)] >= 0) continue;
            dist[at(na, nb)] = dist[at(a, b)] + 1;
            queue.push_back({na, nb});
        }
    }
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b)
            if (fpgrid::grid_norm(fpgrid::GaussianInt(a, b)) !=
                static_cast<std::uint64_t>(dist[at(a, b)]))
                return false;
    return true;
}

// 5. The prime finder against an independent scan: trial-division
// primality and residue sets built by squaring every unit.
bool finder_matches_independent_scan() {
    auto is_prime = [](std::uint64_t x) {
        if (x < 2) return false;
        for (std::uint64_t d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    auto covers = [](std::uint64_t p, std::uint64_t k) {
        std::set<std::uint64_t> squares;
        for (std::uint64_t s = 1; s < p; ++s) squares.insert(s * s % p);
        for (std::uint64_t r = 1; r <= k; ++r)
            if (!squares.count(r)) return false;
        return true;
    };
    const std::uint64_t expected[] = {3, 7, 23, 23};
    for (std::uint64_t k = 1; k <= 4; ++k) {
        std::uint64_t oracle = 0;
        for (std::uint64_t p = 3; oracle == 0; p += 2)
            if (p % 4 == 3 && is_prime(p) && covers(p, k)) oracle = p;
        if (oracle != expected[k - 1]) return false;
        auto cert = fpgrid::find_kustaanheimo_prime(k);
        if (!cert || cert->p != oracle || !cert->verify()) return false;
    }
    Modulus mod23 = Modulus::prime_3mod4(23);
    return fpgrid::transitivity_check(mod23, 4) && fpgrid::matches_natural_order(mod23, 4);
}

// 8. The product-difference form against the pairwise minor sum,
// exhaustively at p = 3 and on random samples at p = 7 and 23.
bool lagrange_identity_holds() {
    Modulus mod3 = Modulus::prime_3mod4(3);
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<HVector> vs;
        fpgrid::for_each_vector_of_norm_at_most(mod3, n, 2 * n,
                                                [&](const HVector& v) { vs.push_back(v); });
        for (const HVector& v : vs)
            for (const HVector& w : vs)
                if (fpgrid::cs_difference(v, w) != fpgrid::cs_difference_pair_sum(v, w))
                    return false;
    }
    std::mt19937_64 rng(0x616363ULL);
    for (std::uint64_t p : {7ULL, 23ULL}) {
        Modulus mod = Modulus::prime_3mod4(p);
        std::uniform_int_distribution<std::int64_t> comp(0, static_cast<std::int64_t>(p) - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            std::size_t n = 1 + rng() % 4;
            std::vector<Fp2Elem> a, b;
            for (std::size_t j = 0; j < n; ++j) {
                a.push_back(Fp2Elem(mod, comp(rng), comp(rng)));
                b.push_back(Fp2Elem(mod, comp(rng), comp(rng)));
            }
            HVector v(a), w(b);
            if (fpgrid::cs_difference(v, w) != fpgrid::cs_difference_pair_sum(v, w))
                return false;
        }
    }
    return true;
}

// 12. Trichotomy and antisymmetry over whole fields, and a strict 3-cycle
// witnessing non-transitivity for every battery prime above 3.
bool tournament_is_sane() {
    using fpgrid::TournamentVerdict;
    for (std::uint64_t p : {3ULL, 7ULL, 11ULL, 19ULL, 23ULL}) {
        Modulus mod = Modulus::prime_3mod4(p);
        for (std::uint64_t x = 0; x < p; ++x)
            for (std::uint64_t y = 0; y < p; ++y) {
                auto xy = fpgrid::tournament_compare(x, y, mod);
                auto yx = fpgrid::tournament_compare(y, x, mod);
                if (x == y) {
                    if (xy != TournamentVerdict::equal) return false;
                } else if (!((xy == TournamentVerdict::less && yx == TournamentVerdict::greater) ||
                             (xy == TournamentVerdict::greater && yx == TournamentVerdict::less)))
                    return false;
            }
        if (p == 3) continue;
        bool cycle = false;
        for (std::uint64_t a = 0; a < p && !cycle; ++a)
            for (std::uint64_t b = 0; b < p && !cycle; ++b)
                for (std::uint64_t c = 0; c < p && !cycle; ++c)
                    cycle = fpgrid::tournament_compare(a, b, mod) == TournamentVerdict::less &&
                            fpgrid::tournament_compare(b, c, mod) == TournamentVerdict::less &&
                            fpgrid::tournament_compare(c, a, mod) == TournamentVerdict::less;
        if (!cycle) return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<bool()> run;
    };
    const Criterion criteria[] = {
        {"closed-form norms match breadth-first search", norms_match_bfs},
        {"triangle and submultiplicative norm laws hold exhaustively",
         [] { return suites_clean({"triangle", "submult"}); }},
        {"representative sets realize the three-way distance equality",
         [] { return suites_clean({"lemma"}); }},
        {"graph quotients coincide with quotient-group Cayley graphs",
         [] { return suites_clean({"quotient"}); }},
        {"prime finder matches an independent residue scan", finder_matches_independent_scan},
        {"self products are conditionally positive definite in the ball",
         [] { return suites_clean({"cpd"}); }},
        {"two-sided comparison holds with equality iff proportional",
         [] { return suites_clean({"cauchy-schwarz"}); }},
        {"product difference equals the pairwise minor sum", lagrange_identity_holds},
        {"both explicit families defeat the two-sided comparison",
         [] { return suites_clean({"counterexample"}); }},
        {"two-component difference is the squared cross term",
         [] { return suites_clean({"special-2d"}); }},
        {"inner product norms are submultiplicative",
         [] { return suites_clean({"inner-norm"}); }},
        {"tournament is total, antisymmetric, and has 3-cycles", tournament_is_sane},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (error: ") + e.what() + ")";
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << ": " << index << ". " << c.title << note << "\n";
    }
    return failures == 0 ? 0 : 1;
}

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

#include "fpgrid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "fpgrid/cayley.hpp"
#include "fpgrid/order.hpp"
#include "fpgrid/text.hpp"

namespace fpgrid {

std::string balanced_residue_text(std::uint64_t x, std::uint64_t m) {
    if (x <= m / 2) return std::to_string(x);
    return "-" + std::to_string(m - x);
}

namespace {

constexpr std::uint64_t kCaseGuard = 100'000'000;
constexpr std::uint64_t kExhaustivePairLimit = 1'000'000;
constexpr std::uint64_t kRandomPairs = 10'000;
constexpr std::uint64_t kDeriveRangeLimit = 100'000;
constexpr std::size_t kRetainedViolations = 100;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    return r > ~0ULL ? ~0ULL : static_cast<std::uint64_t>(r);
}

void guard(std::uint64_t estimate, const SuiteOptions& opts, const std::string& what) {
    if (!opts.force && estimate > kCaseGuard)
        throw InfeasibleError("suite " + what + " estimates " + std::to_string(estimate) +
                                  " cases, above the " + std::to_string(kCaseGuard) +
                                  " guard; use force to run anyway",
                              estimate);
}

void reject(bool bad, const char* message) {
    if (bad) throw std::invalid_argument(message);
}

struct ParamSet {
    std::optional<std::uint64_t> k, p, m, n;
    std::optional<CounterexampleKind> kind;
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;

    std::string text() const {
        std::string out;
        auto put = [&](const char* key, const std::string& value) {
            if (!out.empty()) out += ' ';
            out += key;
            out += '=';
            out += value;
        };
        if (k) put("k", std::to_string(*k));
        if (p) put("p", std::to_string(*p));
        if (m) put("m", std::to_string(*m));
        if (n) put("n", std::to_string(*n));
        if (kind) put("kind", to_text(*kind));
        if (mode) put("mode", *mode);
        if (seed) put("seed", std::to_string(*seed));
        return out;
    }
};

// One suite entry under construction: accumulates cases, violations, info.
struct Entry {
    SuiteReport report;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::string prefix;

    Entry(const std::string& suite, const ParamSet& ps) {
        report.suite = suite;
        report.params = ps.text();
        prefix = "suite=" + suite + (report.params.empty() ? "" : " " + report.params);
    }
    void violation(const std::string& detail) {
        ++report.violation_count;
        if (report.violations.size() < kRetainedViolations)
            report.violations.push_back("violation " + prefix + " " + detail);
    }
    void note(const std::string& detail) { report.info.push_back("info " + prefix + " " + detail); }
    SuiteReport finish() {
        report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return report;
    }
};

std::vector<Fp2Elem> all_elements(const Modulus& mod) {
    std::vector<Fp2Elem> out;
    out.reserve(static_cast<std::size_t>(mod.value() * mod.value()));
    for (std::uint64_t re = 0; re < mod.value(); ++re)
        for (std::uint64_t im = 0; im < mod.value(); ++im)
            out.push_back(
                Fp2Elem(mod, static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)));
    return out;
}

std::vector<HVector> all_vectors(const Modulus& mod, std::size_t n) {
    std::uint64_t max_norm = static_cast<std::uint64_t>(n) * 2 * (mod.value() / 2);
    std::vector<HVector> out;
    for_each_vector_of_norm_at_most(mod, n, max_norm,
                                    [&](const HVector& v) { out.push_back(v); });
    return out;
}

HVector random_vector(const Modulus& mod, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> comp(0, mod.value() - 1);
    std::vector<Fp2Elem> parts;
    parts.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        parts.push_back(Fp2Elem(mod, static_cast<std::int64_t>(comp(rng)),
                                static_cast<std::int64_t>(comp(rng))));
    return HVector(std::move(parts));
}

// Moduli for the element-pair suites: one from the explicit flag, or the
// default prime battery.
std::vector<Modulus> ring_battery(const SuiteOptions& opts) {
    reject(opts.p && opts.m, "give either p or m, not both");
    if (opts.p) return {Modulus::prime_3mod4(*opts.p)};
    if (opts.m) return {Modulus::general(*opts.m)};
    return {Modulus::prime_3mod4(3), Modulus::prime_3mod4(7), Modulus::prime_3mod4(11)};
}

// --- triangle / submult -----------------------------------------------

std::vector<SuiteReport> run_pair_inequality(const std::string& suite, const SuiteOptions& opts) {
    reject(opts.k || opts.n || opts.kind.has_value(),
           "triangle/submult take only a modulus parameter");
    bool submult = suite == "submult";
    std::vector<SuiteReport> reports;
    for (const Modulus& mod : ring_battery(opts)) {
        ParamSet ps;
        (mod.is_field() ? ps.p : ps.m) = mod.value();
        std::uint64_t m2 = mod.value() * mod.value();
        guard(sat_mul(m2, m2), opts, suite);
        Entry entry(suite, ps);
        auto elems = all_elements(mod);
        for (const Fp2Elem& u : elems) {
            std::uint64_t nu = u.manhattan_norm();
            for (const Fp2Elem& z : elems) {
                ++entry.report.cases;
                std::uint64_t nz = z.manhattan_norm();
                if (submult) {
                    std::uint64_t np = (u * z).manhattan_norm();
                    if (np > nu * nz)
                        entry.violation("u=" + to_text(u) + " z=" + to_text(z) +
                                        " nu=" + std::to_string(nu) + " nz=" + std::to_string(nz) +
                                        " nprod=" + std::to_string(np));
                } else {
                    std::uint64_t ns = (u + z).manhattan_norm();
                    if (ns > nu + nz)
                        entry.violation("u=" + to_text(u) + " z=" + to_text(z) +
                                        " nu=" + std::to_string(nu) + " nz=" + std::to_string(nz) +
                                        " nsum=" + std::to_string(ns));
                }
            }
        }
        reports.push_back(entry.finish());
    }
    return reports;
}

// --- lemma --------------------------------------------------------------

std::string distance_text(std::int64_t d) {
    return d == kUnreachable ? "inf" : std::to_string(d);
}

SuiteReport run_lemma_entry(std::uint64_t p, const SuiteOptions& opts) {
    ParamSet ps;
    ps.p = p;
    ps.seed = opts.seed;
    Entry entry("lemma", ps);

    Modulus modp = Modulus::prime_3mod4(p);
    std::uint64_t M = 5 * p; // surrogate modulus; its radius-p ball matches the infinite grid
    auto group = FiniteGroup::gaussian_additive(M);
    auto cg = make_cayley_graph(group, {gaussian_vertex(1, 0, M), gaussian_vertex(0, 1, M)});
    std::vector<std::uint32_t> subgroup;
    for (std::uint64_t a = 0; a < 5; ++a)
        for (std::uint64_t b = 0; b < 5; ++b) subgroup.push_back(gaussian_vertex(p * a, p * b, M));
    auto q = quotient_by_subgroup(cg, subgroup);
    std::size_t cosets = q.coset_rep.size();

    ++entry.report.cases;
    if (!(q.graph_quotient == q.cayley_of_quotient))
        entry.violation("reason=quotient-cayley-mismatch");

    // The coset of x corresponds to x mod p componentwise.
    auto coset_elem = [&](std::uint32_t c) {
        std::uint32_t rep = q.coset_rep[c];
        return Fp2Elem(modp, static_cast<std::int64_t>((rep / M) % p),
                       static_cast<std::int64_t>((rep % M) % p));
    };

    auto constructed = representative_set(cg, q);
    auto chains = chain_distances(cg, q, constructed);
    for (std::uint32_t c = 0; c < cosets; ++c) {
        ++entry.report.cases;
        const ChainDistances& ch = chains[c];
        if (!(ch.d_r == ch.norm_x && ch.norm_x == ch.norm_coset))
            entry.violation("transversal=constructed elem=" + to_text(coset_elem(c)) +
                            " dr=" + distance_text(ch.d_r) + " nx=" + distance_text(ch.norm_x) +
                            " nh=" + distance_text(ch.norm_coset));
        ++entry.report.cases;
        std::uint64_t mn = coset_elem(c).manhattan_norm();
        if (ch.norm_coset != static_cast<std::int64_t>(mn))
            entry.violation("elem=" + to_text(coset_elem(c)) + " nh=" + distance_text(ch.norm_coset) +
                            " manhattan=" + std::to_string(mn) + " reason=quotient-norm-mismatch");
    }

    bool strict_seen = false;
    auto run_adversarial = [&](const char* label, const std::vector<std::uint32_t>& transversal) {
        auto ch = chain_distances(cg, q, transversal);
        for (std::uint32_t c = 0; c < cosets; ++c) {
            ++entry.report.cases;
            if (!(ch[c].d_r >= ch[c].norm_x && ch[c].norm_x >= ch[c].norm_coset))
                entry.violation(std::string("transversal=") + label +
                                " elem=" + to_text(coset_elem(c)) + " dr=" + distance_text(ch[c].d_r) +
                                " nx=" + distance_text(ch[c].norm_x) +
                                " nh=" + distance_text(ch[c].norm_coset));
            if (ch[c].norm_x > ch[c].norm_coset) strict_seen = true;
        }
    };

    std::uint32_t identity_coset = q.coset_of[group.identity()];
    // Deterministic adversary: push every representative one H-step away.
    std::vector<std::uint32_t> shifted = q.coset_rep;
    std::uint32_t h_step = gaussian_vertex(p, 0, M);
    for (std::uint32_t c = 0; c < cosets; ++c)
        shifted[c] = c == identity_coset ? group.identity() : group.op(h_step, shifted[c]);
    run_adversarial("shift", shifted);

    // Seeded random transversal (identity coset pinned to e).
    std::vector<std::vector<std::uint32_t>> members(cosets);
    for (std::uint32_t x = 0; x < group.size(); ++x) members[q.coset_of[x]].push_back(x);
    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint32_t> randomized(cosets);
    for (std::uint32_t c = 0; c < cosets; ++c) {
        std::uniform_int_distribution<std::size_t> pick(0, members[c].size() - 1);
        randomized[c] = c == identity_coset ? group.identity() : members[c][pick(rng)];
    }
    run_adversarial("random", randomized);

    ++entry.report.cases;
    if (!strict_seen) entry.violation("reason=strictness-not-witnessed");
    return entry.finish();
}

std::vector<SuiteReport> run_lemma(const SuiteOptions& opts) {
    reject(opts.m || opts.k || opts.n || opts.kind.has_value(), "lemma takes only p (and seed)");
    std::vector<std::uint64_t> primes = opts.p ? std::vector<std::uint64_t>{*opts.p}
                                               : std::vector<std::uint64_t>{3, 7};
    std::vector<SuiteReport> reports;
    for (std::uint64_t p : primes) {
        Modulus::prime_3mod4(p); // validate before sizing the surrogate
        reject(p > 11, "lemma surrogate supports p in {3, 7, 11}");
        reports.push_back(run_lemma_entry(p, opts));
    }
    return reports;
}

// --- quotient ------------------------------------------------------------

std::vector<SuiteReport> run_quotient(const SuiteOptions& opts) {
    reject(opts.p || opts.m || opts.k || opts.n || opts.kind.has_value(),
           "quotient runs a fixed battery and takes no parameters");
    Entry entry("quotient", ParamSet{});
    auto check = [&](const std::string& label, const CayleyGraph& cg,
                     const std::vector<std::uint32_t>& subgroup) {
        auto q = quotient_by_subgroup(cg, subgroup);
        ++entry.report.cases;
        if (!(q.graph_quotient == q.cayley_of_quotient))
            entry.violation("instance=" + label + " reason=quotient-cayley-mismatch");
        ++entry.report.cases;
        if (!verify_quotient_distance_bound(cg.graph, q.coset_of, q.coset_rep.size()))
            entry.violation("instance=" + label + " reason=distance-bound");
    };

    for (std::size_t n = 2; n <= 12; ++n) {
        auto cg = make_cayley_graph(FiniteGroup::cyclic(n), {1});
        for (std::uint32_t d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            std::vector<std::uint32_t> subgroup;
            for (std::uint32_t x = 0; x < n; x += d) subgroup.push_back(x);
            check("cyclic" + std::to_string(n) + "-h" + std::to_string(d), cg, subgroup);
        }
    }
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(p), FiniteGroup::cyclic(p));
        auto cg = make_cayley_graph(std::move(g), {static_cast<std::uint32_t>(p), 1u});
        std::vector<std::uint32_t> diagonal;
        for (std::uint32_t x = 0; x < p; ++x)
            diagonal.push_back(static_cast<std::uint32_t>(x * p + x));
        check("zp2diag" + std::to_string(p), cg, diagonal);
    }
    for (std::uint64_t p : {3ULL, 7ULL}) {
        std::uint64_t M = 5 * p;
        auto cg = make_cayley_graph(FiniteGroup::gaussian_additive(M),
                                    {gaussian_vertex(1, 0, M), gaussian_vertex(0, 1, M)});
        std::vector<std::uint32_t> subgroup;
        for (std::uint64_t a = 0; a < 5; ++a)
            for (std::uint64_t b = 0; b < 5; ++b)
                subgroup.push_back(gaussian_vertex(p * a, p * b, M));
        check("gauss" + std::to_string(p), cg, subgroup);
    }
    return {entry.finish()};
}

// --- cpd / cauchy-schwarz -------------------------------------------------

std::uint64_t derive_prime(std::uint64_t range, const SuiteOptions& opts, const char* who) {
    if (range > kDeriveRangeLimit && !opts.force)
        throw InfeasibleError(std::string(who) + ": derived residue range " +
                                  std::to_string(range) + " is too large for a bounded search",
                              range);
    auto cert = find_kustaanheimo_prime(range, opts.cap);
    if (!cert)
        throw CapExhaustedError(std::string(who) + ": no prime with 1.." + std::to_string(range) +
                                " all residues under cap " + std::to_string(opts.cap));
    return cert->p;
}

std::vector<SuiteReport> run_cpd(const SuiteOptions& opts) {
    reject(opts.m || opts.kind.has_value(), "cpd takes k, p, n");
    reject(!opts.k && (opts.p || opts.n), "cpd: p and n require an explicit k");

    struct Block {
        std::uint64_t k, p;
        std::vector<std::uint64_t> ns;
    };
    auto default_ns = [](std::uint64_t k) {
        std::vector<std::uint64_t> ns;
        for (std::uint64_t n = 1; n <= (k == 1 ? 5u : 4u); ++n) ns.push_back(n);
        return ns;
    };
    std::vector<Block> blocks;
    if (opts.k) {
        std::uint64_t k = *opts.k;
        reject(k == 0, "cpd: k must be positive");
        std::uint64_t p = opts.p ? *opts.p : derive_prime(2 * k * k * k, opts, "cpd");
        blocks.push_back({k, p, opts.n ? std::vector<std::uint64_t>{*opts.n} : default_ns(k)});
    } else {
        blocks.push_back({1, derive_prime(2, opts, "cpd"), default_ns(1)});
        blocks.push_back({2, derive_prime(16, opts, "cpd"), default_ns(2)});
    }

    std::vector<SuiteReport> reports;
    for (const Block& block : blocks) {
        Modulus mod = Modulus::prime_3mod4(block.p);
        for (std::uint64_t n : block.ns) {
            reject(n == 0, "cpd: n must be positive");
            guard(norm_ball_vector_count(mod, n, block.k), opts, "cpd");
            ParamSet ps;
            ps.k = block.k;
            ps.p = block.p;
            ps.n = n;
            Entry entry("cpd", ps);
            for_each_vector_of_norm_at_most(mod, n, block.k, [&](const HVector& v) {
                ++entry.report.cases;
                std::uint64_t s = self_product_value(v);
                if (v.is_zero()) {
                    if (s != 0)
                        entry.violation("v=" + to_text(v.components()) + " vv=" + std::to_string(s) +
                                        " reason=zero-vector-nonzero-product");
                } else if (s == 0) {
                    entry.violation("v=" + to_text(v.components()) +
                                    " vv=0 reason=nonzero-vector-zero-product");
                } else if (!legendre_is_residue(s, mod)) {
                    entry.violation("v=" + to_text(v.components()) + " vv=" + std::to_string(s) +
                                    " reason=product-not-a-residue");
                }
            });
            reports.push_back(entry.finish());
        }
    }
    return reports;
}

std::vector<SuiteReport> run_cauchy_schwarz(const SuiteOptions& opts) {
    reject(opts.m || opts.kind.has_value(), "cauchy-schwarz takes k, p, n");
    std::uint64_t k = opts.k.value_or(1);
    reject(k == 0, "cauchy-schwarz: k must be positive");
    std::uint64_t range = sat_mul(4, sat_mul(sat_mul(k, k), sat_mul(sat_mul(k, k), sat_mul(k, k))));
    std::uint64_t p = opts.p ? *opts.p : derive_prime(range, opts, "cauchy-schwarz");
    Modulus mod = Modulus::prime_3mod4(p);
    std::vector<std::uint64_t> ns =
        opts.n ? std::vector<std::uint64_t>{*opts.n} : std::vector<std::uint64_t>{2, 3, 4};

    std::uint64_t pair_bound = 4 * k * k * k * k;
    std::vector<SuiteReport> reports;
    for (std::uint64_t n : ns) {
        reject(n == 0, "cauchy-schwarz: n must be positive");
        std::uint64_t count = norm_ball_vector_count(mod, n, k);
        guard(sat_mul(count, count), opts, "cauchy-schwarz");
        ParamSet ps;
        ps.k = k;
        ps.p = p;
        ps.n = n;
        Entry entry("cauchy-schwarz", ps);
        std::vector<HVector> ball;
        for_each_vector_of_norm_at_most(mod, n, k, [&](const HVector& v) { ball.push_back(v); });
        for (const HVector& v : ball) {
            for (const HVector& w : ball) {
                ++entry.report.cases;
                std::uint64_t diff = cs_difference(v, w);
                auto pair_text = [&] { return "v=" + to_text(v.components()) + " w=" + to_text(w.components()); };
                if (diff != 0 && !legendre_is_residue(diff, mod))
                    entry.violation(pair_text() + " diff=" + std::to_string(diff) +
                                    " reason=difference-not-a-square");
                if ((diff == 0) != is_proportional(v, w))
                    entry.violation(pair_text() + " diff=" + std::to_string(diff) +
                                    " reason=proportionality-mismatch");
                std::uint64_t nonzero_pairs = 0;
                for (std::size_t i = 0; i < v.size(); ++i)
                    for (std::size_t j = i + 1; j < v.size(); ++j) {
                        Fp2Elem minor = v[i] * w[j] - v[j] * w[i];
                        if (minor.is_zero()) continue;
                        ++nonzero_pairs;
                        std::uint64_t term_norm = (minor * minor.conjugate()).manhattan_norm();
                        if (term_norm > pair_bound)
                            entry.violation(pair_text() + " term=" + std::to_string(term_norm) +
                                            " reason=pair-norm-bound");
                    }
                if (nonzero_pairs > k * k)
                    entry.violation(pair_text() + " pairs=" + std::to_string(nonzero_pairs) +
                                    " reason=nonzero-pair-count");
            }
        }
        reports.push_back(entry.finish());
    }
    return reports;
}

// --- special-2d -----------------------------------------------------------

std::vector<SuiteReport> run_special_2d(const SuiteOptions& opts) {
    reject(opts.m || opts.k || opts.n || opts.kind.has_value(), "special-2d takes only p");
    std::vector<std::uint64_t> primes = opts.p ? std::vector<std::uint64_t>{*opts.p}
                                               : std::vector<std::uint64_t>{3, 7, 11};
    std::vector<SuiteReport> reports;
    for (std::uint64_t p : primes) {
        Modulus mod = Modulus::prime_3mod4(p);
        guard(sat_mul(sat_mul(p, p), sat_mul(p, p)), opts, "special-2d");
        ParamSet ps;
        ps.p = p;
        Entry entry("special-2d", ps);
        for (std::uint64_t v1 = 0; v1 < p; ++v1)
            for (std::uint64_t v2 = 0; v2 < p; ++v2) {
                HVector v({Fp2Elem(mod, static_cast<std::int64_t>(v1)),
                           Fp2Elem(mod, static_cast<std::int64_t>(v2))});
                for (std::uint64_t w1 = 0; w1 < p; ++w1)
                    for (std::uint64_t w2 = 0; w2 < p; ++w2) {
                        ++entry.report.cases;
                        HVector w({Fp2Elem(mod, static_cast<std::int64_t>(w1)),
                                   Fp2Elem(mod, static_cast<std::int64_t>(w2))});
                        std::uint64_t diff = cs_difference(v, w);
                        std::uint64_t minor = detail::sub_mod(detail::mul_mod(v1, w2, p),
                                                              detail::mul_mod(v2, w1, p), p);
                        std::uint64_t expected = detail::mul_mod(minor, minor, p);
                        if (diff != expected)
                            entry.violation("v=" + to_text(v.components()) +
                                            " w=" + to_text(w.components()) +
                                            " diff=" + std::to_string(diff) +
                                            " expected=" + std::to_string(expected));
                    }
            }
        reports.push_back(entry.finish());
    }
    return reports;
}

// --- inner-norm -------------------------------------------------------------

std::vector<SuiteReport> run_inner_norm(const SuiteOptions& opts) {
    reject(opts.k || opts.kind.has_value(), "inner-norm takes p or m, and n");
    struct Point {
        Modulus mod;
        std::uint64_t n;
    };
    std::vector<Point> points;
    if (opts.p || opts.m) {
        reject(opts.p && opts.m, "give either p or m, not both");
        Modulus mod = opts.p ? Modulus::prime_3mod4(*opts.p) : Modulus::general(*opts.m);
        points.push_back({mod, opts.n.value_or(1)});
    } else {
        reject(opts.n.has_value(), "inner-norm: n requires an explicit modulus");
        points = {{Modulus::prime_3mod4(3), 1}, {Modulus::prime_3mod4(3), 2},
                  {Modulus::prime_3mod4(7), 1}, {Modulus::general(4), 1},
                  {Modulus::prime_3mod4(7), 2}, {Modulus::prime_3mod4(7), 3}};
    }

    std::vector<SuiteReport> reports;
    for (const Point& point : points) {
        reject(point.n == 0, "inner-norm: n must be positive");
        std::uint64_t m2 = point.mod.value() * point.mod.value();
        std::uint64_t vectors = 1;
        for (std::uint64_t j = 0; j < point.n; ++j) vectors = sat_mul(vectors, m2);
        std::uint64_t pairs = sat_mul(vectors, vectors);
        bool exhaustive = pairs <= kExhaustivePairLimit;

        ParamSet ps;
        (point.mod.is_field() ? ps.p : ps.m) = point.mod.value();
        ps.n = point.n;
        ps.mode = exhaustive ? "exhaustive" : "random";
        if (!exhaustive) ps.seed = opts.seed;
        guard(exhaustive ? pairs : kRandomPairs, opts, "inner-norm");
        Entry entry("inner-norm", ps);

        auto check = [&](const HVector& v, const HVector& w) {
            ++entry.report.cases;
            if (!norm_submultiplicativity_check(v, w))
                entry.violation("v=" + to_text(v.components()) + " w=" + to_text(w.components()) +
                                " nvw=" + std::to_string(inner_product(v, w).manhattan_norm()) +
                                " nv=" + std::to_string(vector_norm(v)) +
                                " nw=" + std::to_string(vector_norm(w)));
        };
        if (exhaustive) {
            auto vs = all_vectors(point.mod, point.n);
            for (const HVector& v : vs)
                for (const HVector& w : vs) check(v, w);
        } else {
            std::mt19937_64 rng(opts.seed);
            for (std::uint64_t t = 0; t < kRandomPairs; ++t) {
                HVector v = random_vector(point.mod, point.n, rng);
                HVector w = random_vector(point.mod, point.n, rng);
                check(v, w);
            }
        }
        reports.push_back(entry.finish());
    }
    return reports;
}

// --- counterexample ---------------------------------------------------------

std::vector<SuiteReport> run_counterexample(const SuiteOptions& opts) {
    reject(opts.m || opts.k, "counterexample takes p, kind, n");
    std::vector<std::uint64_t> primes = opts.p ? std::vector<std::uint64_t>{*opts.p}
                                               : std::vector<std::uint64_t>{3, 7, 11};
    std::vector<CounterexampleKind> kinds =
        opts.kind ? std::vector<CounterexampleKind>{*opts.kind}
                  : std::vector<CounterexampleKind>{CounterexampleKind::complex_n2,
                                                    CounterexampleKind::real_n3};
    std::vector<SuiteReport> reports;
    for (std::uint64_t p : primes) {
        Modulus mod = Modulus::prime_3mod4(p);
        for (CounterexampleKind kind : kinds) {
            std::uint64_t n =
                opts.n.value_or(kind == CounterexampleKind::complex_n2 ? 2 : 3);
            ParamSet ps;
            ps.p = p;
            ps.n = n;
            ps.kind = kind;
            Entry entry("counterexample", ps);
            auto [v, w] = counterexample_pair(kind, mod, n);
            ++entry.report.cases;

            Fp2Elem vw = inner_product(v, w);
            std::uint64_t lhs =
                detail::add_mod(detail::mul_mod(vw.re(), vw.re(), p),
                                detail::mul_mod(vw.im(), vw.im(), p), p); // (v.w)(w.v) = |v.w|^2
            std::uint64_t rhs = detail::mul_mod(self_product_value(v), self_product_value(w), p);
            std::uint64_t diff = cs_difference(v, w);
            bool violated = diff != 0 && !legendre_is_residue(diff, mod);

            if (diff != detail::sub_mod(rhs, lhs, p)) {
                entry.violation("v=" + to_text(v.components()) + " w=" + to_text(w.components()) +
                                " diff=" + std::to_string(diff) + " reason=internal-mismatch");
            } else if (!violated || diff != p - 1) {
                entry.violation("v=" + to_text(v.components()) + " w=" + to_text(w.components()) +
                                " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs) +
                                " reason=inequality-not-violated");
            }
            entry.note("v=" + to_text(v.components()) + " w=" + to_text(w.components()));
            entry.note("LHS=" + balanced_residue_text(lhs, p) +
                       " RHS=" + balanced_residue_text(rhs, p) +
                       (violated ? " (non-residue)" : " (residue)"));
            reports.push_back(entry.finish());
        }
    }
    return reports;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "triangle", "submult",    "lemma",      "quotient",       "cpd",
        "cauchy-schwarz", "special-2d", "inner-norm", "counterexample"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "all") {
        SuiteOptions defaults;
        defaults.cap = opts.cap;
        defaults.seed = opts.seed;
        defaults.force = opts.force;
        std::vector<SuiteReport> reports;
        for (const std::string& suite : suite_names()) {
            auto part = run_suite(suite, defaults);
            reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
        }
        return reports;
    }
    if (name == "triangle" || name == "submult") return run_pair_inequality(name, opts);
    if (name == "lemma") return run_lemma(opts);
    if (name == "quotient") return run_quotient(opts);
    if (name == "cpd") return run_cpd(opts);
    if (name == "cauchy-schwarz") return run_cauchy_schwarz(opts);
    if (name == "special-2d") return run_special_2d(opts);
    if (name == "inner-norm") return run_inner_norm(opts);
    if (name == "counterexample") return run_counterexample(opts);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string render_reports(const std::vector<SuiteReport>& reports) {
    std::string out;
    for (const SuiteReport& r : reports) {
        out += "suite=" + r.suite + (r.params.empty() ? "" : " " + r.params) +
               " cases=" + std::to_string(r.cases) +
               " violations=" + std::to_string(r.violation_count) +
               " result=" + (r.passed() ? "pass" : "fail") +
               " wall_ms=" + std::to_string(r.wall_ms) + "\n";
        for (const std::string& line : r.violations) out += line + "\n";
        if (r.violation_count > r.violations.size())
            out += "info suite=" + r.suite + " violations-truncated-to=" +
                   std::to_string(r.violations.size()) + "\n";
        for (const std::string& line : r.info) out += line + "\n";
    }
    return out;
}

void write_reports(const std::string& path, const std::vector<SuiteReport>& reports) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report file '" + path + "'");
    out << render_reports(reports);
    if (!out) throw std::runtime_error("failed writing report file '" + path + "'");
}

bool reverify_violation(const std::string& line) {
    std::istringstream iss(line);
    std::string token;
    if (!(iss >> token) || token != "violation")
        throw std::invalid_argument("reverify: expected a line starting with 'violation'");
    std::string suite;
    SuiteOptions opts;
    while (iss >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        auto number = [&]() -> std::uint64_t {
            try {
                return std::stoull(value);
            } catch (const std::exception&) {
                throw std::invalid_argument("reverify: bad numeric value for " + key);
            }
        };
        if (key == "suite") {
            suite = value;
        } else if (key == "k") {
            opts.k = number();
        } else if (key == "p") {
            opts.p = number();
        } else if (key == "m") {
            opts.m = number();
        } else if (key == "n") {
            opts.n = number();
        } else if (key == "seed") {
            opts.seed = number();
        } else if (key == "kind") {
            auto kind = counterexample_kind_from_text(value);
            if (!kind) throw std::invalid_argument("reverify: unknown kind '" + value + "'");
            opts.kind = kind;
        }
        // remaining keys are case payload; the rerun regenerates them
    }
    if (suite.empty()) throw std::invalid_argument("reverify: missing suite key");
    auto reports = run_suite(suite, opts);
    for (const SuiteReport& r : reports)
        if (std::find(r.violations.begin(), r.violations.end(), line) != r.violations.end())
            return true;
    return false;
}

} // namespace fpgrid

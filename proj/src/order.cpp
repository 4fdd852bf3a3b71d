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

#include "fpgrid/order.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fpgrid {

bool legendre_is_residue(std::uint64_t x, const Modulus& p) {
    if (!p.is_field()) throw std::domain_error("legendre_is_residue: requires a prime modulus");
    if (x == 0 || x >= p.value())
        throw std::domain_error("legendre_is_residue: x must be a nonzero canonical residue");
    return detail::pow_mod(x, (p.value() - 1) / 2, p.value()) == 1;
}

TournamentVerdict tournament_compare(std::uint64_t x, std::uint64_t y, const Modulus& p) {
    if (!p.is_field()) throw std::domain_error("tournament_compare: requires a prime modulus");
    if (x >= p.value() || y >= p.value())
        throw std::invalid_argument("tournament_compare: operand out of range");
    if (x == y) return TournamentVerdict::equal;
    std::uint64_t diff = detail::sub_mod(y, x, p.value());
    return legendre_is_residue(diff, p) ? TournamentVerdict::less : TournamentVerdict::greater;
}

bool KustaanheimoCertificate::verify() const {
    if (k == 0 || p < 3 || p % 4 != 3 || !is_prime_by_trial_division(p)) return false;
    if (k > (p - 1) / 2) return false;
    if (witnesses.size() != k) return false;
    for (std::uint64_t r = 1; r <= k; ++r) {
        const auto& [wr, ws] = witnesses[r - 1];
        if (wr != r) return false;
        if (ws == 0 || ws >= p) return false;
        if (detail::mul_mod(ws, ws, p) != r % p) return false;
    }
    return true;
}

std::string KustaanheimoCertificate::to_text() const {
    std::string out = "k=" + std::to_string(k) + " p=" + std::to_string(p) + "\n";
    for (const auto& [r, s] : witnesses)
        out += "sqrt(" + std::to_string(r) + ")=" + std::to_string(s) + "\n";
    return out;
}

std::string KustaanheimoCertificate::to_json_text() const {
    nlohmann::json j;
    j["k"] = k;
    j["p"] = p;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& [r, s] : witnesses) j["witnesses"].push_back({{"r", r}, {"s", s}});
    return j.dump();
}

KustaanheimoCertificate KustaanheimoCertificate::parse_text(std::string_view text) {
    auto fail = [](const char* why) -> KustaanheimoCertificate {
        throw std::invalid_argument(std::string("bad certificate: ") + why);
    };
    auto read_uint = [&](std::string_view& s) {
        if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front())))
            fail("expected a number");
        std::uint64_t v = 0;
        while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
            v = v * 10 + static_cast<std::uint64_t>(s.front() - '0');
            s.remove_prefix(1);
        }
        return v;
    };
    auto expect = [&](std::string_view& s, std::string_view lit) {
        if (s.substr(0, lit.size()) != lit) fail("unexpected token");
        s.remove_prefix(lit.size());
    };

    KustaanheimoCertificate cert;
    std::string_view rest = text;
    expect(rest, "k=");
    cert.k = read_uint(rest);
    expect(rest, " p=");
    cert.p = read_uint(rest);
    expect(rest, "\n");
    while (!rest.empty()) {
        expect(rest, "sqrt(");
        std::uint64_t r = read_uint(rest);
        expect(rest, ")=");
        std::uint64_t s = read_uint(rest);
        expect(rest, "\n");
        cert.witnesses.emplace_back(r, s);
    }
    if (cert.witnesses.size() != cert.k) fail("witness count does not match k");
    return cert;
}

namespace {

// Odd primes in [lo, hi) congruent to 3 mod 4, by segmented sieve over the
// base primes. Keeps memory flat for caps up to 1e8.
template <typename Visit>
void for_each_prime_3mod4(std::uint64_t cap, Visit visit) {
    if (cap < 3) return;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(cap))) + 2;
    std::vector<std::uint64_t> base;
    std::vector<bool> small_sieve(root + 1, true);
    for (std::uint64_t n = 2; n <= root; ++n) {
        if (!small_sieve[n]) continue;
        base.push_back(n);
        for (std::uint64_t m = n * n; m <= root; m += n) small_sieve[m] = false;
    }

    constexpr std::uint64_t kSegment = 1 << 20;
    std::vector<bool> seg;
    for (std::uint64_t lo = 2; lo <= cap; lo += kSegment) {
        std::uint64_t hi = std::min(cap + 1, lo + kSegment);
        seg.assign(hi - lo, true);
        for (std::uint64_t q : base) {
            if (q * q >= hi) break;
            std::uint64_t first = std::max(q * q, (lo + q - 1) / q * q);
            for (std::uint64_t m = first; m < hi; m += q) seg[m - lo] = false;
        }
        for (std::uint64_t n = lo; n < hi; ++n)
            if (seg[n - lo] && n % 4 == 3)
                if (visit(n)) return;
    }
}

} // namespace

std::optional<KustaanheimoCertificate> find_kustaanheimo_prime(std::uint64_t k, std::uint64_t cap) {
    if (k == 0) throw std::invalid_argument("find_kustaanheimo_prime: k must be positive");
    if (cap > kMaxModulus) cap = kMaxModulus;

    std::optional<KustaanheimoCertificate> found;
    for_each_prime_3mod4(cap, [&](std::uint64_t p) {
        if (k > (p - 1) / 2) return false; // keep scanning; small primes cannot host k residues
        for (std::uint64_t r = 1; r <= k; ++r)
            if (detail::pow_mod(r % p, (p - 1) / 2, p) != 1) return false;
        KustaanheimoCertificate cert;
        cert.k = k;
        cert.p = p;
        for (std::uint64_t r = 1; r <= k; ++r) {
            std::uint64_t s = detail::pow_mod(r % p, (p + 1) / 4, p);
            cert.witnesses.emplace_back(r, s);
        }
        found = std::move(cert);
        return true;
    });
    return found;
}

bool transitivity_check(const Modulus& p, std::uint64_t k) {
    if (!p.is_field()) throw std::domain_error("transitivity_check: requires a prime modulus");
    if (k > (p.value() - 1) / 2)
        throw std::invalid_argument("transitivity_check: k exceeds (p-1)/2");
    auto below_or_equal = [&](std::uint64_t x, std::uint64_t y) {
        return tournament_compare(x, y, p) != TournamentVerdict::greater;
    };
    for (std::uint64_t x = 0; x <= k; ++x)
        for (std::uint64_t y = 0; y <= k; ++y)
            for (std::uint64_t z = 0; z <= k; ++z)
                if (below_or_equal(x, y) && below_or_equal(y, z) && !below_or_equal(x, z))
                    return false;
    return true;
}

bool matches_natural_order(const Modulus& p, std::uint64_t k) {
    if (!p.is_field()) throw std::domain_error("matches_natural_order: requires a prime modulus");
    if (k > (p.value() - 1) / 2)
        throw std::invalid_argument("matches_natural_order: k exceeds (p-1)/2");
    for (std::uint64_t x = 0; x <= k; ++x)
        for (std::uint64_t y = x + 1; y <= k; ++y)
            if (tournament_compare(x, y, p) != TournamentVerdict::less) return false;
    return true;
}

} // namespace fpgrid

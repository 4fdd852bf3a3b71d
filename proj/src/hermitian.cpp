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

#include "fpgrid/hermitian.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fpgrid {

HVector::HVector(std::vector<Fp2Elem> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("HVector: needs at least one component");
    for (const Fp2Elem& c : components_)
        if (!(c.modulus() == components_.front().modulus()))
            throw std::invalid_argument("HVector: components have mixed moduli");
}

HVector HVector::zero(const Modulus& mod, std::size_t n) {
    return HVector(std::vector<Fp2Elem>(n, Fp2Elem::zero(mod)));
}

bool HVector::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Fp2Elem& c) { return c.is_zero(); });
}

HVector operator+(const HVector& v, const HVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("HVector: length mismatch");
    std::vector<Fp2Elem> out;
    out.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out.push_back(v[j] + w[j]);
    return HVector(std::move(out));
}

HVector scalar_mul(const Fp2Elem& c, const HVector& v) {
    std::vector<Fp2Elem> out;
    out.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out.push_back(c * v[j]);
    return HVector(std::move(out));
}

Fp2Elem inner_product(const HVector& v, const HVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("inner_product: length mismatch");
    Fp2Elem acc = Fp2Elem::zero(v.modulus());
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + v[j] * w[j].conjugate();
    return acc;
}

std::uint64_t vector_norm(const HVector& v) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < v.size(); ++j) sum += v[j].manhattan_norm();
    return sum;
}

namespace {

std::uint64_t subfield_value(const Fp2Elem& z, const char* who) {
    if (z.im() != 0)
        throw std::logic_error(std::string(who) + ": value escaped the prime subfield");
    return z.re();
}

} // namespace

std::uint64_t self_product_value(const HVector& v) {
    if (!v.modulus().is_field())
        throw std::domain_error("self_product_value: requires a prime modulus");
    return subfield_value(inner_product(v, v), "self_product_value");
}

std::uint64_t cs_difference_pair_sum(const HVector& v, const HVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("cs_difference: length mismatch");
    Fp2Elem acc = Fp2Elem::zero(v.modulus());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Fp2Elem minor = v[i] * w[j] - v[j] * w[i];
            acc = acc + minor * minor.conjugate();
        }
    return subfield_value(acc, "cs_difference_pair_sum");
}

std::uint64_t cs_difference(const HVector& v, const HVector& w) {
    if (!v.modulus().is_field())
        throw std::domain_error("cs_difference: requires a prime modulus");
    if (v.size() != w.size()) throw std::invalid_argument("cs_difference: length mismatch");
    Fp2Elem vw = inner_product(v, w);
    Fp2Elem diff = inner_product(v, v) * inner_product(w, w) - vw * vw.conjugate();
    std::uint64_t value = subfield_value(diff, "cs_difference");
    assert(value == cs_difference_pair_sum(v, w));
    return value;
}

bool is_proportional(const HVector& v, const HVector& w) {
    if (!v.modulus().is_field())
        throw std::domain_error("is_proportional: requires a prime modulus");
    if (v.size() != w.size()) throw std::invalid_argument("is_proportional: length mismatch");
    if (v.is_zero() || w.is_zero()) return true;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!(v[i] * w[j] == v[j] * w[i])) return false;
    // Minors vanish and w != 0, so the scalar is recoverable from any
    // nonzero component of w; confirm the witness.
    std::size_t j0 = 0;
    while (w[j0].is_zero()) ++j0;
    Fp2Elem c = v[j0] * w[j0].inverse();
    return v == scalar_mul(c, w);
}

bool norm_submultiplicativity_check(const HVector& v, const HVector& w) {
    return inner_product(v, w).manhattan_norm() <= vector_norm(v) * vector_norm(w);
}

std::string to_text(CounterexampleKind kind) {
    return kind == CounterexampleKind::complex_n2 ? "complex-n2" : "real-n3";
}

std::optional<CounterexampleKind> counterexample_kind_from_text(std::string_view text) {
    if (text == "complex-n2") return CounterexampleKind::complex_n2;
    if (text == "real-n3") return CounterexampleKind::real_n3;
    return std::nullopt;
}

std::pair<std::uint64_t, std::uint64_t> sum_of_two_squares_of_minus_one(const Modulus& p) {
    if (!p.is_field())
        throw std::domain_error("sum_of_two_squares_of_minus_one: requires a prime modulus");
    std::uint64_t m = p.value();
    for (std::uint64_t a = 0; a < m; ++a) {
        std::uint64_t need = detail::sub_mod(m - 1, detail::mul_mod(a, a, m), m);
        if (need == 0) return {a, 0};
        if (detail::pow_mod(need, (m - 1) / 2, m) != 1) continue;
        std::uint64_t s = detail::pow_mod(need, (m + 1) / 4, m);
        return {a, std::min(s, m - s)};
    }
    throw std::logic_error("sum_of_two_squares_of_minus_one: no solution found");
}

std::pair<HVector, HVector> counterexample_pair(CounterexampleKind kind, const Modulus& p,
                                                std::size_t n) {
    if (!p.is_field())
        throw std::domain_error("counterexample_pair: requires a prime modulus");
    auto [a, b] = sum_of_two_squares_of_minus_one(p);
    std::vector<Fp2Elem> v(n, Fp2Elem::zero(p)), w(n, Fp2Elem::zero(p));
    switch (kind) {
    case CounterexampleKind::complex_n2: {
        if (n < 2) throw std::invalid_argument("counterexample_pair: complex-n2 needs n >= 2");
        Fp2Elem z(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
        v[0] = Fp2Elem(p, static_cast<std::int64_t>(a));
        v[1] = Fp2Elem(p, static_cast<std::int64_t>(b));
        w[0] = Fp2Elem(p, static_cast<std::int64_t>(b)) * z;
        w[1] = -(Fp2Elem(p, static_cast<std::int64_t>(a)) * z);
        break;
    }
    case CounterexampleKind::real_n3:
        if (n < 3) throw std::invalid_argument("counterexample_pair: real-n3 needs n >= 3");
        v[0] = Fp2Elem::one(p);
        v[1] = Fp2Elem(p, static_cast<std::int64_t>(a));
        v[2] = Fp2Elem(p, static_cast<std::int64_t>(b));
        w[0] = Fp2Elem::one(p);
        break;
    }
    return {HVector(std::move(v)), HVector(std::move(w))};
}

std::vector<Fp2Elem> norm_ball(const Modulus& mod, std::uint64_t t) {
    std::uint64_t m = mod.value();
    std::uint64_t reach = m / 2; // largest cycle distance on C_m
    auto values_at = [&](std::uint64_t d) {
        std::vector<std::uint64_t> vals{d};
        if (d != 0 && m - d != d) vals.push_back(m - d);
        return vals;
    };
    std::vector<Fp2Elem> ball;
    for (std::uint64_t dr = 0; dr <= std::min(t, reach); ++dr)
        for (std::uint64_t re : values_at(dr))
            for (std::uint64_t di = 0; di <= std::min(t - dr, reach); ++di)
                for (std::uint64_t im : values_at(di))
                    ball.push_back(Fp2Elem(mod, static_cast<std::int64_t>(re),
                                           static_cast<std::int64_t>(im)));
    std::sort(ball.begin(), ball.end(), [](const Fp2Elem& x, const Fp2Elem& y) {
        auto kx = std::tuple(x.manhattan_norm(), x.re(), x.im());
        auto ky = std::tuple(y.manhattan_norm(), y.re(), y.im());
        return kx < ky;
    });
    return ball;
}

void for_each_vector_of_norm_at_most(const Modulus& mod, std::size_t n, std::uint64_t t,
                                     const std::function<void(const HVector&)>& fn) {
    if (n == 0) throw std::invalid_argument("for_each_vector_of_norm_at_most: n must be positive");
    std::vector<Fp2Elem> ball = norm_ball(mod, t); // sorted by norm ascending
    // cutoff[r] = how many ball entries have norm <= r
    std::vector<std::size_t> cutoff(t + 1, 0);
    for (std::uint64_t r = 0; r <= t; ++r) {
        std::size_t c = 0;
        while (c < ball.size() && ball[c].manhattan_norm() <= r) ++c;
        cutoff[r] = c;
    }
    std::vector<Fp2Elem> components(n, Fp2Elem::zero(mod));
    auto recurse = [&](auto&& self, std::size_t depth, std::uint64_t budget) -> void {
        if (depth == n) {
            fn(HVector(components));
            return;
        }
        for (std::size_t c = 0; c < cutoff[budget]; ++c) {
            components[depth] = ball[c];
            self(self, depth + 1, budget - ball[c].manhattan_norm());
        }
    };
    recurse(recurse, 0, t);
}

std::uint64_t norm_ball_vector_count(const Modulus& mod, std::size_t n, std::uint64_t t) {
    constexpr std::uint64_t kSat = (1ULL << 63) - 1;
    std::uint64_t m = mod.value();
    std::uint64_t reach = m / 2;
    // Elements at exact cycle distance d on C_m: 1 at d = 0, 1 at d = m/2
    // for even m, else 2.
    auto values_count = [&](std::uint64_t d) -> std::uint64_t {
        return (d == 0 || m - d == d) ? 1 : 2;
    };
    std::vector<std::uint64_t> elem(t + 1, 0); // elements with norm exactly s
    for (std::uint64_t dr = 0; dr <= std::min(t, reach); ++dr)
        for (std::uint64_t di = 0; dr + di <= t && di <= reach; ++di)
            elem[dr + di] += values_count(dr) * values_count(di);

    std::vector<std::uint64_t> ways(t + 1, 0); // vectors so far with norm exactly r
    ways[0] = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::uint64_t> next(t + 1, 0);
        for (std::uint64_t r = 0; r <= t; ++r) {
            if (ways[r] == 0) continue;
            for (std::uint64_t s = 0; r + s <= t; ++s) {
                unsigned __int128 add = static_cast<unsigned __int128>(ways[r]) * elem[s];
                unsigned __int128 sum = add + next[r + s];
                next[r + s] = sum > kSat ? kSat : static_cast<std::uint64_t>(sum);
            }
        }
        ways = std::move(next);
    }
    unsigned __int128 total = 0;
    for (std::uint64_t r = 0; r <= t; ++r) total += ways[r];
    return total > kSat ? kSat : static_cast<std::uint64_t>(total);
}

} // namespace fpgrid

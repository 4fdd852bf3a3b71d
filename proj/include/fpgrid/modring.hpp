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
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fpgrid/gaussian.hpp"

namespace fpgrid {

/// Largest supported modulus. Keeps trial-division validation and the
/// square-test exponent (m^2 - 1)/2 comfortably inside 64 bits.
inline constexpr std::uint64_t kMaxModulus = 1'000'000'000;

inline bool is_prime_by_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

enum class ModulusKind {
    prime_3mod4, // m is a validated prime congruent to 3 mod 4; Z[i]/(m) is a field
    general      // any m >= 2; Z[i]/(m) is only a ring
};

/// A validated modulus for the quotient ring Z[i]/(m). Field-only
/// operations are gated on kind() == ModulusKind::prime_3mod4.
class Modulus {
public:
    static Modulus prime_3mod4(std::uint64_t p) {
        validate_range(p);
        if (p % 4 != 3)
            throw std::invalid_argument("modulus " + std::to_string(p) +
                                        " is not congruent to 3 mod 4");
        if (!is_prime_by_trial_division(p))
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        return Modulus(p, ModulusKind::prime_3mod4);
    }

    static Modulus general(std::uint64_t m) {
        validate_range(m);
        return Modulus(m, ModulusKind::general);
    }

    std::uint64_t value() const { return m_; }
    ModulusKind kind() const { return kind_; }
    bool is_field() const { return kind_ == ModulusKind::prime_3mod4; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    Modulus(std::uint64_t m, ModulusKind kind) : m_(m), kind_(kind) {}

    static void validate_range(std::uint64_t m) {
        if (m < 2) throw std::invalid_argument("modulus must be at least 2");
        if (m > kMaxModulus)
            throw std::invalid_argument("modulus " + std::to_string(m) + " exceeds supported range");
    }

    std::uint64_t m_;
    ModulusKind kind_;
};

/// Cycle-graph distance of the canonical residue x from 0 in C_m: min(x, m-x).
inline std::uint64_t cycle_norm(std::uint64_t x, std::uint64_t m) {
    return x <= m - x ? x : m - x;
}

namespace detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b; // a, b < m <= 1e9, no wrap
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Inverse of a modulo m via extended Euclid; 0 when gcd(a, m) != 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return 0;
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace detail

/// An element of Z[i]/(m) in canonical form: both components reduced into
/// [0, m). When the modulus is a prime congruent to 3 mod 4 this is the
/// field of m^2 elements; elements with im == 0 form the prime subfield.
class Fp2Elem {
public:
    /// Reduces arbitrary integer components into canonical range.
    Fp2Elem(const Modulus& mod, std::int64_t re, std::int64_t im = 0)
        : mod_(mod), re_(reduce(re, mod.value())), im_(reduce(im, mod.value())) {}

    static Fp2Elem zero(const Modulus& mod) { return Fp2Elem(mod, 0, 0); }
    static Fp2Elem one(const Modulus& mod) { return Fp2Elem(mod, 1, 0); }
    static Fp2Elem i(const Modulus& mod) { return Fp2Elem(mod, 0, 1); }

    std::uint64_t re() const { return re_; }
    std::uint64_t im() const { return im_; }
    const Modulus& modulus() const { return mod_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool in_prime_subring() const { return im_ == 0; }

    friend bool operator==(const Fp2Elem& a, const Fp2Elem& b) {
        return a.mod_ == b.mod_ && a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend Fp2Elem operator+(const Fp2Elem& a, const Fp2Elem& b) {
        a.require_same_modulus(b);
        std::uint64_t m = a.mod_.value();
        return Fp2Elem(a.mod_, detail::add_mod(a.re_, b.re_, m), detail::add_mod(a.im_, b.im_, m));
    }

    friend Fp2Elem operator-(const Fp2Elem& a, const Fp2Elem& b) {
        a.require_same_modulus(b);
        std::uint64_t m = a.mod_.value();
        return Fp2Elem(a.mod_, detail::sub_mod(a.re_, b.re_, m), detail::sub_mod(a.im_, b.im_, m));
    }

    friend Fp2Elem operator-(const Fp2Elem& a) {
        std::uint64_t m = a.mod_.value();
        return Fp2Elem(a.mod_, detail::sub_mod(0, a.re_, m), detail::sub_mod(0, a.im_, m));
    }

    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    friend Fp2Elem operator*(const Fp2Elem& a, const Fp2Elem& b) {
        a.require_same_modulus(b);
        std::uint64_t m = a.mod_.value();
        std::uint64_t re = detail::sub_mod(detail::mul_mod(a.re_, b.re_, m),
                                           detail::mul_mod(a.im_, b.im_, m), m);
        std::uint64_t im = detail::add_mod(detail::mul_mod(a.re_, b.im_, m),
                                           detail::mul_mod(a.im_, b.re_, m), m);
        return Fp2Elem(a.mod_, re, im);
    }

    Fp2Elem conjugate() const {
        return Fp2Elem(mod_, re_, detail::sub_mod(0, im_, mod_.value()));
    }

    Fp2Elem pow(std::uint64_t exp) const {
        Fp2Elem result = one(mod_);
        Fp2Elem base = *this;
        while (exp > 0) {
            if (exp & 1) result = result * base;
            base = base * base;
            exp >>= 1;
        }
        return result;
    }

    /// Multiplicative inverse. The element a+bi is a unit exactly when its
    /// integer norm a^2+b^2 is invertible mod m; then
    /// (a+bi)^-1 = conjugate * (a^2+b^2)^-1.
    Fp2Elem inverse() const {
        if (is_zero()) throw std::domain_error("Fp2Elem: zero has no inverse");
        std::uint64_t m = mod_.value();
        std::uint64_t n = detail::add_mod(detail::mul_mod(re_, re_, m),
                                          detail::mul_mod(im_, im_, m), m);
        std::uint64_t n_inv = n == 0 ? 0 : detail::inverse_mod(n, m);
        if (n_inv == 0)
            throw std::domain_error("Fp2Elem: element is not a unit modulo " + std::to_string(m));
        Fp2Elem c = conjugate();
        return Fp2Elem(mod_, static_cast<std::int64_t>(detail::mul_mod(c.re_, n_inv, m)),
                       static_cast<std::int64_t>(detail::mul_mod(c.im_, n_inv, m)));
    }

    /// Distance from 0 in the grid graph with unit steps {1, -1, i, -i};
    /// closed form min(re, m-re) + min(im, m-im). Over a field modulus the
    /// steps are exactly the solutions of (z-u)^4 = 1; composite moduli
    /// admit extra quartic roots ((1+2i)^4 = 1 mod 4), so there the step
    /// set is the definition.
    std::uint64_t manhattan_norm() const {
        std::uint64_t m = mod_.value();
        return cycle_norm(re_, m) + cycle_norm(im_, m);
    }

    /// True iff some w satisfies w^2 == *this. Requires a field modulus.
    /// Decided by the criterion a^((q-1)/2) == 1 for a != 0, q = m^2.
    bool is_square() const {
        if (!mod_.is_field())
            throw std::domain_error("Fp2Elem: squareness test requires a prime modulus");
        if (is_zero()) return true;
        std::uint64_t m = mod_.value();
        return pow((m * m - 1) / 2) == one(mod_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp2Elem& z) {
        if (z.im_ == 0) return os << z.re_;
        return os << z.re_ << "+" << z.im_ << "i";
    }

private:
    void require_same_modulus(const Fp2Elem& other) const {
        if (!(mod_ == other.mod_))
            throw std::invalid_argument("Fp2Elem: operands have different moduli");
    }

    static std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
        std::int64_t r = v % static_cast<std::int64_t>(m);
        if (r < 0) r += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r);
    }

    Modulus mod_;
    std::uint64_t re_;
    std::uint64_t im_;
};

/// Component-wise reduction of a Gaussian integer; the canonical ring
/// homomorphism Z[i] -> Z[i]/(m).
inline Fp2Elem project(const GaussianInt& z, const Modulus& mod) {
    return Fp2Elem(mod, z.re(), z.im());
}

} // namespace fpgrid

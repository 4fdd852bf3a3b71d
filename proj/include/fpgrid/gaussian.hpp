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
#include <ostream>
#include <stdexcept>

namespace fpgrid {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("GaussianInt: addition overflows 64-bit component");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("GaussianInt: subtraction overflows 64-bit component");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("GaussianInt: multiplication overflows 64-bit component");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// |v| as an unsigned value; well-defined for INT64_MIN.
inline std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1u : static_cast<std::uint64_t>(v);
}

} // namespace detail

/// A Gaussian integer a + bi with exact, overflow-checked 64-bit components.
/// Every arithmetic operation either returns the exact result or throws
/// std::overflow_error; values never wrap silently.
class GaussianInt {
public:
    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t re, std::int64_t im = 0) : re_(re), im_(im) {}

    constexpr std::int64_t re() const { return re_; }
    constexpr std::int64_t im() const { return im_; }

    constexpr bool is_zero() const { return re_ == 0 && im_ == 0; }

    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {detail::checked_add(a.re_, b.re_), detail::checked_add(a.im_, b.im_)};
    }

    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {detail::checked_sub(a.re_, b.re_), detail::checked_sub(a.im_, b.im_)};
    }

    friend GaussianInt operator-(const GaussianInt& a) {
        return {detail::checked_neg(a.re_), detail::checked_neg(a.im_)};
    }

    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        std::int64_t re = detail::checked_sub(detail::checked_mul(a.re_, b.re_),
                                              detail::checked_mul(a.im_, b.im_));
        std::int64_t im = detail::checked_add(detail::checked_mul(a.re_, b.im_),
                                              detail::checked_mul(a.im_, b.re_));
        return {re, im};
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        os << z.re_;
        if (z.im_ >= 0)
            os << "+" << z.im_ << "i";
        else
            os << z.im_ << "i";
        return os;
    }

private:
    std::int64_t re_ = 0;
    std::int64_t im_ = 0;
};

inline GaussianInt conjugate(const GaussianInt& z) {
    return {z.re(), detail::checked_neg(z.im())};
}

/// Distance of z from 0 in the grid whose unit steps are the fourth roots
/// of unity {1, -1, i, -i}; closed form |re| + |im|.
inline std::uint64_t grid_norm(const GaussianInt& z) {
    std::uint64_t r;
    if (__builtin_add_overflow(detail::abs_u64(z.re()), detail::abs_u64(z.im()), &r))
        throw std::overflow_error("GaussianInt: norm overflows 64 bits");
    return r;
}

} // namespace fpgrid

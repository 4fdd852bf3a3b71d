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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpgrid/modring.hpp"

namespace fpgrid {

/// A nonempty tuple of ring elements sharing one modulus. Vectors are
/// immutable after construction.
class HVector {
public:
    explicit HVector(std::vector<Fp2Elem> components);
    static HVector zero(const Modulus& mod, std::size_t n);

    std::size_t size() const { return components_.size(); }
    const Fp2Elem& operator[](std::size_t j) const { return components_[j]; }
    const std::vector<Fp2Elem>& components() const { return components_; }
    const Modulus& modulus() const { return components_.front().modulus(); }
    bool is_zero() const;

    friend bool operator==(const HVector&, const HVector&) = default;
    friend HVector operator+(const HVector& v, const HVector& w);

private:
    std::vector<Fp2Elem> components_;
};

/// Component-wise scaling cv.
HVector scalar_mul(const Fp2Elem& c, const HVector& v);

/// The sesquilinear product v.w = sum of v_j * conjugate(w_j). Conjugation
/// sits on the second argument, so v.w equals conjugate(w.v).
Fp2Elem inner_product(const HVector& v, const HVector& w);

/// Sum of the component norms; the distance of v from 0 in the product
/// grid graph.
std::uint64_t vector_norm(const HVector& v);

/// v.v as a canonical prime-subfield scalar. v.v always lands in the
/// subfield; a nonzero imaginary part indicates an arithmetic bug and
/// throws std::logic_error. Requires a field modulus.
std::uint64_t self_product_value(const HVector& v);

/// (v.v)(w.w) - (v.w)(w.v) as a canonical prime-subfield scalar; the
/// quantity whose squareness is the two-sided comparison in the residue
/// tournament. Debug builds cross-check the product form against the
/// pairwise sum below. Requires a field modulus.
std::uint64_t cs_difference(const HVector& v, const HVector& w);

/// The same scalar as the sum over i < j of |v_i w_j - v_j w_i|^2 where
/// |z|^2 = z * conjugate(z); the two evaluations agree identically.
std::uint64_t cs_difference_pair_sum(const HVector& v, const HVector& w);

/// True iff v = cw or w = cv for some scalar c. The zero vector is
/// proportional to everything (c = 0). Decided over a field by vanishing
/// of every 2x2 minor, then confirmed by recovering the scalar witness.
bool is_proportional(const HVector& v, const HVector& w);

/// True iff manhattan_norm(v.w) <= vector_norm(v) * vector_norm(w). Valid
/// for any modulus kind, composite included.
bool norm_submultiplicativity_check(const HVector& v, const HVector& w);

/// The two explicit families that defeat the two-sided norm comparison.
enum class CounterexampleKind {
    complex_n2, // v = (a,b,0,..), w = (bz,-az,0,..) with z = a+bi, a^2+b^2 = -1
    real_n3     // v = (1,a,b,0,..), w = (1,0,..,0), subfield components only
};

/// Stable names "complex-n2" / "real-n3" used by the CLI and reports.
std::string to_text(CounterexampleKind kind);
std::optional<CounterexampleKind> counterexample_kind_from_text(std::string_view text);

/// Lexicographically smallest (a, b) in [0,p)^2 with a^2 + b^2 = -1 mod p.
/// Always solvable: every element of F_p is a sum of two squares.
std::pair<std::uint64_t, std::uint64_t> sum_of_two_squares_of_minus_one(const Modulus& p);

/// Builds the requested family at length n; complex_n2 needs n >= 2,
/// real_n3 needs n >= 3. For both, cs_difference(v, w) = -1, a
/// non-residue, so (v.w)(w.v) and (v.v)(w.w) compare the wrong way.
std::pair<HVector, HVector> counterexample_pair(CounterexampleKind kind, const Modulus& p,
                                                std::size_t n);

/// All ring elements of norm <= t, ordered by norm, then (re, im).
std::vector<Fp2Elem> norm_ball(const Modulus& mod, std::uint64_t t);

/// Calls fn with every vector of length n and norm <= t, in lexicographic
/// order of the per-coordinate ball positions. Enumeration prunes on the
/// remaining norm budget, so the cost is the output size, not m^(2n).
void for_each_vector_of_norm_at_most(const Modulus& mod, std::size_t n, std::uint64_t t,
                                     const std::function<void(const HVector&)>& fn);

/// Number of vectors the enumeration above visits, computed by dynamic
/// programming (no materialization); saturates at 2^63 - 1.
std::uint64_t norm_ball_vector_count(const Modulus& mod, std::size_t n, std::uint64_t t);

} // namespace fpgrid

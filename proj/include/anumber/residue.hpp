/*
   Copyright 2026 The anumber Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ANUMBER_RESIDUE_HPP
#define ANUMBER_RESIDUE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

/**
 * Monomial residue calculus for the Fermat hypersurface x_0^d + ... + x_r^d = 0.
 *
 * A class c * x^w with all w_i >= 1 and sum(w) = gamma * d stands for the
 * residue of c * x^w / f^gamma times the logarithmic volume form. On a
 * diagonal equation the Jacobian relations collapse to the single rewrite
 *
 *     x_i^d * x^v  ==  -(v_i / d) * x^v      (pole order drops by one)
 *
 * so every class reduces to a scalar multiple of a monomial with all
 * exponents in [1, d-1], or to zero. Scalars carry only the product of these
 * rewrite factors; the per-pole-order normalization of the residue map is a
 * unit that is deliberately left out, so only zero/nonzero and ratios within
 * one pole order are meaningful.
 */
namespace anumber {

/// Exponents w_0..w_r of a monomial in the residue model, with the degree d.
class ExponentVector {
   public:
    ExponentVector() = default;

    ExponentVector(std::vector<std::uint64_t> entries, std::uint32_t degree)
        : w_(std::move(entries)), d_(degree) {
        if (d_ < 2) throw domain_error("degree must be at least 2");
        if (w_.empty()) throw domain_error("exponent vector has no coordinates");
        for (auto x : w_)
            if (x == 0) throw domain_error("exponent vector has a zero entry");
        if (sum() % d_ != 0) throw domain_error("exponent sum is not divisible by the degree");
    }

    const std::vector<std::uint64_t>& entries() const noexcept { return w_; }
    std::uint32_t degree() const noexcept { return d_; }
    std::size_t size() const noexcept { return w_.size(); }
    std::uint64_t operator[](std::size_t i) const { return w_[i]; }

    std::uint64_t sum() const noexcept { return std::accumulate(w_.begin(), w_.end(), std::uint64_t{0}); }
    std::uint64_t pole_order() const noexcept { return d_ == 0 ? 0 : sum() / d_; }

    /// All entries in [1, d-1].
    bool is_reduced() const noexcept {
        return !w_.empty() && std::all_of(w_.begin(), w_.end(), [&](auto x) { return x >= 1 && x < d_; });
    }

    auto operator<=>(const ExponentVector&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const ExponentVector& w) {
        os << '(';
        for (std::size_t i = 0; i < w.w_.size(); ++i) os << (i ? "," : "") << w.w_[i];
        return os << ')';
    }

   private:
    std::vector<std::uint64_t> w_;
    std::uint32_t d_ = 0;
};

/// scalar * x^w in the residue model. scalar == 0 marks the zero class, whose
/// exponents are meaningless.
struct MonomialClass {
    ExponentVector exponents;
    FpScalar scalar;
    std::uint64_t pole_order = 0;

    static MonomialClass zero(PrimeField field) { return {ExponentVector{}, FpScalar(field, 0), 0}; }

    static MonomialClass unit(ExponentVector w, PrimeField field) {
        const auto g = w.pole_order();
        return {std::move(w), FpScalar(field, 1), g};
    }

    bool is_zero() const noexcept { return scalar.is_zero(); }

    bool operator==(const MonomialClass& rhs) const {
        if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero() && scalar.field() == rhs.scalar.field();
        return exponents == rhs.exponents && scalar == rhs.scalar && pole_order == rhs.pole_order;
    }
};

/// Index j of the Hodge step F^j; j = (n + 1) - pole order.
struct HodgePosition {
    std::uint64_t step = 0;
    bool operator==(const HodgePosition&) const = default;
};

namespace detail {

inline void require_coprime(std::uint32_t d, PrimeField field) {
    if (d % field.p() == 0) throw invalid_characteristic();
}

/// Reduces one coordinate in place and multiplies the accumulated scalar.
/// Returns false once the scalar hits zero.
inline bool reduce_coordinate(std::uint64_t& e, std::uint32_t d, FpScalar neg_inv_d, FpScalar& scalar) {
    const auto field = scalar.field();
    while (e >= d) {
        e -= d;
        scalar *= FpScalar(field, e) * neg_inv_d;
        if (scalar.is_zero()) return false;
    }
    return true;
}

}  // namespace detail

/**
 * Rewrites x^w to c * x^{w'} with every w'_i in [1, d-1].
 *
 * Each step e -> e - d on a coordinate contributes the factor -(e - d)/d. A
 * coordinate with w_i == 0 (mod d) ends at exponent 0, whose factor is zero,
 * so the result is the zero class. Coordinates are processed from the
 * largest exponent down; the result does not depend on the order.
 */
inline MonomialClass reduce_class(const ExponentVector& w, PrimeField field) {
    const std::uint32_t d = w.degree();
    if (d == 0) throw domain_error("reduce_class: empty exponent vector");
    detail::require_coprime(d, field);

    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return w[a] > w[b]; });

    const FpScalar neg_inv_d = -FpScalar(field, d).inverse();
    std::vector<std::uint64_t> out = w.entries();
    FpScalar scalar(field, 1);
    for (auto i : order)
        if (!detail::reduce_coordinate(out[i], d, neg_inv_d, scalar)) return MonomialClass::zero(field);

    ExponentVector reduced(std::move(out), d);
    const auto g = reduced.pole_order();
    return {std::move(reduced), scalar, g};
}

inline HodgePosition hodge_step(const MonomialClass& c, std::uint64_t n) {
    if (c.is_zero()) throw domain_error("the zero class has no Hodge position");
    if (!c.exponents.is_reduced()) throw domain_error("hodge_step expects a reduced class");
    if (c.pole_order < 1 || c.pole_order > n + 1)
        throw domain_error("pole order " + std::to_string(c.pole_order) + " outside [1, " + std::to_string(n + 1) + "]");
    return {n + 1 - c.pole_order};
}

/**
 * Image of a reduced class under absolute Frobenius: raise x^w / f^gamma to
 * the p-th power and reduce the pole order again. The input scalar is raised
 * to the p-th power (Frobenius is p-linear).
 *
 * A zero result would contradict the nonvanishing of the reduction scalar for
 * p coprime to d; callers treat it as an anomaly.
 */
inline MonomialClass frobenius_image(const MonomialClass& c, PrimeField field) {
    if (c.is_zero()) throw domain_error("frobenius_image of the zero class");
    if (!c.exponents.is_reduced()) throw domain_error("frobenius_image expects a reduced class");
    if (!(c.scalar.field() == field)) throw input_error("class scalar lives in a different prime field");
    detail::require_coprime(c.exponents.degree(), field);

    std::vector<std::uint64_t> raised = c.exponents.entries();
    for (auto& x : raised) x *= field.p();
    MonomialClass image = reduce_class(ExponentVector(std::move(raised), c.exponents.degree()), field);
    if (!image.is_zero()) image.scalar *= c.scalar.pow(field.p());
    return image;
}

/// Exponent part of frobenius_image: w_i -> (p * w_i mod d), no scalars.
inline ExponentVector frobenius_exponents(const ExponentVector& w, std::uint32_t p) {
    std::vector<std::uint64_t> out = w.entries();
    for (auto& x : out) x = (x * p) % w.degree();
    return ExponentVector(std::move(out), w.degree());
}

}  // namespace anumber

#endif

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

#ifndef ANUMBER_POLYNOMIAL_HPP
#define ANUMBER_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "prime_field.hpp"

namespace anumber {

/// Dense univariate polynomial over F_p, coefficients indexed by exponent.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class FpPolynomial {
   public:
    explicit FpPolynomial(PrimeField field) : field_(field) {}

    FpPolynomial(PrimeField field, std::vector<std::int64_t> coeffs) : field_(field) {
        c_.reserve(coeffs.size());
        for (auto x : coeffs) c_.push_back(FpScalar::from_signed(field, x).value());
        trim();
    }

    /// c * alpha^e
    static FpPolynomial monomial(FpScalar c, std::size_t e) {
        FpPolynomial f(c.field());
        if (c.is_zero()) return f;
        f.c_.assign(e + 1, 0);
        f.c_[e] = c.value();
        return f;
    }

    PrimeField field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree; the zero polynomial reports nullopt.
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    FpScalar coefficient(std::size_t e) const { return FpScalar(field_, e < c_.size() ? c_[e] : 0); }

    void set_coefficient(std::size_t e, FpScalar x) {
        if (e >= c_.size()) c_.resize(e + 1, 0);
        c_[e] = x.value();
        trim();
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (c_[e] != 0) s.push_back(e);
        return s;
    }

    /// Exponent -> coefficient for the nonzero terms.
    std::map<std::size_t, std::uint32_t> terms() const {
        std::map<std::size_t, std::uint32_t> t;
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (c_[e] != 0) t.emplace(e, c_[e]);
        return t;
    }

    FpScalar operator()(FpScalar x) const {
        FpScalar acc(field_, 0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + FpScalar(field_, c_[k]);
        return acc;
    }

    FpPolynomial operator+(const FpPolynomial& rhs) const {
        FpPolynomial out(field_);
        out.c_.assign(std::max(c_.size(), rhs.c_.size()), 0);
        for (std::size_t e = 0; e < out.c_.size(); ++e) out.c_[e] = (coefficient(e) + rhs.coefficient(e)).value();
        out.trim();
        return out;
    }

    FpPolynomial operator-() const {
        FpPolynomial out(*this);
        for (auto& x : out.c_) x = (-FpScalar(field_, x)).value();
        return out;
    }

    FpPolynomial operator-(const FpPolynomial& rhs) const { return *this + (-rhs); }

    FpPolynomial operator*(const FpPolynomial& rhs) const {
        if (!(field_ == rhs.field_)) throw input_error("multiplying polynomials over different prime fields");
        FpPolynomial out(field_);
        if (is_zero() || rhs.is_zero()) return out;
        const std::uint64_t p = field_.p();
        std::vector<std::uint64_t> acc(c_.size() + rhs.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * rhs.c_[j]) % p;
        }
        out.c_.assign(acc.begin(), acc.end());
        out.trim();
        return out;
    }

    FpPolynomial operator*(FpScalar s) const {
        FpPolynomial out(field_);
        out.c_.reserve(c_.size());
        for (auto x : c_) out.c_.push_back((FpScalar(field_, x) * s).value());
        out.trim();
        return out;
    }

    FpPolynomial& operator+=(const FpPolynomial& rhs) { return *this = *this + rhs; }
    FpPolynomial& operator*=(const FpPolynomial& rhs) { return *this = *this * rhs; }

    /// f(c * alpha)
    FpPolynomial substitute_scaled(FpScalar c) const {
        FpPolynomial out(field_);
        out.c_ = c_;
        FpScalar power(field_, 1);
        for (auto& x : out.c_) {
            x = (FpScalar(field_, x) * power).value();
            power *= c;
        }
        out.trim();
        return out;
    }

    bool operator==(const FpPolynomial&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const FpPolynomial& f) {
        if (f.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t e = f.c_.size(); e-- > 0;) {
            if (f.c_[e] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (f.c_[e] != 1 || e == 0) os << f.c_[e];
            if (e > 0) os << (f.c_[e] != 1 ? "*" : "") << "a" << (e > 1 ? "^" + std::to_string(e) : "");
        }
        return os;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField field_;
    std::vector<std::uint32_t> c_;
};

/// Order of vanishing at 0: the smallest exponent with a nonzero coefficient.
/// nullopt stands for infinity (the zero polynomial).
inline std::optional<std::size_t> poly_ord0(const FpPolynomial& f) {
    const auto s = f.support();
    if (s.empty()) return std::nullopt;
    return s.front();
}

/// Roots in F_p by evaluating at every residue.
inline std::vector<FpScalar> poly_roots_in_fp(const FpPolynomial& f) {
    if (f.is_zero()) throw domain_error("root set of the zero polynomial is all of F_p");
    std::vector<FpScalar> roots;
    for (std::uint32_t a = 0; a < f.field().p(); ++a) {
        const FpScalar x(f.field(), a);
        if (f(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

}  // namespace anumber

#endif

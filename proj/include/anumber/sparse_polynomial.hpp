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

#ifndef ANUMBER_SPARSE_POLYNOMIAL_HPP
#define ANUMBER_SPARSE_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace anumber {

using Monomial = std::vector<std::uint32_t>;

/**
 * Sparse multivariate polynomial with coefficients in a commutative ring.
 *
 * Coeff must provide operator+, operator*, is_zero() and be copyable. The
 * coefficient ring is supplied through a zero element so that rings with a
 * runtime parameter (F_p, F_p[alpha]) work.
 */
template <class Coeff>
class SparsePolynomial {
   public:
    SparsePolynomial(std::size_t nvars, Coeff zero) : nvars_(nvars), zero_(std::move(zero)) {}

    std::size_t variables() const noexcept { return nvars_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Monomial, Coeff>& terms() const noexcept { return terms_; }

    void add_term(const Monomial& m, const Coeff& c) {
        if (m.size() != nvars_) throw shape_error("monomial has the wrong number of variables");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }

    SparsePolynomial operator*(const SparsePolynomial& rhs) const {
        if (rhs.nvars_ != nvars_) throw shape_error("multiplying polynomials in different rings");
        SparsePolynomial out(nvars_, zero_);
        Monomial m(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    /// Repeated multiplication; keeps intermediate sizes small for sparse f.
    SparsePolynomial pow(std::uint64_t e, const Coeff& one) const {
        SparsePolynomial out(nvars_, zero_);
        out.add_term(Monomial(nvars_, 0), one);
        for (std::uint64_t k = 0; k < e; ++k) out = out * *this;
        return out;
    }

   private:
    std::size_t nvars_;
    Coeff zero_;
    std::map<Monomial, Coeff> terms_;
};

}  // namespace anumber

#endif

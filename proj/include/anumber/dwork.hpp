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

#ifndef ANUMBER_DWORK_HPP
#define ANUMBER_DWORK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "sparse_polynomial.hpp"

/**
 * The Dwork quintic family X_alpha : sum x_i^5 - 5 alpha x_0 x_1 x_2 x_3 x_4 = 0
 * over F_p (coordinates are 0-based here; nothing depends on the labeling).
 */
namespace anumber {

class DworkFamily {
   public:
    explicit DworkFamily(PrimeField field) : field_(field) {
        if (field.p() == 5) throw invalid_characteristic("the Dwork quintic family needs p != 5");
    }

    PrimeField field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_.p(); }

   private:
    PrimeField field_;
};

struct HassePolynomialReport {
    FpPolynomial polynomial;
    std::optional<std::size_t> ord0;
    std::size_t degree = 0;
    std::vector<FpScalar> fp_roots;
    std::uint64_t a_number_at_alpha0 = 0;
};

/// H(alpha) = sum_{m=0}^{(p-1)/5} (5m)! / (m!)^5 * alpha^{p-1-5m}  (mod p)
inline FpPolynomial hasse_polynomial_of(const DworkFamily& fam) {
    const PrimeField F = fam.field();
    const std::uint64_t top = fam.p() - 1;
    FpPolynomial h(F);
    for (std::uint64_t m = 0; 5 * m <= top; ++m) {
        const FpScalar c = factorial_mod(5 * m, F) / factorial_mod(m, F).pow(5);
        h += FpPolynomial::monomial(c, top - 5 * m);
    }
    return h;
}

inline HassePolynomialReport hasse_polynomial(const DworkFamily& fam) {
    HassePolynomialReport rep{hasse_polynomial_of(fam), std::nullopt, 0, {}, 0};
    rep.ord0 = poly_ord0(rep.polynomial);
    rep.degree = rep.polynomial.degree().value_or(0);
    rep.fp_roots = poly_roots_in_fp(rep.polynomial);
    if (!rep.ord0) throw internal_assertion("Hasse polynomial vanished identically");
    rep.a_number_at_alpha0 = *rep.ord0;
    return rep;
}

/// a(X_0) read off as the order of vanishing of H at alpha = 0.
inline std::uint64_t a_number_alpha0(const DworkFamily& fam) { return hasse_polynomial(fam).a_number_at_alpha0; }

/**
 * Coefficient of (x_0...x_4)^{p-1} in f^{p-1}, as a polynomial in alpha, by
 * the multinomial expansion
 *     sum_m (p-1)! / ((p-1-5m)! (m!)^5) * (-5)^{p-1-5m} * alpha^{p-1-5m}.
 */
inline FpPolynomial hw_oracle(const DworkFamily& fam) {
    const PrimeField F = fam.field();
    const std::uint64_t top = fam.p() - 1;
    const FpScalar minus_five = FpScalar::from_signed(F, -5);
    FpPolynomial h(F);
    for (std::uint64_t m = 0; 5 * m <= top; ++m) {
        const std::uint64_t j = top - 5 * m;
        const FpScalar c =
            factorial_mod(top, F) / (factorial_mod(j, F) * factorial_mod(m, F).pow(5)) * minus_five.pow(j);
        h += FpPolynomial::monomial(c, j);
    }
    return h;
}

inline constexpr std::uint32_t sparse_oracle_max_prime = 13;

/**
 * Same coefficient as hw_oracle, by literally expanding f^{p-1} in
 * F_p[alpha][x_0..x_4]. The term count grows quickly, so p is capped.
 */
inline FpPolynomial hw_oracle_sparse(const DworkFamily& fam, std::uint32_t max_prime = sparse_oracle_max_prime) {
    const PrimeField F = fam.field();
    if (fam.p() > max_prime)
        throw not_applicable("sparse expansion is limited to p <= " + std::to_string(max_prime));
    const FpPolynomial zero(F);
    const FpPolynomial one = FpPolynomial::monomial(FpScalar(F, 1), 0);

    SparsePolynomial<FpPolynomial> f(5, zero);
    for (std::size_t i = 0; i < 5; ++i) {
        Monomial m(5, 0);
        m[i] = 5;
        f.add_term(m, one);
    }
    f.add_term(Monomial(5, 1), FpPolynomial::monomial(FpScalar::from_signed(F, -5), 1));

    const std::uint64_t e = fam.p() - 1;
    return f.pow(e, one).coefficient(Monomial(5, static_cast<std::uint32_t>(e)));
}

/// Units c with g(alpha) = h(c * alpha), ascending.
inline std::vector<FpScalar> fit_substitution(const FpPolynomial& g, const FpPolynomial& h) {
    std::vector<FpScalar> fits;
    for (std::uint32_t c = 1; c < h.field().p(); ++c) {
        const FpScalar unit(h.field(), c);
        if (h.substitute_scaled(unit) == g) fits.push_back(unit);
    }
    return fits;
}

/// Comparison of the Hasse polynomial against the coefficient-extraction oracle.
struct OracleComparison {
    FpPolynomial oracle;
    std::optional<bool> sparse_agrees;  // nullopt when p is above the sparse cap
    bool same_support = false;
    bool same_ord0 = false;
    std::vector<FpScalar> fitted_units;
    bool expected_unit_fits = false;  // 5 mod p is among the fitted units
};

inline OracleComparison compare_with_oracle(const DworkFamily& fam, const FpPolynomial& h) {
    OracleComparison cmp{hw_oracle(fam), std::nullopt, false, false, {}, false};
    if (fam.p() <= sparse_oracle_max_prime) cmp.sparse_agrees = hw_oracle_sparse(fam) == cmp.oracle;
    cmp.same_support = cmp.oracle.support() == h.support();
    cmp.same_ord0 = poly_ord0(cmp.oracle) == poly_ord0(h);
    cmp.fitted_units = fit_substitution(cmp.oracle, h);
    const FpScalar five(fam.field(), 5);
    for (const auto& c : cmp.fitted_units) cmp.expected_unit_fits = cmp.expected_unit_fits || c == five;
    return cmp;
}

/// alpha in F_p with H(alpha) = 0. Only F_p-rational members are found.
inline std::vector<FpScalar> nonordinary_locus(const DworkFamily& fam) {
    return poly_roots_in_fp(hasse_polynomial_of(fam));
}

}  // namespace anumber

#endif

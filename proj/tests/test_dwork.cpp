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

#include <gtest/gtest.h>

#include <vector>

#include <anumber/anumber.hpp>

using namespace anumber;

namespace {

std::vector<std::uint32_t> values(const std::vector<FpScalar>& xs) {
    std::vector<std::uint32_t> v;
    for (auto x : xs) v.push_back(x.value());
    return v;
}

DworkFamily family(std::uint32_t p) { return DworkFamily(PrimeField(p)); }

}  // namespace

TEST(Dwork, RejectsFive) { EXPECT_THROW(family(5), invalid_characteristic); }

TEST(HassePolynomial, Examples) {
    const auto h7 = hasse_polynomial(family(7));
    EXPECT_EQ(h7.polynomial, FpPolynomial(PrimeField(7), {0, 1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(h7.ord0, 1u);
    EXPECT_EQ(h7.degree, 6u);
    EXPECT_EQ(values(h7.fp_roots), (std::vector<std::uint32_t>{0, 6}));

    // constant term 10!/(2!)^5 = 113400 = 1 mod 11
    const auto h11 = hasse_polynomial(family(11));
    EXPECT_EQ(h11.polynomial, FpPolynomial(PrimeField(11), {1, 0, 0, 0, 0, 10, 0, 0, 0, 0, 1}));
    EXPECT_EQ(h11.ord0, 0u);
    EXPECT_TRUE(h11.fp_roots.empty());

    // m = 1: 5!/(1!)^5 = 120 = 3 mod 13; m = 2: 10!/(2!)^5 = 113400 = 1 mod 13
    const auto h13 = hasse_polynomial(family(13));
    EXPECT_EQ(h13.polynomial.terms(), (std::map<std::size_t, std::uint32_t>{{2, 1}, {7, 3}, {12, 1}}));
    EXPECT_EQ(h13.ord0, 2u);

    for (auto p : primes_in_range(2, 400))
        if (p % 5 == 1) {
            EXPECT_EQ(*hasse_polynomial(family(p)).ord0 % 5, 0u);
        }
}

TEST(HassePolynomial, DegreeSupportAndLeadingCoefficient) {
    for (auto p : primes_in_range(2, 499)) {
        if (p == 5) continue;
        const auto rep = hasse_polynomial(family(p));
        EXPECT_EQ(rep.degree, p - 1u);
        EXPECT_EQ(rep.polynomial.coefficient(p - 1).value(), 1u);
        for (auto e : rep.polynomial.support()) EXPECT_EQ(e % 5, (p - 1) % 5);
        EXPECT_EQ(*rep.ord0 % 5, (p - 1) % 5);
    }
}

TEST(ANumberAlpha0, Examples) {
    EXPECT_EQ(a_number_alpha0(family(7)), 1u);
    EXPECT_EQ(a_number_alpha0(family(11)), 0u);
    EXPECT_EQ(a_number_alpha0(family(19)), 3u);
}

TEST(ANumberAlpha0, EqualsFermatQuinticThreefold) {
    for (auto p : primes_in_range(2, 199)) {
        if (p == 5) continue;
        const auto fam = family(p);
        EXPECT_EQ(a_number_alpha0(fam), a_number(FermatDescriptor(5, 4, fam.field())).a_number) << p;
    }
}

TEST(HwOracle, Examples) {
    EXPECT_EQ(hw_oracle(family(7)).support(), (std::vector<std::size_t>{1, 6}));
    EXPECT_EQ(hw_oracle(family(11)).support(), (std::vector<std::size_t>{0, 5, 10}));
    const auto o3 = hw_oracle(family(3));
    EXPECT_EQ(o3.support(), (std::vector<std::size_t>{2}));
    EXPECT_EQ(poly_ord0(o3), 2u);
}

TEST(HwOracle, SparseExpansionAgrees) {
    for (auto p : {2u, 3u, 7u, 11u, 13u}) {
        const auto fam = family(p);
        EXPECT_EQ(hw_oracle_sparse(fam), hw_oracle(fam)) << p;
    }
    EXPECT_THROW(hw_oracle_sparse(family(17)), not_applicable);
}

TEST(HwOracle, IsHasseAtFiveAlpha) {
    for (auto p : primes_in_range(2, 199)) {
        if (p == 5) continue;
        const auto fam = family(p);
        const auto h = hasse_polynomial_of(fam);
        const auto cmp = compare_with_oracle(fam, h);
        EXPECT_EQ(cmp.oracle, h.substitute_scaled(FpScalar(fam.field(), 5))) << p;
        EXPECT_TRUE(cmp.same_support);
        EXPECT_TRUE(cmp.same_ord0);
        EXPECT_TRUE(cmp.expected_unit_fits);
        if (p <= sparse_oracle_max_prime) {
            EXPECT_EQ(cmp.sparse_agrees, true);
        } else {
            EXPECT_EQ(cmp.sparse_agrees, std::nullopt);
        }
    }
}

TEST(FitSubstitution, ReportsEveryUnit) {
    // support {2} over F_3: c^2 = 1 for both units
    const PrimeField F(3);
    const FpPolynomial f(F, {0, 0, 1});
    EXPECT_EQ(values(fit_substitution(f, f)), (std::vector<std::uint32_t>{1, 2}));
    const PrimeField G(7);
    const FpPolynomial g(G, {0, 1, 0, 0, 0, 0, 1});
    EXPECT_EQ(values(fit_substitution(g.substitute_scaled(FpScalar(G, 3)), g)), (std::vector<std::uint32_t>{3}));
    EXPECT_TRUE(fit_substitution(FpPolynomial(G, {1, 1}), g).empty());
}

TEST(NonordinaryLocus, Examples) {
    EXPECT_EQ(values(nonordinary_locus(family(7))), (std::vector<std::uint32_t>{0, 6}));
    EXPECT_TRUE(nonordinary_locus(family(11)).empty());
    for (auto p : primes_in_range(2, 100)) {
        if (p == 5) continue;
        const auto rep = hasse_polynomial(family(p));
        if (*rep.ord0 > 0) {
            EXPECT_EQ(values(nonordinary_locus(family(p))).front(), 0u);
        }
    }
}

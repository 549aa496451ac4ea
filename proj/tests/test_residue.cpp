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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <anumber/anumber.hpp>

using namespace anumber;

namespace {

using Vec = std::vector<std::uint64_t>;

ExponentVector ev(Vec w, std::uint32_t d) { return ExponentVector(std::move(w), d); }

// Applies single rewrite steps in a random coordinate order, one step at a
// time. Shares nothing with reduce_class beyond the field arithmetic.
MonomialClass reduce_randomly(const ExponentVector& w, PrimeField F, std::mt19937& rng) {
    const std::uint32_t d = w.degree();
    Vec e = w.entries();
    FpScalar c(F, 1);
    while (true) {
        std::vector<std::size_t> movable;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= d) movable.push_back(i);
        if (movable.empty()) break;
        const auto i = movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
        e[i] -= d;
        c *= -(FpScalar(F, e[i]) / FpScalar(F, d));
    }
    if (c.is_zero()) return MonomialClass::zero(F);
    ExponentVector out(e, d);
    const auto g = out.pole_order();
    return {out, c, g};
}

ExponentVector random_admissible(std::uint32_t d, std::size_t coords, std::uint64_t max_entry, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, max_entry);
    Vec w(coords);
    for (auto& x : w) x = dist(rng);
    std::uint64_t s = 0;
    for (auto x : w) s += x;
    w.back() += (d - s % d) % d;
    return ev(w, d);
}

}  // namespace

TEST(ExponentVector, Invariants) {
    EXPECT_THROW(ev({0, 5}, 5), domain_error);
    EXPECT_THROW(ev({1, 5}, 5), domain_error);
    EXPECT_THROW(ev({}, 5), domain_error);
    EXPECT_THROW(ev({1, 1}, 1), domain_error);
    const auto w = ev({4, 4, 4, 3}, 5);
    EXPECT_EQ(w.pole_order(), 3u);
    EXPECT_TRUE(w.is_reduced());
    EXPECT_FALSE(ev({8, 2}, 5).is_reduced());
}

TEST(ReduceClass, AlreadyReducedIsUnchanged) {
    const auto w = ev({4, 4, 4, 3}, 5);
    const auto c = reduce_class(w, PrimeField(7));
    EXPECT_EQ(c.exponents, w);
    EXPECT_EQ(c.scalar.value(), 1u);
    EXPECT_EQ(c.pole_order, 3u);
}

TEST(ReduceClass, QuinticSurfaceCharTwo) {
    // (-3/5)^3 (-1/5) in F_2
    const auto c = reduce_class(ev({8, 8, 8, 6}, 5), PrimeField(2));
    EXPECT_EQ(c.exponents, ev({3, 3, 3, 1}, 5));
    EXPECT_EQ(c.scalar.value(), 1u);
    EXPECT_EQ(c.pole_order, 2u);
}

TEST(ReduceClass, FrozenScalars) {
    // products of -(e - d)/d over the chains, evaluated with exact rationals
    struct Case {
        Vec w;
        std::uint32_t d, p;
        Vec reduced;
        std::uint32_t scalar;
    };
    const Case cases[] = {
        {{44, 44, 44, 33}, 5, 11, {4, 4, 4, 3}, 9},
        {{76, 76, 76, 57}, 5, 19, {1, 1, 1, 2}, 6},
        {{28, 28, 28, 28, 28}, 5, 7, {3, 3, 3, 3, 3}, 1},
        {{7, 3, 9, 1}, 5, 13, {2, 3, 4, 1}, 5},
        {{13, 2, 6, 4}, 5, 7, {3, 2, 1, 4}, 3},
    };
    for (const auto& k : cases) {
        const auto c = reduce_class(ev(k.w, k.d), PrimeField(k.p));
        EXPECT_EQ(c.exponents, ev(k.reduced, k.d));
        EXPECT_EQ(c.scalar.value(), k.scalar);
    }
}

TEST(ReduceClass, ZeroClass) {
    // coordinate divisible by d: last step multiplies by -(0/d)
    EXPECT_TRUE(reduce_class(ev({5, 5, 5, 5}, 5), PrimeField(3)).is_zero());
    EXPECT_TRUE(reduce_class(ev({10, 3, 2}, 5), PrimeField(3)).is_zero());
    // p divides an intermediate exponent (20 -> 17 -> 14, and 2 | 14)
    EXPECT_TRUE(reduce_class(ev({20, 4}, 3), PrimeField(2)).is_zero());
    EXPECT_EQ(reduce_class(ev({5, 5}, 5), PrimeField(3)), MonomialClass::zero(PrimeField(3)));
}

TEST(ReduceClass, Errors) {
    EXPECT_THROW(reduce_class(ev({8, 8, 8, 6}, 5), PrimeField(5)), invalid_characteristic);
    EXPECT_THROW(reduce_class(ExponentVector{}, PrimeField(5)), domain_error);
}

TEST(ReduceClass, IdempotentAndOrderIndependent) {
    std::mt19937 rng(2026);
    const std::uint32_t degrees[] = {2, 3, 4, 5, 6, 7, 8};
    const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13, 29, 97};
    int checked = 0;
    for (int t = 0; checked < 1000; ++t) {
        const auto d = degrees[t % 7];
        const auto p = primes[(t / 7) % 8];
        if (d % p == 0) continue;
        const PrimeField F(p);
        const auto w = random_admissible(d, 2 + t % 5, 40, rng);
        const auto c = reduce_class(w, F);
        EXPECT_EQ(c, reduce_randomly(w, F, rng)) << w;
        if (!c.is_zero()) {
            const auto again = reduce_class(c.exponents, F);
            EXPECT_EQ(again.exponents, c.exponents);
            EXPECT_EQ(again.scalar.value(), 1u);
            EXPECT_EQ(c.exponents.sum() % d, w.sum() % d);
            EXPECT_LE(c.pole_order, w.pole_order());
            EXPECT_EQ(c.pole_order == w.pole_order(), w.is_reduced());
        }
        ++checked;
    }
}

TEST(HodgeStep, Examples) {
    const PrimeField F(7);
    EXPECT_EQ(hodge_step(MonomialClass::unit(ev({4, 4, 4, 3}, 5), F), 2).step, 0u);
    EXPECT_EQ(hodge_step(MonomialClass::unit(ev({1, 1, 1, 2}, 5), F), 2).step, 2u);
    EXPECT_EQ(hodge_step(MonomialClass::unit(ev(Vec(9, 1), 3), F), 7).step, 5u);
    EXPECT_THROW(hodge_step(MonomialClass::zero(F), 2), domain_error);
    EXPECT_THROW(hodge_step(MonomialClass::unit(ev({8, 2}, 5), F), 2), domain_error);
    EXPECT_THROW(hodge_step(MonomialClass::unit(ev({4, 4, 4, 3}, 5), F), 1), domain_error);
}

TEST(FrobeniusImage, Examples) {
    const auto top = ev({4, 4, 4, 3}, 5);
    {
        const PrimeField F(11);
        const auto c = frobenius_image(MonomialClass::unit(top, F), F);
        EXPECT_EQ(c.exponents, top);
        EXPECT_EQ(c.pole_order, 3u);
        EXPECT_EQ(c.scalar.value(), 9u);
        EXPECT_EQ(hodge_step(c, 2).step, 0u);
    }
    {
        const PrimeField F(19);
        const auto c = frobenius_image(MonomialClass::unit(top, F), F);
        EXPECT_EQ(c.exponents, ev({1, 1, 1, 2}, 5));
        EXPECT_EQ(c.pole_order, 1u);
        EXPECT_EQ(c.scalar.value(), 6u);
        EXPECT_EQ(hodge_step(c, 2).step, 2u);
    }
    {
        const PrimeField F(7);
        const auto c = frobenius_image(MonomialClass::unit(ev(Vec(5, 4), 5), F), F);
        EXPECT_EQ(c.exponents, ev(Vec(5, 3), 5));
        EXPECT_EQ(c.pole_order, 3u);
        EXPECT_EQ(hodge_step(c, 3).step, 1u);
    }
}

TEST(FrobeniusImage, SemilinearInScalar) {
    const PrimeField F(13);
    const auto w = ev({2, 3, 4, 1}, 5);
    const auto base = frobenius_image(MonomialClass::unit(w, F), F);
    for (std::uint32_t s = 1; s < 13; ++s) {
        const MonomialClass c{w, FpScalar(F, s), w.pole_order()};
        const auto img = frobenius_image(c, F);
        EXPECT_EQ(img.exponents, base.exponents);
        EXPECT_EQ(img.scalar, base.scalar * FpScalar(F, s).pow(13));
    }
}

TEST(FrobeniusImage, Errors) {
    const PrimeField F(7);
    EXPECT_THROW(frobenius_image(MonomialClass::zero(F), F), domain_error);
    EXPECT_THROW(frobenius_image(MonomialClass::unit(ev({8, 2}, 5), F), F), domain_error);
    EXPECT_THROW(frobenius_image(MonomialClass::unit(ev({3, 3}, 6), PrimeField(3)), PrimeField(3)),
                 invalid_characteristic);
    EXPECT_THROW(frobenius_image(MonomialClass::unit(ev({4, 1}, 5), PrimeField(11)), F), input_error);
}

// Exponent map of Frobenius is a bijection on all reduced monomials; the
// inverse is multiplication by p^(ord(p mod d) - 1). The scalar never
// vanishes. Exhaustive over d <= 8, p <= 97 and 2..4 coordinates.
TEST(FrobeniusImage, BijectionAndNonvanishing) {
    for (std::uint32_t d = 2; d <= 8; ++d)
        for (std::uint32_t r = 1; r <= 3; ++r) {
            const auto all = admissible_monomials(d, r);
            const std::set<ExponentVector> domain(all.begin(), all.end());
            for (auto p : primes_in_range(2, 97)) {
                if (d % p == 0) continue;
                const PrimeField F(p);
                std::uint32_t ord = 1, pk = p % d;
                while (pk != 1) {
                    pk = pk * p % d;
                    ++ord;
                }
                std::uint64_t inv_mult = 1;
                for (std::uint32_t k = 1; k < ord; ++k) inv_mult = inv_mult * p % d;
                std::set<ExponentVector> image;
                for (const auto& w : all) {
                    const auto c = frobenius_image(MonomialClass::unit(w, F), F);
                    ASSERT_FALSE(c.is_zero()) << "d=" << d << " p=" << p << " w=" << w;
                    ASSERT_EQ(c.exponents, frobenius_exponents(w, p));
                    image.insert(c.exponents);
                    Vec back = c.exponents.entries();
                    for (auto& x : back) x = x * inv_mult % d;
                    EXPECT_EQ(ev(back, d), w);
                }
                EXPECT_EQ(image, domain) << "d=" << d << " r=" << r << " p=" << p;
            }
        }
}

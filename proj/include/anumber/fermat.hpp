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

#ifndef ANUMBER_FERMAT_HPP
#define ANUMBER_FERMAT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "prime_field.hpp"
#include "residue.hpp"

namespace anumber {

/// The Fermat hypersurface x_0^d + ... + x_r^d = 0 in P^r over F_p.
class FermatDescriptor {
   public:
    FermatDescriptor(std::uint32_t degree, std::uint32_t ambient, PrimeField field)
        : d_(degree), r_(ambient), field_(field) {
        if (d_ < 2) throw domain_error("degree must be at least 2");
        if (r_ < 1) throw domain_error("ambient dimension must be at least 1");
        detail::require_coprime(d_, field_);
    }

    std::uint32_t degree() const noexcept { return d_; }
    std::uint32_t ambient() const noexcept { return r_; }
    /// n = r - 1
    std::uint32_t dimension() const noexcept { return r_ - 1; }
    std::uint32_t coordinates() const noexcept { return r_ + 1; }
    PrimeField field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_.p(); }

    /// H^n(O_X) != 0, i.e. d >= n + 2.
    bool has_top_level() const noexcept { return d_ >= r_ + 1; }
    bool is_calabi_yau() const noexcept { return d_ == r_ + 1; }
    std::uint64_t top_level() const noexcept { return r_; }

    bool operator==(const FermatDescriptor&) const = default;

   private:
    std::uint32_t d_;
    std::uint32_t r_;
    PrimeField field_;
};

namespace detail {

inline void enumerate_level(std::vector<std::uint64_t>& prefix, std::size_t slots, std::uint64_t remaining,
                            std::uint32_t d, std::vector<ExponentVector>& out) {
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(prefix, d);
        return;
    }
    const std::uint64_t rest = slots - 1;
    const std::uint64_t top = d - 1;
    for (std::uint64_t x = 1; x <= top; ++x) {
        if (x > remaining) break;
        const std::uint64_t left = remaining - x;
        if (left < rest || left > rest * top) continue;
        prefix.push_back(x);
        enumerate_level(prefix, rest, left, d, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Reduced monomials of pole order q, in lexicographic order. They span the
/// graded piece F^{n+1-q} / F^{n+2-q} of primitive middle cohomology.
inline std::vector<ExponentVector> basis(std::uint32_t degree, std::uint32_t ambient, std::uint64_t q) {
    if (degree < 2) throw domain_error("degree must be at least 2");
    if (q < 1 || q > ambient) throw domain_error("level " + std::to_string(q) + " outside [1, " + std::to_string(ambient) + "]");
    std::vector<ExponentVector> out;
    std::vector<std::uint64_t> prefix;
    prefix.reserve(ambient + 1);
    detail::enumerate_level(prefix, ambient + 1, q * degree, degree, out);
    return out;
}

inline std::vector<ExponentVector> basis(const FermatDescriptor& v, std::uint64_t q) {
    return basis(v.degree(), v.ambient(), q);
}

/// Every reduced monomial, ordered by level and then lexicographically.
inline std::vector<ExponentVector> admissible_monomials(std::uint32_t degree, std::uint32_t ambient) {
    std::vector<ExponentVector> all;
    for (std::uint64_t q = 1; q <= ambient; ++q) {
        auto level = basis(degree, ambient, q);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

/// Primitive Hodge numbers, entry q-1 holding h^{n+1-q, q-1} for q = 1..n+1.
inline std::vector<std::uint64_t> hodge_numbers(std::uint32_t degree, std::uint32_t ambient) {
    if (degree < 2) throw domain_error("degree must be at least 2");
    if (ambient < 1) throw domain_error("ambient dimension must be at least 1");
    std::vector<std::uint64_t> h;
    for (std::uint64_t q = 1; q <= ambient; ++q)
        h.push_back(count_restricted_compositions(q * degree, ambient + 1, 1, degree - 1));
    return h;
}

inline std::vector<std::uint64_t> hodge_numbers(const FermatDescriptor& v) { return hodge_numbers(v.degree(), v.ambient()); }

struct FrobeniusRecord {
    ExponentVector source;
    MonomialClass image;
};

/// Frobenius images of one level basis. For the top level this is G_0.
struct ConjugateImage {
    std::uint64_t level = 0;
    std::vector<FrobeniusRecord> records;
    std::size_t span_rank = 0;
    bool anomaly = false;
};

inline ConjugateImage level_image(const FermatDescriptor& v, std::uint64_t q) {
    ConjugateImage g;
    g.level = q;
    std::vector<ExponentVector> seen;
    for (auto& w : basis(v, q)) {
        MonomialClass image = frobenius_image(MonomialClass::unit(w, v.field()), v.field());
        if (image.is_zero())
            g.anomaly = true;
        else
            seen.push_back(image.exponents);
        g.records.push_back({std::move(w), std::move(image)});
    }
    std::sort(seen.begin(), seen.end());
    g.span_rank = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    return g;
}

/// G_0, the Frobenius image of H^n(X, O_X). Empty when d < n + 2.
inline ConjugateImage conjugate_image(const FermatDescriptor& v) {
    if (!v.has_top_level()) {
        ConjugateImage g;
        g.level = v.top_level();
        return g;
    }
    return level_image(v, v.top_level());
}

struct ImagePosition {
    ExponentVector source;
    ExponentVector image;  // empty when the image vanished
    std::uint32_t scalar = 0;
    std::uint64_t pole_order = 0;
    std::optional<std::uint64_t> hodge_step;

    bool operator==(const ImagePosition&) const = default;
};

/**
 * Position of the Frobenius image of one level inside the Hodge filtration.
 *
 * For the top level, a_number is a(X) and a_vector is (dim G_0 ∩ F^j)_j.
 * Anomalies list basis elements whose image vanished.
 */
struct ANumberReport {
    std::uint64_t level = 0;
    std::uint64_t a_number = 0;
    std::vector<std::uint64_t> a_vector;
    std::vector<ImagePosition> positions;
    std::vector<std::string> anomalies;

    bool operator==(const ANumberReport&) const = default;
};

inline ANumberReport level_report(const FermatDescriptor& v, std::uint64_t q) {
    const std::uint64_t n = v.dimension();
    if (q < 1 || q > n + 1) throw domain_error("level " + std::to_string(q) + " outside [1, " + std::to_string(n + 1) + "]");
    const ConjugateImage g = level_image(v, q);
    if (g.records.empty()) throw not_applicable("level " + std::to_string(q) + " has an empty basis");

    ANumberReport rep;
    rep.level = q;
    rep.a_number = n;
    rep.a_vector.assign(n + 1, 0);
    for (const auto& rec : g.records) {
        ImagePosition pos{rec.source, {}, 0, 0, std::nullopt};
        if (rec.image.is_zero()) {
            std::ostringstream msg;
            msg << "Frobenius image of " << rec.source << " vanished";
            rep.anomalies.push_back(msg.str());
        } else {
            const auto j = hodge_step(rec.image, n).step;
            pos.image = rec.image.exponents;
            pos.scalar = rec.image.scalar.value();
            pos.pole_order = rec.image.pole_order;
            pos.hodge_step = j;
            rep.a_number = std::min(rep.a_number, j);
            for (std::uint64_t k = 0; k <= j; ++k) ++rep.a_vector[k];
        }
        rep.positions.push_back(std::move(pos));
    }
    return rep;
}

/// a(X), the largest j with G_0 ⊆ F^j, together with the a-vector.
inline ANumberReport a_number(const FermatDescriptor& v) {
    if (!v.has_top_level())
        throw not_applicable("H^n(O_X) vanishes (degree " + std::to_string(v.degree()) + " < n + 2); no a-number");
    return level_report(v, v.top_level());
}

/// Hodge position of the Frobenius image of level q; equals a(X) for q = n + 1.
inline std::uint64_t level_a_number(const FermatDescriptor& v, std::uint64_t q) { return level_report(v, q).a_number; }

/**
 * a-vector through explicit subspaces: G_0 and each F^j become row spans in
 * the space of all reduced monomials and are intersected with rank
 * computations. Independent of the monomial counting in level_report.
 */
inline std::vector<std::uint64_t> a_vector_by_intersection(const FermatDescriptor& v) {
    if (!v.has_top_level()) throw not_applicable("H^n(O_X) vanishes; no a-vector");
    const std::uint64_t n = v.dimension();
    const auto ambient = admissible_monomials(v.degree(), v.ambient());
    std::map<ExponentVector, std::size_t> index;
    for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);

    const ConjugateImage g = conjugate_image(v);
    FpMatrix g0(v.field(), g.records.size(), ambient.size());
    for (std::size_t i = 0; i < g.records.size(); ++i) {
        const auto& img = g.records[i].image;
        if (!img.is_zero()) g0.set(i, index.at(img.exponents), img.scalar);
    }

    std::vector<std::uint64_t> a(n + 1, 0);
    for (std::uint64_t j = 0; j <= n; ++j) {
        // F^j is spanned by the monomials of pole order <= n + 1 - j
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < ambient.size(); ++i)
            if (ambient[i].pole_order() <= n + 1 - j) cols.push_back(i);
        FpMatrix fj(v.field(), cols.size(), ambient.size());
        for (std::size_t k = 0; k < cols.size(); ++k) fj.set(k, cols[k], FpScalar(v.field(), 1));
        a[j] = intersection_dim(g0, fj);
    }
    return a;
}

/// Hasse-Witt map H^n(O) -> F^0/F^1 = H^n(O) in the top-level monomial basis,
/// up to one global unit.
struct HasseWittMatrix {
    FpMatrix matrix;
    std::vector<ExponentVector> index;

    std::size_t rank() const { return matrix.rank(); }
    bool is_zero() const noexcept { return matrix.is_zero(); }
};

inline HasseWittMatrix hasse_witt(const FermatDescriptor& v) {
    if (!v.has_top_level()) throw not_applicable("H^n(O_X) vanishes; no Hasse-Witt matrix");
    const ConjugateImage g = conjugate_image(v);
    std::vector<ExponentVector> idx;
    for (const auto& rec : g.records) idx.push_back(rec.source);
    FpMatrix m(v.field(), idx.size(), idx.size());
    for (std::size_t i = 0; i < g.records.size(); ++i) {
        const auto& img = g.records[i].image;
        if (img.is_zero() || img.pole_order != v.top_level()) continue;
        const auto col = std::lower_bound(idx.begin(), idx.end(), img.exponents) - idx.begin();
        m.set(i, static_cast<std::size_t>(col), img.scalar);
    }
    return {std::move(m), std::move(idx)};
}

/**
 * Closed-form a-number where one is known, independent of the residue
 * computation:
 *   - quintic surface: p mod 5 = 1, 2, 3, 4 gives 0, 1, 1, 2;
 *   - Calabi-Yau Fermat (d = r + 1): a = (p - 1) mod (r + 1);
 *   - d = p + 1, r = p: a = p - 1 (a special case of the previous one).
 */
inline std::optional<std::uint64_t> predict_a(std::uint32_t degree, std::uint32_t ambient, std::uint32_t p) {
    if (p == 0 || degree % p == 0) throw invalid_characteristic();
    if (degree == 5 && ambient == 3) {
        constexpr std::uint64_t table[5] = {0, 0, 1, 1, 2};
        return table[p % 5];
    }
    if (degree == ambient + 1) return (p - 1) % degree;
    return std::nullopt;
}

inline std::optional<std::uint64_t> predict_a(const FermatDescriptor& v) { return predict_a(v.degree(), v.ambient(), v.p()); }

/// predict_a for the top level; for other levels only the cubic sevenfold's
/// first nonvanishing level (q = 6) is known: 2 if p = 1 mod 3, else 5.
inline std::optional<std::uint64_t> predict_level_a(const FermatDescriptor& v, std::uint64_t q) {
    if (q == v.top_level()) return predict_a(v);
    if (v.degree() == 3 && v.ambient() == 8 && q == 6) return v.p() % 3 == 1 ? 2 : 5;
    return std::nullopt;
}

enum class HeightTag { one, infinite, unresolved };

inline const char* to_string(HeightTag t) {
    switch (t) {
        case HeightTag::one: return "one";
        case HeightTag::infinite: return "infinite";
        case HeightTag::unresolved: return "finite-or-infinite-unresolved";
    }
    return "?";
}

struct HeightClass {
    HeightTag tag = HeightTag::unresolved;
    std::string note;

    bool operator==(const HeightClass&) const = default;
};

/**
 * Height of a Fermat Calabi-Yau variety from its a-number. a = 0 forces
 * height 1 and a >= 2 forces infinite height; a finite height >= 2 would
 * need a = 1, which the Fermat Calabi-Yau dichotomy (height 1 or infinite)
 * excludes.
 */
inline HeightClass classify_height(const FermatDescriptor& v, std::uint64_t a) {
    if (!v.is_calabi_yau()) throw not_applicable("height classification needs a Calabi-Yau Fermat (d = r + 1)");
    if (a == 0) return {HeightTag::one, "a = 0: Hasse-Witt map nonzero, height 1"};
    if (a >= 2) return {HeightTag::infinite, "a >= 2 excludes every finite height"};
    if (v.p() % v.degree() != 2)
        return {HeightTag::infinite, "a = 1 and p != 2 mod (r+1): Fermat Calabi-Yau height is 1 or infinite"};
    return {HeightTag::infinite,
            "a = 1 and p = 2 mod (r+1): relies on the Jacobi-sum extension of the 1-or-infinite dichotomy"};
}

inline HeightClass classify_height(const FermatDescriptor& v) {
    if (!v.is_calabi_yau()) throw not_applicable("height classification needs a Calabi-Yau Fermat (d = r + 1)");
    return classify_height(v, a_number(v).a_number);
}

}  // namespace anumber

#endif

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

#ifndef ANUMBER_PRIME_FIELD_HPP
#define ANUMBER_PRIME_FIELD_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace anumber {

/// Deterministic trial-division primality test; adequate for n < 2^31.
constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

/// Primes in the closed interval [lo, hi], ascending.
inline std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

/**
 * The prime field F_p with p < 2^31.
 *
 * Residues are stored as 32-bit words; every product goes through a 64-bit
 * intermediate, so no big-integer support is needed.
 */
class PrimeField {
   public:
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31) - 1;

    explicit PrimeField(std::uint64_t p) : p_(checked(p)) {}

    std::uint32_t p() const noexcept { return p_; }

    bool operator==(const PrimeField&) const = default;

   private:
    static std::uint32_t checked(std::uint64_t p) {
        if (p > max_modulus) throw input_error("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
        if (!is_prime(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
        return static_cast<std::uint32_t>(p);
    }

    std::uint32_t p_;
};

/// An element of F_p; the value is kept in [0, p-1].
class FpScalar {
   public:
    FpScalar(PrimeField field, std::uint64_t value) : field_(field), v_(static_cast<std::uint32_t>(value % field.p())) {}

    /// Reduces a signed integer into [0, p-1].
    static FpScalar from_signed(PrimeField field, std::int64_t value) {
        const auto p = static_cast<std::int64_t>(field.p());
        std::int64_t r = value % p;
        if (r < 0) r += p;
        return FpScalar(field, static_cast<std::uint64_t>(r));
    }

    PrimeField field() const noexcept { return field_; }
    std::uint32_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FpScalar operator+(FpScalar rhs) const {
        same_field(rhs);
        return FpScalar(field_, std::uint64_t{v_} + rhs.v_);
    }
    FpScalar operator-(FpScalar rhs) const {
        same_field(rhs);
        return FpScalar(field_, std::uint64_t{v_} + field_.p() - rhs.v_);
    }
    FpScalar operator-() const { return FpScalar(field_, std::uint64_t{field_.p()} - v_); }
    FpScalar operator*(FpScalar rhs) const {
        same_field(rhs);
        return FpScalar(field_, std::uint64_t{v_} * rhs.v_);
    }
    FpScalar operator/(FpScalar rhs) const { return *this * rhs.inverse(); }

    FpScalar& operator+=(FpScalar rhs) { return *this = *this + rhs; }
    FpScalar& operator-=(FpScalar rhs) { return *this = *this - rhs; }
    FpScalar& operator*=(FpScalar rhs) { return *this = *this * rhs; }

    FpScalar pow(std::uint64_t e) const {
        FpScalar result(field_, 1);
        FpScalar base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1) result *= base;
            base *= base;
        }
        return result;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    FpScalar inverse() const {
        if (v_ == 0) throw division_by_zero();
        std::int64_t r0 = field_.p(), r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return from_signed(field_, s0);
    }

    bool operator==(const FpScalar& rhs) const noexcept { return field_ == rhs.field_ && v_ == rhs.v_; }
    bool operator==(std::uint32_t rhs) const noexcept { return v_ == rhs; }

    friend std::ostream& operator<<(std::ostream& os, const FpScalar& a) { return os << a.v_; }

   private:
    void same_field(const FpScalar& rhs) const {
        if (!(field_ == rhs.field_)) throw input_error("mixing residues of different prime fields");
    }

    PrimeField field_;
    std::uint32_t v_;
};

inline FpScalar fp_inv(FpScalar a) { return a.inverse(); }

/// n! mod p. Zero whenever n >= p.
inline FpScalar factorial_mod(std::uint64_t n, PrimeField field) {
    if (n >= field.p()) return FpScalar(field, 0);
    FpScalar acc(field, 1);
    for (std::uint64_t k = 2; k <= n; ++k) acc *= FpScalar(field, k);
    return acc;
}

}  // namespace anumber

#endif

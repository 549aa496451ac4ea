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

#ifndef ANUMBER_MATRIX_HPP
#define ANUMBER_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "prime_field.hpp"

namespace anumber {

/// Dense row-major matrix over F_p.
class FpMatrix {
   public:
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    FpMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : FpMatrix(field, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw shape_error("ragged matrix literal");
            std::size_t j = 0;
            for (auto x : row) set(i, j++, FpScalar::from_signed(field_, x));
            ++i;
        }
    }

    static FpMatrix identity(PrimeField field, std::size_t n) {
        FpMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
        return m;
    }

    PrimeField field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FpScalar operator()(std::size_t i, std::size_t j) const { return FpScalar(field_, data_[i * cols_ + j]); }
    void set(std::size_t i, std::size_t j, FpScalar x) {
        if (!(x.field() == field_)) throw input_error("matrix entry from a different prime field");
        data_[i * cols_ + j] = x.value();
    }

    bool is_zero() const noexcept {
        for (auto x : data_)
            if (x != 0) return false;
        return true;
    }

    /// Rows of *this followed by rows of other.
    FpMatrix stacked(const FpMatrix& other) const {
        if (other.cols_ != cols_) throw shape_error("stacking matrices with " + std::to_string(cols_) + " and " +
                                                    std::to_string(other.cols_) + " columns");
        if (!(other.field_ == field_)) throw input_error("stacking matrices over different prime fields");
        FpMatrix out(field_, rows_ + other.rows_, cols_);
        std::copy(data_.begin(), data_.end(), out.data_.begin());
        std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
        return out;
    }

    /// Rank by Gaussian elimination on a private copy.
    std::size_t rank() const {
        std::vector<std::uint32_t> a = data_;
        const std::uint64_t p = field_.p();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = r;
            while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(a[pivot * cols_ + j], a[r * cols_ + j]);
            const std::uint64_t inv = FpScalar(field_, a[r * cols_ + c]).inverse().value();
            for (std::size_t j = c; j < cols_; ++j) a[r * cols_ + j] = static_cast<std::uint32_t>(a[r * cols_ + j] * inv % p);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const std::uint64_t f = a[i * cols_ + c];
                if (f == 0) continue;
                for (std::size_t j = c; j < cols_; ++j)
                    a[i * cols_ + j] = static_cast<std::uint32_t>((a[i * cols_ + j] + (p - f) * a[r * cols_ + j]) % p);
            }
            ++r;
        }
        return r;
    }

    bool operator==(const FpMatrix&) const = default;

   private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

inline std::size_t matrix_rank(const FpMatrix& m) { return m.rank(); }

/// dim(rowspan(a) ∩ rowspan(b)) = rank a + rank b - rank [a; b].
inline std::size_t intersection_dim(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.cols()) throw shape_error("intersection of subspaces of different ambient dimension");
    return a.rank() + b.rank() - a.stacked(b).rank();
}

}  // namespace anumber

#endif

// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCC_POLY_MATRIX_HPP
#define QCC_POLY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qcc/laurent_poly.hpp"

namespace qcc {

/// Dense rows x cols matrix of Laurent polynomials over one field.
class PolyMatrix {
   public:
    PolyMatrix(Field f, std::size_t rows, std::size_t cols);
    PolyMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);

    static PolyMatrix zero(Field f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
    static PolyMatrix identity(Field f, std::size_t n);
    /// Constant matrix from packed field elements given row by row.
    static PolyMatrix constant(Field f, std::size_t rows, std::size_t cols, const std::vector<int>& values);

    Field field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const;

    bool is_zero() const noexcept;
    bool is_polynomial() const noexcept;
    bool is_constant() const noexcept;
    /// Largest entry degree (-1 for the zero matrix).
    int max_degree() const noexcept;
    /// Smallest exponent appearing anywhere (0 for the zero matrix).
    int min_low() const noexcept;
    int row_degree(std::size_t i) const noexcept;
    int row_low(std::size_t i) const noexcept;
    bool row_is_zero(std::size_t i) const noexcept;

    PolyMatrix transpose() const;
    /// Entrywise D -> 1/D.
    PolyMatrix adjoint() const;
    /// Entrywise D -> 1/D followed by transposition: M(1/D)^t.
    PolyMatrix adjoint_transpose() const { return adjoint().transpose(); }
    /// Coefficient matrix of D^e as a constant matrix.
    PolyMatrix coefficient(int e) const;

    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    PolyMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
    PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
    void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);
    static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

    /// Re-express entries lying in the prime subfield over another field of
    /// the same characteristic.
    PolyMatrix lifted(Field target) const;
    /// Every row multiplied by D^{-row_low(i)}, zero rows untouched.
    PolyMatrix rows_normalized() const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix scaled(const LaurentPoly& s) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) noexcept { return !(a == b); }

   private:
    void check_same_shape(const PolyMatrix& o) const;

    Field f_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentPoly> e_;
};

/// Kronecker product a (x) b. Entries of `a` must lie in the prime subfield
/// of b's field when the fields differ (the tensor over F_p).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant via fraction-free (Bareiss) elimination. Laurent rows are
/// shifted to polynomials first and the shift is restored afterwards.
LaurentPoly determinant(const PolyMatrix& m);

/// Square polynomial matrix whose determinant is a nonzero constant.
bool is_unimodular(const PolyMatrix& m);

/// Square Laurent matrix whose determinant is a nonzero monomial c D^s,
/// i.e. invertible over F_q[D, 1/D].
bool is_laurent_unimodular(const PolyMatrix& m);

}  // namespace qcc

#endif

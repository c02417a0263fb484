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

#include "qcc/poly_matrix.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <utility>

#include "qcc/error.hpp"

namespace qcc {

PolyMatrix::PolyMatrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, LaurentPoly(f)) {}

PolyMatrix::PolyMatrix(Field f, std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries)
    : f_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
    for (const auto& e : e_) {
        if (e.field() != f) throw DomainError("matrix entries must share one field");
    }
}

PolyMatrix PolyMatrix::identity(Field f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(f);
    return m;
}

PolyMatrix PolyMatrix::constant(Field f, std::size_t rows, std::size_t cols, const std::vector<int>& values) {
    if (values.size() != rows * cols) throw DomainError("constant matrix value count does not match its shape");
    PolyMatrix m(f, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!f.contains(values[k])) throw DomainError("matrix value out of field range");
        m.e_[k] = LaurentPoly::constant(f, static_cast<Elem>(values[k]));
    }
    return m;
}

const LaurentPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
    return e_[i * cols_ + j];
}

bool PolyMatrix::is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_polynomial() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& p) { return p.is_polynomial(); });
}

bool PolyMatrix::is_constant() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& p) { return p.is_constant(); });
}

int PolyMatrix::max_degree() const noexcept {
    int d = -1;
    bool any = false;
    for (const auto& p : e_) {
        if (p.is_zero()) continue;
        d = any ? std::max(d, p.degree()) : p.degree();
        any = true;
    }
    return d;
}

int PolyMatrix::min_low() const noexcept {
    int lo = INT_MAX;
    for (const auto& p : e_) {
        if (!p.is_zero()) lo = std::min(lo, p.low());
    }
    return lo == INT_MAX ? 0 : lo;
}

int PolyMatrix::row_degree(std::size_t i) const noexcept {
    int d = -1;
    bool any = false;
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& p = (*this)(i, j);
        if (p.is_zero()) continue;
        d = any ? std::max(d, p.degree()) : p.degree();
        any = true;
    }
    return d;
}

int PolyMatrix::row_low(std::size_t i) const noexcept {
    int lo = INT_MAX;
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& p = (*this)(i, j);
        if (!p.is_zero()) lo = std::min(lo, p.low());
    }
    return lo == INT_MAX ? 0 : lo;
}

bool PolyMatrix::row_is_zero(std::size_t i) const noexcept {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

PolyMatrix PolyMatrix::adjoint() const {
    PolyMatrix a(f_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) a.e_[k] = e_[k].adjoint();
    return a;
}

PolyMatrix PolyMatrix::coefficient(int e) const {
    PolyMatrix c(f_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = LaurentPoly::constant(f_, e_[k].coeff(e));
    return c;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("matrix block out of range");
    PolyMatrix b(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    PolyMatrix b(f_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw DomainError("row index out of range");
        for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[i], j);
    }
    return b;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
    if (b.f_ != f_) throw DomainError("field mismatch in set_block");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DomainError("matrix block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.f_ != b.f_ || a.rows_ != b.rows_) throw DomainError("hstack shape or field mismatch");
    PolyMatrix m(a.f_, a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.f_ != b.f_ || a.cols_ != b.cols_) throw DomainError("vstack shape or field mismatch");
    PolyMatrix m(a.f_, a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
}

PolyMatrix PolyMatrix::lifted(Field target) const {
    if (target == f_) return *this;
    if (target.p() != f_.p()) throw DomainError("cannot lift between fields of different characteristic");
    PolyMatrix m(target, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) {
        const auto& src = e_[k];
        std::vector<Elem> c = src.coeffs();
        for (Elem x : c) {
            if (x >= f_.p()) throw DomainError("entry outside the prime subfield cannot be lifted");
        }
        m.e_[k] = LaurentPoly(target, src.low(), std::move(c));
    }
    return m;
}

PolyMatrix PolyMatrix::rows_normalized() const {
    PolyMatrix m = *this;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (row_is_zero(i)) continue;
        int lo = row_low(i);
        if (lo == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = m(i, j).shifted(-lo);
    }
    return m;
}

void PolyMatrix::check_same_shape(const PolyMatrix& o) const {
    if (f_ != o.f_) throw DomainError("field mismatch in matrix arithmetic");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    check_same_shape(o);
    PolyMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    check_same_shape(o);
    PolyMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& e : r.e_) e = -e;
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (f_ != o.f_) throw DomainError("field mismatch in matrix product");
    if (cols_ != o.rows_) {
        throw DomainError("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }
    PolyMatrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j).add_product(a, o(k, j));
        }
    }
    return r;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& s) const {
    PolyMatrix r = *this;
    for (auto& e : r.e_) e = e * s;
    return r;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    Field f = b.field();
    PolyMatrix al = a.field() == f ? a : a.lifted(f);
    PolyMatrix r(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& s = al(i, j);
            if (s.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
            }
        }
    }
    return r;
}

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    Field f = m.field();
    std::size_t n = m.rows();
    if (n == 0) return LaurentPoly::one(f);
    PolyMatrix a = m;
    int shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.row_is_zero(i)) return LaurentPoly(f);
        int lo = a.row_low(i);
        shift += lo;
        for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j).shifted(-lo);
    }
    bool negate = false;
    LaurentPoly prev = LaurentPoly::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero()) ++piv;
            if (piv == n) return LaurentPoly(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                auto [quo, rem] = divmod(num, prev);
                if (!rem.is_zero()) throw std::logic_error("Bareiss step was not exact");
                a(i, j) = std::move(quo);
            }
            a(i, k) = LaurentPoly(f);
        }
        prev = a(k, k);
    }
    LaurentPoly det = a(n - 1, n - 1);
    if (negate) det = -det;
    return det.shifted(shift);
}

bool is_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols() || !m.is_polynomial()) return false;
    return determinant(m).is_unit();
}

bool is_laurent_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return determinant(m).is_monomial();
}

}  // namespace qcc

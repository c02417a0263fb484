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

#include "qcc/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "qcc/error.hpp"

namespace qcc {

void apply_op(PolyMatrix& m, const ElementaryOp& op) {
    switch (op.kind) {
        case OpKind::RowSwap:
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(op.target, j), m(op.source, j));
            break;
        case OpKind::ColSwap:
            for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, op.target), m(i, op.source));
            break;
        case OpKind::RowScale:
            for (std::size_t j = 0; j < m.cols(); ++j) m(op.target, j) = m(op.target, j).scaled(op.unit);
            break;
        case OpKind::ColScale:
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, op.target) = m(i, op.target).scaled(op.unit);
            break;
        case OpKind::RowAdd:
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const auto& s = m(op.source, j);
                if (!s.is_zero()) m(op.target, j) += op.factor * s;
            }
            break;
        case OpKind::ColAdd:
            for (std::size_t i = 0; i < m.rows(); ++i) {
                const auto& s = m(i, op.source);
                if (!s.is_zero()) m(i, op.target) += op.factor * s;
            }
            break;
    }
}

std::vector<LaurentPoly> SmithDecomposition::invariant_factors() const {
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
    return out;
}

bool SmithDecomposition::all_units() const {
    if (rank != std::min(diagonal.rows(), diagonal.cols())) return false;
    for (std::size_t i = 0; i < rank; ++i) {
        if (!diagonal(i, i).is_unit()) return false;
    }
    return true;
}

namespace {

class SmithReducer {
   public:
    explicit SmithReducer(const PolyMatrix& m)
        : f_(m.field()),
          s_(m),
          a_(PolyMatrix::identity(m.field(), m.rows())),
          b_(PolyMatrix::identity(m.field(), m.cols())) {}

    SmithDecomposition run() {
        std::size_t r = s_.rows();
        std::size_t c = s_.cols();
        std::size_t t = 0;
        for (; t < std::min(r, c); ++t) {
            if (!reduce_at(t)) break;
            Elem lead = s_(t, t).leading();
            if (lead != 1) emit({OpKind::RowScale, t, t, f_.inv(lead), LaurentPoly(f_)});
        }
        return {std::move(a_), std::move(s_), std::move(b_), std::move(trace_), t};
    }

   private:
    std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        int best_deg = 0;
        for (std::size_t i = t; i < s_.rows(); ++i) {
            for (std::size_t j = t; j < s_.cols(); ++j) {
                const auto& e = s_(i, j);
                if (e.is_zero()) continue;
                if (!best || e.degree() < best_deg) {
                    best = {i, j};
                    best_deg = e.degree();
                }
            }
        }
        return best;
    }

    // Returns false when the trailing submatrix is zero.
    bool reduce_at(std::size_t t) {
        for (;;) {
            auto pivot = find_pivot(t);
            if (!pivot) return false;
            auto [pi, pj] = *pivot;
            if (pi != t) emit({OpKind::RowSwap, t, pi, 1, LaurentPoly(f_)});
            if (pj != t) emit({OpKind::ColSwap, t, pj, 1, LaurentPoly(f_)});

            bool clean = true;
            for (std::size_t i = t + 1; i < s_.rows(); ++i) {
                if (s_(i, t).is_zero()) continue;
                auto [quo, rem] = divmod(s_(i, t), s_(t, t));
                if (!quo.is_zero()) emit({OpKind::RowAdd, i, t, 1, -quo});
                clean = clean && rem.is_zero();
            }
            for (std::size_t j = t + 1; j < s_.cols(); ++j) {
                if (s_(t, j).is_zero()) continue;
                auto [quo, rem] = divmod(s_(t, j), s_(t, t));
                if (!quo.is_zero()) emit({OpKind::ColAdd, j, t, 1, -quo});
                clean = clean && rem.is_zero();
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < s_.rows() && divisible; ++i) {
                for (std::size_t j = t + 1; j < s_.cols(); ++j) {
                    if (!divides(s_(t, t), s_(i, j))) {
                        emit({OpKind::RowAdd, t, i, 1, LaurentPoly::one(f_)});
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) return true;
        }
    }

    void emit(ElementaryOp op) {
        apply_op(s_, op);
        apply_op(op.is_row_op() ? a_ : b_, op);
        trace_.push_back(std::move(op));
    }

    Field f_;
    PolyMatrix s_;
    PolyMatrix a_;
    PolyMatrix b_;
    std::vector<ElementaryOp> trace_;
};

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& m) {
    if (!m.is_polynomial()) throw DomainError("Smith normal form requires polynomial entries (no negative exponents)");
    return SmithReducer(m).run();
}

PolyMatrix replay_row_ops(Field f, std::size_t n, const std::vector<ElementaryOp>& trace) {
    PolyMatrix a = PolyMatrix::identity(f, n);
    for (const auto& op : trace) {
        if (op.is_row_op()) apply_op(a, op);
    }
    return a;
}

PolyMatrix replay_col_ops(Field f, std::size_t n, const std::vector<ElementaryOp>& trace) {
    PolyMatrix b = PolyMatrix::identity(f, n);
    for (const auto& op : trace) {
        if (!op.is_row_op()) apply_op(b, op);
    }
    return b;
}

PolyMatrix kernel_basis(const PolyMatrix& m) {
    auto snf = smith_normal_form(m);
    std::size_t c = m.cols();
    return snf.right.block(0, snf.rank, c, c - snf.rank).transpose();
}

std::size_t rank(const PolyMatrix& m) {
    if (m.empty()) return 0;
    return smith_normal_form(m.rows_normalized()).rank;
}

bool in_row_space(const PolyMatrix& m, const PolyMatrix& v, Ring ring) {
    if (m.field() != v.field() || m.cols() != v.cols()) throw DomainError("row-space test shape or field mismatch");
    PolyMatrix mm = m;
    PolyMatrix vv = v;
    if (ring == Ring::Laurent) {
        mm = m.rows_normalized();
        vv = v.rows_normalized();
    } else if (!m.is_polynomial() || !v.is_polynomial()) {
        throw DomainError("polynomial row-space test needs polynomial matrices");
    }
    auto snf = smith_normal_form(mm);
    PolyMatrix w = vv * snf.right;
    for (std::size_t t = 0; t < w.rows(); ++t) {
        for (std::size_t i = 0; i < w.cols(); ++i) {
            const auto& wi = w(t, i);
            if (i >= snf.rank) {
                if (!wi.is_zero()) return false;
                continue;
            }
            LaurentPoly d = snf.diagonal(i, i);
            if (ring == Ring::Laurent) d = d.shifted(-d.low());
            if (!divides(d, wi)) return false;
        }
    }
    return true;
}

bool row_equivalent(const PolyMatrix& a, const PolyMatrix& b, Ring ring) {
    return in_row_space(a, b, ring) && in_row_space(b, a, ring);
}

bool same_rational_row_space(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(PolyMatrix::vstack(a, b));
}

}  // namespace qcc

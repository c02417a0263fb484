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

#ifndef QCC_SMITH_HPP
#define QCC_SMITH_HPP

#include <cstddef>
#include <vector>

#include "qcc/poly_matrix.hpp"

namespace qcc {

enum class OpKind { RowSwap, ColSwap, RowScale, ColScale, RowAdd, ColAdd };

/// One elementary operation of the Smith reduction.
///
///   RowSwap / ColSwap:   exchange target and source
///   RowScale / ColScale: multiply target by the unit `unit`
///   RowAdd:              row[target] += factor * row[source]
///   ColAdd:              col[target] += factor * col[source]
struct ElementaryOp {
    OpKind kind;
    std::size_t target = 0;
    std::size_t source = 0;
    Elem unit = 1;
    LaurentPoly factor;

    bool is_row_op() const noexcept {
        return kind == OpKind::RowSwap || kind == OpKind::RowScale || kind == OpKind::RowAdd;
    }
};

void apply_op(PolyMatrix& m, const ElementaryOp& op);

/// A * M * B = S with A, B unimodular and S diagonal, monic, divisibility
/// chained. `trace` lists the operations in the order they were applied;
/// replaying its row operations on I gives A and its column operations on I
/// gives B.
struct SmithDecomposition {
    PolyMatrix left;
    PolyMatrix diagonal;
    PolyMatrix right;
    std::vector<ElementaryOp> trace;
    std::size_t rank = 0;

    std::vector<LaurentPoly> invariant_factors() const;
    /// Every nonzero invariant factor is 1 and the rank is full (min(rows, cols)).
    bool all_units() const;
};

/**
 * Smith normal form over F_q[D] by elementary operations only.
 *
 * Pivot rule: the nonzero entry of minimal degree in the trailing submatrix,
 * ties broken by lowest row, then lowest column. Throws DomainError when an
 * entry has a negative exponent.
 */
SmithDecomposition smith_normal_form(const PolyMatrix& m);

PolyMatrix replay_row_ops(Field f, std::size_t n, const std::vector<ElementaryOp>& trace);
PolyMatrix replay_col_ops(Field f, std::size_t n, const std::vector<ElementaryOp>& trace);

/// Rows form an F_q[D]-basis of {v : v * M^t = 0}; 0 x cols when trivial.
PolyMatrix kernel_basis(const PolyMatrix& m);

/// Rank over F_q(D). Laurent input is allowed.
std::size_t rank(const PolyMatrix& m);

enum class Ring { Polynomial, Laurent };

/// Whether every row of `v` is an F_q[D] (or F_q[D, 1/D]) combination of the
/// rows of `m`.
bool in_row_space(const PolyMatrix& m, const PolyMatrix& v, Ring ring = Ring::Polynomial);

/// Mutual row-space containment.
bool row_equivalent(const PolyMatrix& a, const PolyMatrix& b, Ring ring = Ring::Polynomial);

/// Mutual containment over F_q(D): rank(a) == rank(b) == rank([a; b]).
bool same_rational_row_space(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace qcc

#endif

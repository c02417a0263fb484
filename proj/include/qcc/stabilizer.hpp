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

#ifndef QCC_STABILIZER_HPP
#define QCC_STABILIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/poly_matrix.hpp"

namespace qcc {

/// Stabilizer matrix S(D) = (X(D) | Z(D)); one row per generator, n columns
/// per half. Entries may be Laurent (circuits produce them); operations that
/// need polynomial entries say so.
class StabilizerMatrix {
   public:
    StabilizerMatrix(PolyMatrix x, PolyMatrix z);
    /// Splits a rows x 2n matrix into its halves.
    static StabilizerMatrix from_combined(const PolyMatrix& xz);
    /// The Z-only form (0 | I 0) with n - k generators.
    static StabilizerMatrix trivial(Field f, std::size_t n, std::size_t k);

    Field field() const noexcept { return x_.field(); }
    std::size_t n() const noexcept { return x_.cols(); }
    std::size_t rows() const noexcept { return x_.rows(); }
    const PolyMatrix& x() const noexcept { return x_; }
    const PolyMatrix& z() const noexcept { return z_; }
    PolyMatrix& x() noexcept { return x_; }
    PolyMatrix& z() noexcept { return z_; }
    /// (X | Z) as one rows x 2n matrix.
    PolyMatrix combined() const { return PolyMatrix::hstack(x_, z_); }
    bool is_polynomial() const noexcept { return x_.is_polynomial() && z_.is_polynomial(); }
    bool is_constant() const noexcept { return x_.is_constant() && z_.is_constant(); }

    friend bool operator==(const StabilizerMatrix& a, const StabilizerMatrix& b) noexcept {
        return a.x_ == b.x_ && a.z_ == b.z_;
    }
    friend bool operator!=(const StabilizerMatrix& a, const StabilizerMatrix& b) noexcept { return !(a == b); }

   private:
    PolyMatrix x_;
    PolyMatrix z_;
};

/// X(D) Z(1/D)^t - Z(D) X(1/D)^t, a rows x rows Laurent matrix.
PolyMatrix symplectic_commutator(const StabilizerMatrix& s);
/// Same form between the rows of `a` and the rows of `b`.
PolyMatrix symplectic_product(const StabilizerMatrix& a, const StabilizerMatrix& b);
bool is_self_orthogonal(const StabilizerMatrix& s);
/// Rank of (X | Z) over F_q(D).
std::size_t stabilizer_rank(const StabilizerMatrix& s);

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<int> nu_i;
    int nu = 0;
    int m = 0;

    double rate() const noexcept { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); }
};

/// Frame size, logical qudits and constraint lengths. Requires polynomial
/// entries and full row rank.
CodeParams code_params(const StabilizerMatrix& s);

/// A finite window of the block-band form: block-row t holds G_0 ... G_m
/// starting at frame t. Columns are laid out as (X part | Z part), each
/// (frames + m) * n wide.
struct SemiInfiniteSlice {
    Field field;
    std::size_t n = 0;
    std::size_t rows = 0;
    std::size_t frames = 0;
    int m = 0;
    /// G_i as constant rows x 2n matrices (X columns, then Z columns).
    std::vector<PolyMatrix> blocks;
    /// Constant (frames * rows) x 2 (frames + m) n matrix.
    PolyMatrix band;
};

SemiInfiniteSlice expand_semi_infinite(const StabilizerMatrix& s, std::size_t frames);
/// Reads S(D) back from the first block-row of the band.
StabilizerMatrix reconstruct(const SemiInfiniteSlice& slice);

/// Pauli-letter rendering over F_2 (blank, X, Z, Y); "(x,z)" cells otherwise.
/// One line per band row, each terminated by a newline.
std::string render_pauli(const SemiInfiniteSlice& slice);

/// `field p^ell`, `n N`, then one `X entries | Z entries` line per generator.
std::string format_stabilizer(const StabilizerMatrix& s);
StabilizerMatrix parse_stabilizer(std::string_view text);

}  // namespace qcc

#endif

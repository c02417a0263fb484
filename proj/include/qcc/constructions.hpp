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

#ifndef QCC_CONSTRUCTIONS_HPP
#define QCC_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>

#include "qcc/classical.hpp"
#include "qcc/stabilizer.hpp"

namespace qcc {

/// H_2(D) H_1(1/D)^t = 0: the condition under which the CSS stabilizer
/// commutes.
bool css_dual_contained(const PolyMatrix& h1, const PolyMatrix& h2);

/**
 * CSS stabilizer (H_2 | 0 ; 0 | H_1).
 *
 * H_1 is the (n - k_1) x n parity check of C_1 and H_2 the k_2 x n parity
 * check of C_2; either may have zero rows. Nonempty checks must be
 * non-catastrophic and delay-free. The code has k = k_1 - k_2.
 */
StabilizerMatrix css_construct(const PolyMatrix& h1, const PolyMatrix& h2);

/**
 * Product stabilizer (G_1 (x) S_X | G_1 (x) S_Z).
 *
 * G_1 lives over the prime field F_p and its coefficients scale the F_q
 * entries of S_2. Column block j of the result holds G_1's column j, so wire
 * j * n_2 + a of the product is wire a of the j-th copy of S_2.
 */
StabilizerMatrix product_construct(const ConvCode& g1, const StabilizerMatrix& s2);

/// min(d_free of the dual of G_1, d_2): the distance bound for the product
/// code, recorded as metadata. Not a verified distance.
int product_distance_bound(const ConvCode& g1, int d2);

/// (d - 1) x n2 matrix with row i equal to (alpha^{0 i}, alpha^{1 i}, ...,
/// alpha^{(n2 - 1) i}). Requires alpha of multiplicative order exactly n2 and
/// 2 (d - 1) < n2, which makes every pair of rows orthogonal.
PolyMatrix cyclic_g2(Field f, std::size_t n2, std::size_t d, Elem alpha);

struct OverlappedCode {
    /// X-only stabilizer (G(D) | 0) with frame size (n1 - mu) n2.
    StabilizerMatrix stabilizer;
    /// Result of is_catastrophic on G(D) (true for rank-deficient G).
    bool catastrophic = false;
};

/**
 * Convolutional code from the block code G_1 (x) G_2 with column blocks
 * overlapping in mu n2 positions.
 *
 * Column block j of G_1 (x) G_2 lands on frame positions
 * [(j mod (n1 - mu)) n2, ...) with delay D^{floor(j / (n1 - mu))}. Requires
 * 1 <= mu < n1, constant G_1 and G_2, and G_2 G_2^t = 0.
 */
OverlappedCode overlapped_generator(const PolyMatrix& g1, const PolyMatrix& g2, std::size_t mu);

}  // namespace qcc

#endif

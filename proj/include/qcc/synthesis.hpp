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

// Encoder synthesis.
//
// Each procedure produces an inverse-encoding circuit U^-1 and a row
// transform R such that R * (S after U^-1) = (0 | I 0). The encoder is the
// inverse circuit reversed. Row operations are free (they change the
// generator set, not the code) and are only tracked.

#ifndef QCC_SYNTHESIS_HPP
#define QCC_SYNTHESIS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qcc/classical.hpp"
#include "qcc/clifford.hpp"
#include "qcc/stabilizer.hpp"

namespace qcc {

struct IntermediateForm {
    std::string label;
    StabilizerMatrix form;
};

struct SynthesisResult {
    StabilizerMatrix input;
    Circuit inverse_circuit;
    Circuit encoder_circuit;
    /// Always (0 | I 0).
    StabilizerMatrix final_form;
    /// Laurent-unimodular; final_form = row_transform * apply(input, inverse_circuit).
    PolyMatrix row_transform;
    CircuitStats inverse_stats;
    CircuitStats encoder_stats;
    std::vector<IntermediateForm> intermediates;
    /// Elementary column operations performed (each one emits at most
    /// 6 (deg + 1) gates for a factor of degree deg).
    std::size_t column_ops = 0;
    /// Largest degree of a column-addition factor (0 when there is none).
    int max_factor_degree = 0;

    /// 6 * column_ops * (max_factor_degree + 1) + 2n: every column operation
    /// emits at most 6 (deg + 1) gates, the DFT layers at most 2n.
    std::size_t gate_bound() const;
};

/// Polynomial bound on the gate count (hence the depth) of every synthesized
/// inverse encoder: 12 n^2 (m + 1)^2 + 2n, where m is the largest entry
/// degree of the stabilizer. A row needs at most n column operations per
/// Smith pivot and each costs at most 6 (m + 1) gates.
std::size_t synthesis_depth_bound(std::size_t n, int m);

/**
 * CSS encoder from parity checks H_1 ((n - k_1) x n) and H_2 (k_2 x n).
 *
 *   1. Smith form of H_2; its column operations become gates and the X part
 *      of the H_2 rows becomes (I 0).
 *   2. Symplectic orthogonality then forces the Z part of the H_1 rows to
 *      vanish on the first k_2 columns.
 *   3. DFT on the remaining nonzero columns, making the stabilizer X-only.
 *   4. Smith form of that block after a per-row shift to polynomial entries;
 *      monomial invariant factors are removed by further row shifts.
 *   5. DFT on the first k_2 + (n - k_1) wires.
 *
 * A stabilizer that is already (0 | I 0) gives the empty circuit.
 */
SynthesisResult synthesize_css_encoder(const PolyMatrix& h1, const PolyMatrix& h2);

/**
 * Degree-0 encoder for a constant, self-orthogonal, full-rank stabilizer.
 *
 * Row by row: move an X pivot onto the diagonal (DFT if the row has no X
 * entry left, then a wire swap), clear the other X entries with column
 * additions, clear Z on the diagonal with PHASE and off the diagonal with a
 * controlled-phase built from DFT, ADD, DFT^-1. The stabilizer is then
 * (I 0 | 0), recorded as the last intermediate, and a DFT layer on the
 * first r wires finishes. Only l = 0 gates appear.
 */
SynthesisResult synthesize_block_inverse_encoder(const StabilizerMatrix& s);

/**
 * Encoder for product_construct(G_1, S_2).
 *
 *   1. The block circuit for S_2 without its DFT layer, on every n_2-wire
 *      block; the stabilizer becomes (G_1 (x) (I_r 0) | 0).
 *   2. For each a < r, the step-1 CSS circuit of G_1 on wires
 *      a, n_2 + a, 2 n_2 + a, ... (one copy per row of S_2).
 *   3. Wire swaps moving the pivots to wires 0..r k_1 - 1 (only needed when
 *      k_1 > 1), then a DFT layer.
 *
 * With G_1 = (1) the circuit equals synthesize_block_inverse_encoder(S_2).
 */
SynthesisResult synthesize_product_encoder(const ConvCode& g1, const StabilizerMatrix& s2);

/// Whether S after the circuit is row-equivalent over F_q[D, 1/D] to
/// (0 | I 0).
bool verify_inverse_encoder(const StabilizerMatrix& s, const Circuit& inverse_circuit);

}  // namespace qcc

#endif

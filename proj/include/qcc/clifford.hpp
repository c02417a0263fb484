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

// Frame-translation-invariant Clifford gates acting on (X(D) | Z(D)).
//
// Column actions, wire indices relative to one frame:
//
//   DFT(i)          (X_i, Z_i) <- (Z_i, -X_i)
//   MULT(i, g)      X_i <- g^-1 X_i,  Z_i <- g Z_i
//   PHASE(i, g)     Z_i <- Z_i + g X_i
//   ADD(i, j, l)    X_j <- X_j + D^l X_i,  Z_i <- Z_i - D^-l Z_j
//   CPHASE(i, l)    Z_i <- Z_i + (D^l + D^-l) X_i
//
// ADD(i, j, l) couples qudit i of every frame with qudit j of the frame l
// steps later. CPHASE(i, l) couples qudit i of every frame with qudit i of the
// frame l steps later; its column action is self-adjoint so it preserves
// symplectic orthogonality in every characteristic (in characteristic 2 the
// sign of D^-l is immaterial).

#ifndef QCC_CLIFFORD_HPP
#define QCC_CLIFFORD_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/stabilizer.hpp"

namespace qcc {

enum class GateKind { DFT, Mult, Phase, Add, CPhase };

struct CliffordGate {
    GateKind kind;
    std::size_t wire = 0;
    /// Target wire of ADD.
    std::size_t target = 0;
    /// MULT / PHASE parameter.
    Elem gamma = 0;
    /// ADD / CPHASE delay in frames.
    int delay = 0;

    static CliffordGate dft(std::size_t i) { return {GateKind::DFT, i, 0, 0, 0}; }
    static CliffordGate mult(std::size_t i, Elem g) { return {GateKind::Mult, i, 0, g, 0}; }
    static CliffordGate phase(std::size_t i, Elem g) { return {GateKind::Phase, i, 0, g, 0}; }
    static CliffordGate add(std::size_t i, std::size_t j, int l) { return {GateKind::Add, i, j, 0, l}; }
    static CliffordGate cphase(std::size_t i, int l) { return {GateKind::CPhase, i, 0, 0, l}; }

    /// Frame-relative wires the gate touches.
    std::vector<std::size_t> wires() const;

    friend bool operator==(const CliffordGate& a, const CliffordGate& b) noexcept {
        return a.kind == b.kind && a.wire == b.wire && a.target == b.target && a.gamma == b.gamma &&
               a.delay == b.delay;
    }
};

/// Throws DomainError if the gate's parameters are invalid for the field and
/// frame size.
void validate_gate(const CliffordGate& g, Field f, std::size_t n);

class Circuit {
   public:
    Circuit(Field f, std::size_t n) : f_(f), n_(n) {}

    Field field() const noexcept { return f_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<CliffordGate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    void push(const CliffordGate& g);
    /// Skips MULT by 1 and PHASE by 0.
    void push_nontrivial(const CliffordGate& g);
    void append(const Circuit& c);
    void append(const std::vector<CliffordGate>& gs);

   private:
    Field f_;
    std::size_t n_;
    std::vector<CliffordGate> gates_;
};

StabilizerMatrix apply_gate(const StabilizerMatrix& s, const CliffordGate& g);
StabilizerMatrix apply_circuit(const StabilizerMatrix& s, const Circuit& c);

/// Gates whose combined action undoes `g`:
///   DFT^-1    = DFT, MULT(-1)
///   MULT(g)^-1 = MULT(g^-1)
///   PHASE(g)^-1 = PHASE(-g)
///   ADD^-1    = MULT(i, -1), ADD, MULT(i, -1)
///   CPHASE^-1 = CPHASE repeated p - 1 times
/// MULT(1) factors are dropped, so in characteristic 2 every gate is its own
/// inverse.
std::vector<CliffordGate> inverse_gates(const CliffordGate& g, Field f);
/// Reverse order, each gate inverted.
Circuit inverse(const Circuit& c);

/// Gates realizing X_j <- X_j + f X_i (and the forced Z_i <- Z_i - f(1/D) Z_j):
/// per monomial c D^t, MULT(i, c^-1), ADD(i, j, t), MULT(i, c), or just
/// ADD(i, j, t) when c = 1.
std::vector<CliffordGate> decompose_column_addition(const LaurentPoly& f, std::size_t i, std::size_t j);

/// Exchanges columns i and j up to signs: X_i <- X_j, X_j <- X_i, Z likewise.
/// ADD(i, j, 0), ADD(j, i, 0) scaled by -1, ADD(i, j, 0), MULT(i, -1).
std::vector<CliffordGate> wire_swap(Field f, std::size_t i, std::size_t j);

struct CircuitStats {
    std::size_t gate_count = 0;
    std::size_t depth = 0;
};

/// Greedy layering: each gate goes in the first layer after the last one
/// using any of its wires (wires taken modulo n, so a delayed partner j + l n
/// aliases wire j). CPHASE occupies its wire for two layers, since every
/// qudit takes part in two of its frame-shifted copies.
CircuitStats circuit_stats(const Circuit& c);

/// Depth of the circuit unrolled on a finite stream of `frames` frames: every
/// gate becomes one instance per frame offset on physical qudits, instances
/// reaching outside the stream are dropped, and layering is greedy over
/// physical qudits.
std::size_t unrolled_depth(const Circuit& c, std::size_t frames);

/// Removes adjacent inverse pairs and merges consecutive MULT / PHASE gates
/// on the same wire; gates on disjoint wires are commuted past each other
/// while looking for a partner.
Circuit cancel_inverse_pairs(const Circuit& c);

std::string format_gate(const CliffordGate& g, Field f);
/// `field p^ell`, `n N`, then one gate per line.
std::string format_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace qcc

#endif

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

#include "qcc/synthesis.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qcc/constructions.hpp"
#include "qcc/error.hpp"
#include "qcc/smith.hpp"

namespace qcc {

std::size_t SynthesisResult::gate_bound() const {
    return 6 * column_ops * static_cast<std::size_t>(max_factor_degree + 1) + 2 * input.n();
}

std::size_t synthesis_depth_bound(std::size_t n, int m) {
    auto mm = static_cast<std::size_t>(std::max(m, 0) + 1);
    return 12 * n * n * mm * mm + 2 * n;
}

namespace {

// Working state: the current stabilizer, the accumulated row transform and
// the circuit emitted so far.
class Work {
   public:
    explicit Work(const StabilizerMatrix& s)
        : input_(s), s_(s), r_(PolyMatrix::identity(s.field(), s.rows())), c_(s.field(), s.n()) {}

    Field field() const { return s_.field(); }
    const StabilizerMatrix& current() const { return s_; }
    std::size_t ops() const { return ops_; }
    const Circuit& circuit() const { return c_; }
    const PolyMatrix& row_transform() const { return r_; }
    void absorb_ops(std::size_t n) { ops_ += n; }

    void gate(const CliffordGate& g) {
        c_.push_nontrivial(g);
        s_ = apply_gate(s_, g);
    }
    void gates(const std::vector<CliffordGate>& gs) {
        for (const auto& g : gs) gate(g);
    }

    // X_dst += f X_src.
    void col_add(const LaurentPoly& f, std::size_t src, std::size_t dst) {
        if (f.is_zero()) return;
        ++ops_;
        max_deg_ = std::max(max_deg_, std::max(f.degree(), -f.low()));
        gates(decompose_column_addition(f, src, dst));
    }
    // X_w <- c X_w.
    void col_scale(std::size_t w, Elem c) {
        if (c == 1) return;
        ++ops_;
        gate(CliffordGate::mult(w, field().inv(c)));
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        ++ops_;
        gates(wire_swap(field(), a, b));
    }
    // One counted operation made of gates that add no column-addition factor.
    void counted(const std::vector<CliffordGate>& gs) {
        ++ops_;
        gates(gs);
    }

    void row_op(const ElementaryOp& op) {
        apply_op(s_.x(), op);
        apply_op(s_.z(), op);
        apply_op(r_, op);
    }
    void row_add(std::size_t target, std::size_t source, const LaurentPoly& f) {
        if (!f.is_zero()) row_op({OpKind::RowAdd, target, source, 1, f});
    }
    void row_scale(std::size_t i, Elem c) {
        if (c != 1) row_op({OpKind::RowScale, i, i, c, LaurentPoly(field())});
    }
    void row_shift(std::size_t i, int s) {
        if (s == 0) return;
        for (PolyMatrix* m : {&s_.x(), &s_.z(), &r_}) {
            for (std::size_t j = 0; j < m->cols(); ++j) (*m)(i, j) = (*m)(i, j).shifted(s);
        }
    }
    void left_multiply(const PolyMatrix& m) {
        s_ = StabilizerMatrix(m * s_.x(), m * s_.z());
        r_ = m * r_;
    }

    // Replays a Smith trace computed on a submatrix; rows and columns of the
    // submatrix map to stabilizer rows and wires.
    void replay(const std::vector<ElementaryOp>& trace, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& wires) {
        for (const auto& op : trace) {
            switch (op.kind) {
                case OpKind::RowSwap:
                case OpKind::RowScale:
                case OpKind::RowAdd: {
                    ElementaryOp m = op;
                    m.target = rows[op.target];
                    m.source = rows[op.source];
                    row_op(m);
                    break;
                }
                case OpKind::ColSwap:
                    col_swap(wires[op.target], wires[op.source]);
                    break;
                case OpKind::ColScale:
                    col_scale(wires[op.target], op.unit);
                    break;
                case OpKind::ColAdd:
                    col_add(op.factor, wires[op.source], wires[op.target]);
                    break;
            }
        }
    }

    void note(std::string label) { notes_.push_back({std::move(label), s_}); }

    // Row p must be X-only with X = c e_p. DFT on wires 0..rows-1, then
    // rescale rows to reach (0 | I 0).
    void finish_from_x_pivots(const char* label) {
        std::size_t r = s_.rows();
        for (std::size_t p = 0; p < r; ++p) gate(CliffordGate::dft(p));
        for (std::size_t p = 0; p < r; ++p) {
            Elem c = s_.z()(p, p).trailing();
            if (c == 0) throw std::logic_error("synthesis lost a pivot");
            row_scale(p, field().inv(c));
        }
        note(label);
    }

    SynthesisResult finish() {
        auto target = StabilizerMatrix::trivial(field(), s_.n(), s_.n() - s_.rows());
        if (s_ != target) throw std::logic_error("synthesis did not reach (0 | I 0)");
        Circuit enc = inverse(c_);
        SynthesisResult out{input_, c_, enc, s_, r_, circuit_stats(c_), circuit_stats(enc), std::move(notes_),
                            ops_, max_deg_};
        return out;
    }

   private:
    StabilizerMatrix input_;
    StabilizerMatrix s_;
    PolyMatrix r_;
    Circuit c_;
    std::vector<IntermediateForm> notes_;
    std::size_t ops_ = 0;
    int max_deg_ = 0;
};

std::vector<std::size_t> iota(std::size_t n, std::size_t start = 0, std::size_t stride = 1) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = start + i * stride;
    return v;
}

bool is_trivial_form(const StabilizerMatrix& s) {
    return s.rows() <= s.n() && s == StabilizerMatrix::trivial(s.field(), s.n(), s.n() - s.rows());
}

bool rows_are_unit_x(const StabilizerMatrix& s, std::size_t r0, std::size_t nr, std::size_t c0) {
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < s.n(); ++j) {
            bool want = j == c0 + i;
            if (!s.z()(r0 + i, j).is_zero()) return false;
            const auto& e = s.x()(r0 + i, j);
            if (want ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

void require_rank(const StabilizerMatrix& s) {
    if (s.rows() > s.n() || stabilizer_rank(s) != s.rows()) {
        throw DomainError("stabilizer rows are not linearly independent");
    }
}

// The block reduction up to (I 0 | 0); returns the X-only circuit's state.
void block_reduce(Work& w) {
    Field f = w.field();
    std::size_t r = w.current().rows();
    std::size_t n = w.current().n();
    auto x = [&](std::size_t i, std::size_t j) { return w.current().x()(i, j).trailing(); };
    auto z = [&](std::size_t i, std::size_t j) { return w.current().z()(i, j).trailing(); };
    for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t i = 0; i < t; ++i) {
            Elem c = x(t, i);
            if (c != 0) w.row_add(t, i, LaurentPoly::constant(f, f.neg(c)));
            if (z(t, i) != 0) throw DomainError("stabilizer is not self-orthogonal");
        }
        std::optional<std::size_t> pivot;
        for (std::size_t j = t; j < n && !pivot; ++j) {
            if (x(t, j) != 0) pivot = j;
        }
        if (!pivot) {
            for (std::size_t j = t; j < n && !pivot; ++j) {
                if (z(t, j) != 0) pivot = j;
            }
            if (!pivot) throw DomainError("stabilizer rows are not linearly independent");
            w.counted({CliffordGate::dft(*pivot)});
        }
        w.col_swap(t, *pivot);
        w.row_scale(t, f.inv(x(t, t)));
        for (std::size_t j = t + 1; j < n; ++j) {
            Elem c = x(t, j);
            if (c != 0) w.col_add(LaurentPoly::constant(f, f.neg(c)), t, j);
        }
        if (z(t, t) != 0) w.counted({CliffordGate::phase(t, f.neg(z(t, t)))});
        for (std::size_t j = t + 1; j < n; ++j) {
            Elem c = z(t, j);
            if (c == 0) continue;
            // Controlled phase: Z_j += g X_t and Z_t += g X_j.
            std::vector<CliffordGate> cz{CliffordGate::dft(j)};
            for (const auto& g : decompose_column_addition(LaurentPoly::constant(f, f.neg(c)), t, j)) cz.push_back(g);
            for (const auto& g : inverse_gates(CliffordGate::dft(j), f)) cz.push_back(g);
            w.counted(cz);
        }
    }
    if (!rows_are_unit_x(w.current(), 0, r, 0)) throw std::logic_error("block reduction did not reach (I 0 | 0)");
}

}  // namespace

SynthesisResult synthesize_css_encoder(const PolyMatrix& h1, const PolyMatrix& h2) {
    StabilizerMatrix s = css_construct(h1, h2);
    require_rank(s);
    Work w(s);
    if (is_trivial_form(s)) return w.finish();
    std::size_t n = s.n();
    std::size_t k2 = h2.rows();
    std::size_t m1 = h1.rows();

    if (k2 > 0) {
        auto snf = smith_normal_form(h2);
        if (!snf.all_units()) throw DomainError("H2 is catastrophic");
        w.replay(snf.trace, iota(k2), iota(n));
        if (!rows_are_unit_x(w.current(), 0, k2, 0)) throw std::logic_error("step 1 did not reach (I 0)");
    }
    w.note("(1) Smith form of H2: X part of the first k2 rows is (I 0)");

    for (std::size_t i = k2; i < k2 + m1; ++i) {
        for (std::size_t j = 0; j < k2; ++j) {
            if (!w.current().z()(i, j).is_zero()) throw std::logic_error("orthogonality did not clear Z columns");
        }
    }

    for (std::size_t j = k2; j < n; ++j) {
        bool used = false;
        for (std::size_t i = k2; i < k2 + m1; ++i) used = used || !w.current().z()(i, j).is_zero();
        if (used) w.gate(CliffordGate::dft(j));
    }
    w.note("(3) DFT on the remaining columns: X-only");

    if (m1 > 0) {
        for (std::size_t i = k2; i < k2 + m1; ++i) w.row_shift(i, -w.current().x().row_low(i));
        auto block = w.current().x().block(k2, k2, m1, n - k2);
        auto snf = smith_normal_form(block);
        if (snf.rank != m1) throw DomainError("H1 is rank deficient");
        w.replay(snf.trace, iota(m1, k2), iota(n - k2, k2));
        for (std::size_t i = 0; i < m1; ++i) {
            const auto& d = snf.diagonal(i, i);
            if (!d.is_monomial()) throw DomainError("H1 is catastrophic (invariant factor is not a monomial)");
            w.row_shift(k2 + i, -d.low());
        }
        if (!rows_are_unit_x(w.current(), k2, m1, k2)) throw std::logic_error("step 4 did not reach (I 0)");
    }
    w.note("(4) Smith form of the X-only block: (I 0 | 0)");

    w.finish_from_x_pivots("(5) DFT layer: (0 | I 0)");
    return w.finish();
}

SynthesisResult synthesize_block_inverse_encoder(const StabilizerMatrix& s) {
    if (!s.is_constant()) throw DomainError("block synthesis needs a constant stabilizer");
    if (!is_self_orthogonal(s)) throw DomainError("stabilizer is not self-orthogonal");
    require_rank(s);
    Work w(s);
    if (is_trivial_form(s)) return w.finish();
    block_reduce(w);
    w.note("X-only form (I 0 | 0)");
    w.finish_from_x_pivots("DFT layer: (0 | I 0)");
    return w.finish();
}

SynthesisResult synthesize_product_encoder(const ConvCode& g1, const StabilizerMatrix& s2) {
    if (!s2.is_constant()) throw DomainError("the quantum factor must be a constant (block) stabilizer");
    if (!is_self_orthogonal(s2)) throw DomainError("the quantum factor is not self-orthogonal");
    require_rank(s2);
    StabilizerMatrix s = product_construct(g1, s2);
    Field f = s.field();
    std::size_t r = s2.rows();
    std::size_t n2 = s2.n();
    std::size_t k1 = g1.k();
    std::size_t n1 = g1.n();

    Work block(s2);
    block_reduce(block);
    Work w(s);
    for (std::size_t j1 = 0; j1 < n1; ++j1) {
        std::size_t off = j1 * n2;
        for (CliffordGate g : block.circuit().gates()) {
            g.wire += off;
            if (g.kind == GateKind::Add) g.target += off;
            w.gate(g);
        }
        w.absorb_ops(block.ops());
    }
    w.left_multiply(kron(PolyMatrix::identity(f, k1), block.row_transform()));
    PolyMatrix g1q = g1.generator().lifted(f);
    PolyMatrix unit_x(f, r, n2);
    for (std::size_t a = 0; a < r; ++a) unit_x(a, a) = LaurentPoly::one(f);
    if (w.current().x() != kron(g1q, unit_x) || !w.current().z().is_zero()) {
        throw std::logic_error("product phase 1 did not reach (G1 (x) (I 0) | 0)");
    }
    w.note("(1) block circuit on every block: (G1 (x) (I 0) | 0)");

    auto snf = smith_normal_form(g1q);
    if (!snf.all_units()) throw DomainError("the classical factor is catastrophic");
    for (std::size_t a = 0; a < r; ++a) w.replay(snf.trace, iota(k1, a, r), iota(n1, a, n2));
    w.note("(2) classical circuit on each of the r replicas");

    std::size_t rows = s.rows();
    for (std::size_t p = 0; p < rows; ++p) {
        std::optional<std::size_t> at;
        for (std::size_t j = 0; j < s.n(); ++j) {
            if (!w.current().x()(p, j).is_zero()) {
                if (at) throw std::logic_error("product phase 2 left a row with two X entries");
                at = j;
            }
        }
        if (!at) throw std::logic_error("product phase 2 lost a pivot");
        w.col_swap(p, *at);
        w.row_scale(p, f.inv(w.current().x()(p, p).trailing()));
    }
    if (!rows_are_unit_x(w.current(), 0, rows, 0)) throw std::logic_error("compaction did not reach (I 0 | 0)");
    w.note("wire compaction: (I 0 | 0)");
    w.finish_from_x_pivots("(3) DFT layer: (0 | I 0)");
    return w.finish();
}

bool verify_inverse_encoder(const StabilizerMatrix& s, const Circuit& inverse_circuit) {
    if (s.field() != inverse_circuit.field() || s.n() != inverse_circuit.n()) return false;
    if (s.rows() > s.n()) return false;
    auto t = apply_circuit(s, inverse_circuit);
    auto target = StabilizerMatrix::trivial(s.field(), s.n(), s.n() - s.rows());
    return row_equivalent(t.combined(), target.combined(), Ring::Laurent);
}

}  // namespace qcc

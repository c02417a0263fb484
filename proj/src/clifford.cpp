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

#include "qcc/clifford.hpp"

#include <algorithm>
#include <map>

#include "qcc/error.hpp"
#include "qcc/text_format.hpp"

namespace qcc {

std::vector<std::size_t> CliffordGate::wires() const {
    if (kind == GateKind::Add) return {wire, target};
    return {wire};
}

void validate_gate(const CliffordGate& g, Field f, std::size_t n) {
    for (std::size_t w : g.wires()) {
        if (w >= n) throw DomainError("gate wire " + std::to_string(w) + " out of range for frame size " + std::to_string(n));
    }
    switch (g.kind) {
        case GateKind::Mult:
            if (g.gamma == 0) throw DomainError("MULT needs a nonzero gamma");
            [[fallthrough]];
        case GateKind::Phase:
            if (!f.contains(g.gamma)) throw DomainError("gamma is not an element of F_" + std::to_string(f.q()));
            break;
        case GateKind::Add:
            if (g.wire == g.target) throw DomainError("ADD needs distinct wires");
            if (g.delay < 0) throw DomainError("ADD delay must be nonnegative");
            break;
        case GateKind::CPhase:
            if (g.delay == 0) throw DomainError("CPHASE delay must be nonzero");
            break;
        case GateKind::DFT:
            break;
    }
}

void Circuit::push(const CliffordGate& g) {
    validate_gate(g, f_, n_);
    gates_.push_back(g);
}

void Circuit::push_nontrivial(const CliffordGate& g) {
    if (g.kind == GateKind::Mult && g.gamma == 1) return;
    if (g.kind == GateKind::Phase && g.gamma == 0) return;
    push(g);
}

void Circuit::append(const Circuit& c) {
    if (c.n_ != n_ || c.f_ != f_) throw DomainError("cannot concatenate circuits of different shape");
    gates_.insert(gates_.end(), c.gates_.begin(), c.gates_.end());
}

void Circuit::append(const std::vector<CliffordGate>& gs) {
    for (const auto& g : gs) push(g);
}

namespace {

void apply_in_place(StabilizerMatrix& s, const CliffordGate& g) {
    Field f = s.field();
    PolyMatrix& x = s.x();
    PolyMatrix& z = s.z();
    std::size_t i = g.wire;
    switch (g.kind) {
        case GateKind::DFT:
            for (std::size_t r = 0; r < s.rows(); ++r) {
                LaurentPoly old_x = x(r, i);
                x(r, i) = z(r, i);
                z(r, i) = -old_x;
            }
            break;
        case GateKind::Mult: {
            Elem ginv = f.inv(g.gamma);
            for (std::size_t r = 0; r < s.rows(); ++r) {
                x(r, i) = x(r, i).scaled(ginv);
                z(r, i) = z(r, i).scaled(g.gamma);
            }
            break;
        }
        case GateKind::Phase:
            for (std::size_t r = 0; r < s.rows(); ++r) z(r, i) += x(r, i).scaled(g.gamma);
            break;
        case GateKind::Add: {
            std::size_t j = g.target;
            for (std::size_t r = 0; r < s.rows(); ++r) {
                x(r, j) += x(r, i).shifted(g.delay);
                z(r, i) -= z(r, j).shifted(-g.delay);
            }
            break;
        }
        case GateKind::CPhase:
            for (std::size_t r = 0; r < s.rows(); ++r) {
                const LaurentPoly xi = x(r, i);
                z(r, i) += xi.shifted(g.delay) + xi.shifted(-g.delay);
            }
            break;
    }
}

}  // namespace

StabilizerMatrix apply_gate(const StabilizerMatrix& s, const CliffordGate& g) {
    validate_gate(g, s.field(), s.n());
    StabilizerMatrix out = s;
    apply_in_place(out, g);
    return out;
}

StabilizerMatrix apply_circuit(const StabilizerMatrix& s, const Circuit& c) {
    if (c.n() != s.n()) throw DomainError("circuit frame size does not match the stabilizer");
    if (c.field() != s.field()) throw DomainError("circuit field does not match the stabilizer");
    StabilizerMatrix out = s;
    for (const auto& g : c.gates()) apply_in_place(out, g);
    return out;
}

std::vector<CliffordGate> inverse_gates(const CliffordGate& g, Field f) {
    Elem minus_one = f.neg(1);
    std::vector<CliffordGate> out;
    auto mult = [&](std::size_t w, Elem gamma) {
        if (gamma != 1) out.push_back(CliffordGate::mult(w, gamma));
    };
    switch (g.kind) {
        case GateKind::DFT:
            out.push_back(g);
            mult(g.wire, minus_one);
            break;
        case GateKind::Mult:
            out.push_back(CliffordGate::mult(g.wire, f.inv(g.gamma)));
            break;
        case GateKind::Phase:
            out.push_back(CliffordGate::phase(g.wire, f.neg(g.gamma)));
            break;
        case GateKind::Add:
            mult(g.wire, minus_one);
            out.push_back(g);
            mult(g.wire, minus_one);
            break;
        case GateKind::CPhase:
            for (int k = 0; k < f.p() - 1; ++k) out.push_back(g);
            break;
    }
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out(c.field(), c.n());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(inverse_gates(*it, c.field()));
    return out;
}

std::vector<CliffordGate> decompose_column_addition(const LaurentPoly& f, std::size_t i, std::size_t j) {
    if (!f.is_polynomial()) throw DomainError("column addition factor has negative exponents");
    if (i == j) throw DomainError("column addition needs distinct wires");
    Field fld = f.field();
    std::vector<CliffordGate> out;
    for (int t = f.low(); t <= f.degree(); ++t) {
        Elem c = f.coeff(t);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(CliffordGate::add(i, j, t));
        } else {
            out.push_back(CliffordGate::mult(i, fld.inv(c)));
            out.push_back(CliffordGate::add(i, j, t));
            out.push_back(CliffordGate::mult(i, c));
        }
    }
    return out;
}

std::vector<CliffordGate> wire_swap(Field f, std::size_t i, std::size_t j) {
    Elem minus_one = f.neg(1);
    std::vector<CliffordGate> out{CliffordGate::add(i, j, 0)};
    auto back = decompose_column_addition(LaurentPoly::constant(f, minus_one), j, i);
    out.insert(out.end(), back.begin(), back.end());
    out.push_back(CliffordGate::add(i, j, 0));
    if (minus_one != 1) out.push_back(CliffordGate::mult(i, minus_one));
    return out;
}

CircuitStats circuit_stats(const Circuit& c) {
    std::vector<std::size_t> last(c.n(), 0);
    std::size_t depth = 0;
    for (const auto& g : c.gates()) {
        std::size_t layer = 0;
        for (std::size_t w : g.wires()) layer = std::max(layer, last[w]);
        layer += g.kind == GateKind::CPhase ? 2 : 1;
        for (std::size_t w : g.wires()) last[w] = layer;
        depth = std::max(depth, layer);
    }
    return {c.size(), depth};
}

std::size_t unrolled_depth(const Circuit& c, std::size_t frames) {
    std::size_t n = c.n();
    std::vector<std::size_t> level(frames * n, 0);
    std::size_t depth = 0;
    auto place = [&](std::vector<std::pair<std::size_t, std::size_t>> batch) {
        // Instances within one batch are qudit-disjoint.
        std::vector<std::size_t> layers;
        for (auto [a, b] : batch) layers.push_back(std::max(level[a], level[b]) + 1);
        for (std::size_t k = 0; k < batch.size(); ++k) {
            level[batch[k].first] = layers[k];
            level[batch[k].second] = layers[k];
            depth = std::max(depth, layers[k]);
        }
    };
    long long total = static_cast<long long>(frames);
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Add || g.kind == GateKind::CPhase) {
            std::size_t j = g.kind == GateKind::Add ? g.target : g.wire;
            long long d = g.delay;
            std::vector<std::pair<std::size_t, std::size_t>> even;
            std::vector<std::pair<std::size_t, std::size_t>> odd;
            for (long long t = 0; t < total; ++t) {
                if (t + d < 0 || t + d >= total) continue;
                std::pair<std::size_t, std::size_t> inst{t * n + g.wire, (t + d) * n + j};
                bool second = g.kind == GateKind::CPhase && ((t / std::llabs(d)) % 2 == 1);
                (second ? odd : even).push_back(inst);
            }
            place(even);
            place(odd);
        } else {
            std::vector<std::pair<std::size_t, std::size_t>> batch;
            for (std::size_t t = 0; t < frames; ++t) batch.push_back({t * n + g.wire, t * n + g.wire});
            place(batch);
        }
    }
    return depth;
}

namespace {

bool shares_wire(const CliffordGate& a, const CliffordGate& b) {
    for (std::size_t u : a.wires()) {
        for (std::size_t v : b.wires()) {
            if (u == v) return true;
        }
    }
    return false;
}

enum class Merge { None, Cancel, Replace };

// How `later` combines with `earlier` when they are adjacent.
Merge combine(const CliffordGate& earlier, const CliffordGate& later, Field f, CliffordGate& merged) {
    if (earlier.kind != later.kind || earlier.wire != later.wire) return Merge::None;
    switch (earlier.kind) {
        case GateKind::Mult:
            merged = CliffordGate::mult(earlier.wire, f.mul(earlier.gamma, later.gamma));
            return merged.gamma == 1 ? Merge::Cancel : Merge::Replace;
        case GateKind::Phase:
            merged = CliffordGate::phase(earlier.wire, f.add(earlier.gamma, later.gamma));
            return merged.gamma == 0 ? Merge::Cancel : Merge::Replace;
        case GateKind::DFT:
            return f.p() == 2 ? Merge::Cancel : Merge::None;
        case GateKind::Add:
            return f.p() == 2 && earlier.target == later.target && earlier.delay == later.delay ? Merge::Cancel
                                                                                               : Merge::None;
        case GateKind::CPhase:
            return f.p() == 2 && std::abs(earlier.delay) == std::abs(later.delay) ? Merge::Cancel : Merge::None;
    }
    return Merge::None;
}

}  // namespace

Circuit cancel_inverse_pairs(const Circuit& c) {
    std::vector<CliffordGate> gates = c.gates();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<CliffordGate> out;
        for (const auto& g : gates) {
            bool absorbed = false;
            for (std::size_t k = out.size(); k-- > 0;) {
                if (!shares_wire(out[k], g)) continue;
                CliffordGate merged = g;
                Merge m = combine(out[k], g, c.field(), merged);
                if (m == Merge::Cancel) {
                    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
                    absorbed = true;
                } else if (m == Merge::Replace) {
                    out[k] = merged;
                    absorbed = true;
                }
                break;
            }
            if (absorbed) {
                changed = true;
            } else {
                out.push_back(g);
            }
        }
        gates = std::move(out);
    }
    Circuit result(c.field(), c.n());
    result.append(gates);
    return result;
}

std::string format_gate(const CliffordGate& g, Field f) {
    switch (g.kind) {
        case GateKind::DFT:
            return "DFT " + std::to_string(g.wire);
        case GateKind::Mult:
            return "MULT " + std::to_string(g.wire) + " gamma=" + format_element(f, g.gamma);
        case GateKind::Phase:
            return "PHASE " + std::to_string(g.wire) + " gamma=" + format_element(f, g.gamma);
        case GateKind::Add:
            return "ADD " + std::to_string(g.wire) + " " + std::to_string(g.target) + " l=" + std::to_string(g.delay);
        case GateKind::CPhase:
            return "CPHASE " + std::to_string(g.wire) + " l=" + std::to_string(g.delay);
    }
    return {};
}

std::string format_circuit(const Circuit& c) {
    std::string out = format_field_header(c.field()) + "\nn " + std::to_string(c.n()) + "\n";
    for (const auto& g : c.gates()) out += format_gate(g, c.field()) + "\n";
    return out;
}

namespace {

std::size_t parse_wire(const std::string& w, const TextLine& line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(w, &pos);
        if (pos != w.size() || v < 0) throw std::invalid_argument(w);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line.number) + ": bad wire index '" + w + "'");
    }
}

std::string keyed_value(const std::string& word, std::string_view key, const TextLine& line) {
    std::string prefix = std::string(key) + "=";
    if (word.rfind(prefix, 0) != 0) {
        throw ParseError("line " + std::to_string(line.number) + ": expected '" + prefix + "...', got '" + word + "'");
    }
    return word.substr(prefix.size());
}

int parse_delay(const std::string& word, const TextLine& line) {
    std::string v = keyed_value(word, "l", line);
    try {
        std::size_t pos = 0;
        int d = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line.number) + ": bad delay '" + v + "'");
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.size() < 2) throw ParseError("circuit file needs 'field' and 'n' header lines");
    Field f = [&] {
        try {
            return parse_field_header(lines[0].text);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lines[0].number) + ": " + e.what());
        }
    }();
    long long n = parse_keyed_int(lines[1], "n");
    if (n < 1) throw ParseError("line " + std::to_string(lines[1].number) + ": n must be positive");
    Circuit c(f, static_cast<std::size_t>(n));
    for (std::size_t k = 2; k < lines.size(); ++k) {
        const TextLine& line = lines[k];
        auto words = split_whitespace(line.text);
        const std::string& op = words[0];
        auto arity = [&](std::size_t want) {
            if (words.size() != want) {
                throw ParseError("line " + std::to_string(line.number) + ": " + op + " takes " +
                                 std::to_string(want - 1) + " arguments");
            }
        };
        auto gamma = [&](const std::string& w) {
            try {
                return parse_element(f, keyed_value(w, "gamma", line));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
            }
        };
        CliffordGate g = CliffordGate::dft(0);
        if (op == "DFT") {
            arity(2);
            g = CliffordGate::dft(parse_wire(words[1], line));
        } else if (op == "MULT") {
            arity(3);
            g = CliffordGate::mult(parse_wire(words[1], line), gamma(words[2]));
        } else if (op == "PHASE") {
            arity(3);
            g = CliffordGate::phase(parse_wire(words[1], line), gamma(words[2]));
        } else if (op == "ADD") {
            arity(4);
            g = CliffordGate::add(parse_wire(words[1], line), parse_wire(words[2], line), parse_delay(words[3], line));
        } else if (op == "CPHASE") {
            arity(3);
            g = CliffordGate::cphase(parse_wire(words[1], line), parse_delay(words[2], line));
        } else {
            throw ParseError("line " + std::to_string(line.number) + ": unknown gate '" + op + "'");
        }
        try {
            c.push(g);
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& e) {
            throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
        }
    }
    return c;
}

}  // namespace qcc

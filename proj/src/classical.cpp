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

#include "qcc/classical.hpp"

#include <algorithm>

#include "qcc/smith.hpp"
#include "qcc/text_format.hpp"

namespace qcc {

ConvCode::ConvCode(PolyMatrix g) : g_(std::move(g)) {
    if (!g_.is_polynomial()) throw DomainError("generator entries must be polynomials (no negative exponents)");
    if (g_.rows() == 0 || g_.cols() == 0) throw DomainError("generator matrix must be nonempty");
}

std::vector<int> ConvCode::row_degrees() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < k(); ++i) out.push_back(std::max(0, g_.row_degree(i)));
    return out;
}

int ConvCode::overall_constraint_length() const {
    int nu = 0;
    for (int d : row_degrees()) nu += d;
    return nu;
}

bool is_self_orthogonal_classical(const ConvCode& c) {
    return (c.generator() * c.generator().adjoint_transpose()).is_zero();
}

bool is_delay_free(const ConvCode& c) { return rank(c.generator().coefficient(0)) == c.k(); }

bool is_catastrophic(const ConvCode& c) { return !smith_normal_form(c.generator()).all_units(); }

namespace {

// Finds c with sum_i c_i rows[i] = 0 and c nonzero, by elimination over F_q.
std::optional<std::vector<Elem>> row_dependency(Field f, const std::vector<std::vector<Elem>>& rows) {
    std::size_t k = rows.size();
    std::vector<std::vector<Elem>> basis;   // reduced rows
    std::vector<std::vector<Elem>> combos;  // how each basis row is made from the inputs
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Elem> v = rows[i];
        std::vector<Elem> combo(k, 0);
        combo[i] = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Elem coef = v[pivots[b]];
            if (coef == 0) continue;
            Elem s = f.neg(coef);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(s, basis[b][j]));
            for (std::size_t j = 0; j < k; ++j) combo[j] = f.add(combo[j], f.mul(s, combos[b][j]));
        }
        auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
        if (it == v.end()) return combo;
        Elem inv = f.inv(*it);
        for (auto& e : v) e = f.mul(e, inv);
        for (auto& e : combo) e = f.mul(e, inv);
        pivots.push_back(static_cast<std::size_t>(it - v.begin()));
        basis.push_back(std::move(v));
        combos.push_back(std::move(combo));
    }
    return std::nullopt;
}

}  // namespace

PolyMatrix minimal_basic_form(const PolyMatrix& g) {
    Field f = g.field();
    PolyMatrix out = g;
    for (;;) {
        std::vector<std::vector<Elem>> lead;
        std::vector<int> deg;
        for (std::size_t i = 0; i < out.rows(); ++i) {
            if (out.row_is_zero(i)) throw DomainError("generator has a zero row");
            deg.push_back(out.row_degree(i));
            std::vector<Elem> row;
            for (std::size_t j = 0; j < out.cols(); ++j) row.push_back(out(i, j).coeff(deg[i]));
            lead.push_back(std::move(row));
        }
        auto dep = row_dependency(f, lead);
        if (!dep) return out;
        std::size_t top = out.rows();
        for (std::size_t i = 0; i < out.rows(); ++i) {
            if ((*dep)[i] != 0 && (top == out.rows() || deg[i] >= deg[top])) top = i;
        }
        Elem scale = f.inv((*dep)[top]);
        for (std::size_t j = 0; j < out.cols(); ++j) {
            LaurentPoly acc(f);
            for (std::size_t i = 0; i < out.rows(); ++i) {
                if ((*dep)[i] == 0) continue;
                acc += out(i, j).shifted(deg[top] - deg[i]).scaled(f.mul((*dep)[i], scale));
            }
            out(top, j) = acc;
        }
    }
}

ConvCode dual_generator(const ConvCode& c) {
    if (is_catastrophic(c)) throw DomainError("dual generator requires a non-catastrophic code");
    const PolyMatrix& g = c.generator();
    PolyMatrix m = g.adjoint();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int s = g.row_degree(i);
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).shifted(s);
    }
    PolyMatrix k = kernel_basis(m);
    if (k.rows() == 0) throw DomainError("code has a trivial dual (k = n)");
    return ConvCode(minimal_basic_form(k));
}

int default_weight_cap(const ConvCode& c) {
    return 2 * (c.overall_constraint_length() + 1) * static_cast<int>(c.n());
}

namespace {

constexpr std::uint64_t kMaxTrellisEdges = std::uint64_t{1} << 26;

struct Trellis {
    std::size_t states = 0;
    std::size_t inputs = 0;
    std::vector<std::uint32_t> next;  // states * inputs
    std::vector<std::uint8_t> weight;
};

Trellis build_trellis(const ConvCode& c) {
    Field f = c.field();
    const std::size_t q = f.q();
    const std::size_t k = c.k();
    const std::size_t n = c.n();
    auto nu = c.row_degrees();
    std::size_t total_nu = c.overall_constraint_length();

    std::uint64_t states = 1;
    for (std::size_t i = 0; i < total_nu; ++i) states *= q;
    std::uint64_t inputs = 1;
    for (std::size_t i = 0; i < k; ++i) inputs *= q;
    if (states * inputs > kMaxTrellisEdges) throw DomainError("trellis too large for free-distance search");

    std::vector<std::size_t> offset(k, 0);
    for (std::size_t i = 1; i < k; ++i) offset[i] = offset[i - 1] + nu[i - 1];

    Trellis t;
    t.states = states;
    t.inputs = inputs;
    t.next.resize(states * inputs);
    t.weight.resize(states * inputs);

    std::vector<std::size_t> pow(total_nu + 1, 1);
    for (std::size_t i = 1; i <= total_nu; ++i) pow[i] = pow[i - 1] * q;

    std::vector<Elem> reg(total_nu);
    std::vector<Elem> u(k);
    for (std::size_t s = 0; s < states; ++s) {
        for (std::size_t p = 0, v = s; p < total_nu; ++p, v /= q) reg[p] = static_cast<Elem>(v % q);
        for (std::size_t in = 0; in < inputs; ++in) {
            for (std::size_t i = 0, v = in; i < k; ++i, v /= q) u[i] = static_cast<Elem>(v % q);
            int w = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    const LaurentPoly& g = c.generator()(i, j);
                    if (g.is_zero()) continue;
                    acc = f.add(acc, f.mul(g.coeff(0), u[i]));
                    for (int d = 1; d <= nu[i]; ++d) acc = f.add(acc, f.mul(g.coeff(d), reg[offset[i] + d - 1]));
                }
                w += acc != 0;
            }
            std::size_t ns = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (nu[i] == 0) continue;
                ns += u[i] * pow[offset[i]];
                for (int d = 1; d < nu[i]; ++d) ns += reg[offset[i] + d - 1] * pow[offset[i] + d];
            }
            t.next[s * inputs + in] = static_cast<std::uint32_t>(ns);
            t.weight[s * inputs + in] = static_cast<std::uint8_t>(w);
        }
    }
    return t;
}

// Nonzero states ordered so that zero-weight edges point forward.
std::vector<std::uint32_t> zero_weight_order(const Trellis& t) {
    std::vector<std::uint32_t> indeg(t.states, 0);
    for (std::size_t s = 1; s < t.states; ++s) {
        for (std::size_t in = 0; in < t.inputs; ++in) {
            std::size_t e = s * t.inputs + in;
            if (t.weight[e] == 0 && t.next[e] != 0) ++indeg[t.next[e]];
        }
    }
    std::vector<std::uint32_t> order;
    order.reserve(t.states);
    for (std::size_t s = 1; s < t.states; ++s) {
        if (indeg[s] == 0) order.push_back(static_cast<std::uint32_t>(s));
    }
    for (std::size_t h = 0; h < order.size(); ++h) {
        std::size_t s = order[h];
        for (std::size_t in = 0; in < t.inputs; ++in) {
            std::size_t e = s * t.inputs + in;
            if (t.weight[e] == 0 && t.next[e] != 0 && --indeg[t.next[e]] == 0) order.push_back(t.next[e]);
        }
    }
    if (order.size() != t.states - 1) throw DomainError("zero-weight cycle in the trellis: encoder is catastrophic");
    return order;
}

}  // namespace

DistanceReport free_distance(const ConvCode& c, std::optional<int> weight_cap) {
    if (is_catastrophic(c)) throw DomainError("free distance requires a non-catastrophic encoder");
    int cap = weight_cap.value_or(default_weight_cap(c));
    Trellis t = build_trellis(c);
    auto order = zero_weight_order(t);

    const std::size_t ring_size = c.n() + 1;
    std::vector<std::vector<std::uint64_t>> ring(ring_size, std::vector<std::uint64_t>(t.states, 0));
    std::vector<std::uint64_t> found(cap + c.n() + 1, 0);

    auto relax = [&](std::size_t s, int w, std::uint64_t count) {
        for (std::size_t in = 0; in < t.inputs; ++in) {
            if (s == 0 && in == 0) continue;
            std::size_t e = s * t.inputs + in;
            int nw = w + t.weight[e];
            if (nw > cap) continue;
            if (t.next[e] == 0) {
                found[nw] += count;
            } else {
                ring[nw % ring_size][t.next[e]] += count;
            }
        }
    };

    relax(0, 0, 1);
    for (int w = 0; w <= cap; ++w) {
        auto& layer = ring[w % ring_size];
        for (std::uint32_t s : order) {
            std::uint64_t count = layer[s];
            if (count == 0) continue;
            layer[s] = 0;
            relax(s, w, count);
        }
        if (found[w] > 0) return {w, found[w], cap};
    }
    throw DistanceCapExceeded("no detour of weight <= " + std::to_string(cap));
}

int bch_bound(const std::set<long long>& zeros, long long n) {
    if (n <= 0) throw DomainError("code length must be positive");
    std::set<long long> z;
    for (long long e : zeros) z.insert(((e % n) + n) % n);
    if (z.empty()) return 1;
    if (static_cast<long long>(z.size()) == n) return static_cast<int>(n + 1);
    long long best = 0;
    for (long long e : z) {
        if (z.count((e - 1 + n) % n)) continue;
        long long run = 0;
        while (z.count((e + run) % n)) ++run;
        best = std::max(best, run);
    }
    return static_cast<int>(best + 1);
}

ConvCode parse_conv_code(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty code file");
    if (lines[0].text.rfind("field", 0) != 0) {
        if (lines.size() != 1) throw ParseError("compact form is a single line of binary coefficient strings");
        Field f = Field::make(2);
        auto words = split_whitespace(lines[0].text);
        std::vector<LaurentPoly> row;
        for (std::size_t j = 0; j < words.size(); ++j) {
            try {
                row.push_back(parse_poly(f, words[j]));
            } catch (const DomainError& e) {
                throw ParseError("line " + std::to_string(lines[0].number) + ", entry " + std::to_string(j + 1) +
                                 ": " + e.what());
            }
        }
        std::size_t n = row.size();
        return ConvCode(PolyMatrix(f, 1, n, std::move(row)));
    }
    Field f = [&] {
        try {
            return parse_field_header(lines[0].text);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lines[0].number) + ": " + e.what());
        }
    }();
    if (lines.size() < 3) throw ParseError("code file needs 'field', 'k' and 'n' header lines");
    long long k = parse_keyed_int(lines[1], "k");
    long long n = parse_keyed_int(lines[2], "n");
    if (k < 1 || n < 1) throw ParseError("k and n must be positive");
    if (static_cast<long long>(lines.size()) - 3 != k) {
        throw ParseError("expected " + std::to_string(k) + " generator rows, found " + std::to_string(lines.size() - 3));
    }
    std::vector<LaurentPoly> entries;
    for (long long r = 0; r < k; ++r) {
        for (auto& e : parse_row(f, lines[3 + r], n)) entries.push_back(std::move(e));
    }
    try {
        return ConvCode(PolyMatrix(f, k, n, std::move(entries)));
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string format_conv_code(const ConvCode& c) {
    return format_field_header(c.field()) + "\nk " + std::to_string(c.k()) + "\nn " + std::to_string(c.n()) + "\n" +
           format_matrix_rows(c.generator());
}

}  // namespace qcc

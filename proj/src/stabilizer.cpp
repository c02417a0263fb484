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

#include "qcc/stabilizer.hpp"

#include <algorithm>

#include "qcc/error.hpp"
#include "qcc/smith.hpp"
#include "qcc/text_format.hpp"

namespace qcc {

StabilizerMatrix::StabilizerMatrix(PolyMatrix x, PolyMatrix z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.field() != z_.field()) throw DomainError("X and Z halves use different fields");
    if (x_.rows() != z_.rows() || x_.cols() != z_.cols()) {
        throw DomainError("X and Z halves have different shapes");
    }
}

StabilizerMatrix StabilizerMatrix::from_combined(const PolyMatrix& xz) {
    if (xz.cols() % 2 != 0) throw DomainError("stabilizer matrix needs an even number of columns");
    std::size_t n = xz.cols() / 2;
    return {xz.block(0, 0, xz.rows(), n), xz.block(0, n, xz.rows(), n)};
}

StabilizerMatrix StabilizerMatrix::trivial(Field f, std::size_t n, std::size_t k) {
    if (k > n) throw DomainError("k exceeds n");
    PolyMatrix z(f, n - k, n);
    z.set_block(0, 0, PolyMatrix::identity(f, n - k));
    return {PolyMatrix(f, n - k, n), std::move(z)};
}

PolyMatrix symplectic_product(const StabilizerMatrix& a, const StabilizerMatrix& b) {
    if (a.field() != b.field() || a.n() != b.n()) throw DomainError("symplectic product shape or field mismatch");
    return a.x() * b.z().adjoint_transpose() - a.z() * b.x().adjoint_transpose();
}

PolyMatrix symplectic_commutator(const StabilizerMatrix& s) { return symplectic_product(s, s); }

bool is_self_orthogonal(const StabilizerMatrix& s) { return symplectic_commutator(s).is_zero(); }

std::size_t stabilizer_rank(const StabilizerMatrix& s) { return rank(s.combined()); }

CodeParams code_params(const StabilizerMatrix& s) {
    if (!s.is_polynomial()) throw DomainError("code parameters need polynomial entries");
    if (stabilizer_rank(s) != s.rows()) {
        throw DomainError("stabilizer matrix is rank deficient; parameters are only defined for full rank");
    }
    CodeParams p;
    p.n = s.n();
    p.k = s.n() - s.rows();
    for (std::size_t i = 0; i < s.rows(); ++i) {
        int nu = std::max({0, s.x().row_degree(i), s.z().row_degree(i)});
        p.nu_i.push_back(nu);
        p.nu += nu;
        p.m = std::max(p.m, nu);
    }
    return p;
}

SemiInfiniteSlice expand_semi_infinite(const StabilizerMatrix& s, std::size_t frames) {
    if (!s.is_polynomial()) throw DomainError("expansion needs polynomial entries");
    PolyMatrix xz = s.combined();
    int m = std::max(0, xz.max_degree());
    if (frames < static_cast<std::size_t>(m) + 1) {
        throw DomainError("need at least " + std::to_string(m + 1) + " frames to hold one band");
    }
    SemiInfiniteSlice out{s.field(), s.n(), s.rows(), frames, m, {}, PolyMatrix(s.field(), 0, 0)};
    for (int i = 0; i <= m; ++i) out.blocks.push_back(xz.coefficient(i));

    std::size_t n = s.n();
    std::size_t width = (frames + m) * n;
    PolyMatrix band(s.field(), frames * s.rows(), 2 * width);
    for (std::size_t t = 0; t < frames; ++t) {
        for (int i = 0; i <= m; ++i) {
            const PolyMatrix& g = out.blocks[i];
            std::size_t c0 = (t + i) * n;
            band.set_block(t * s.rows(), c0, g.block(0, 0, s.rows(), n));
            band.set_block(t * s.rows(), width + c0, g.block(0, n, s.rows(), n));
        }
    }
    out.band = std::move(band);
    return out;
}

StabilizerMatrix reconstruct(const SemiInfiniteSlice& slice) {
    Field f = slice.field;
    std::size_t n = slice.n;
    std::size_t width = (slice.frames + slice.m) * n;
    PolyMatrix x(f, slice.rows, n);
    PolyMatrix z(f, slice.rows, n);
    for (std::size_t r = 0; r < slice.rows; ++r) {
        for (int i = 0; i <= slice.m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t c = i * n + j;
                auto mono = [&](const LaurentPoly& e) {
                    return e.is_zero() ? LaurentPoly(f) : LaurentPoly::monomial(f, e.trailing(), i);
                };
                x(r, j) += mono(slice.band(r, c));
                z(r, j) += mono(slice.band(r, width + c));
            }
        }
    }
    return {std::move(x), std::move(z)};
}

std::string render_pauli(const SemiInfiniteSlice& slice) {
    Field f = slice.field;
    std::size_t width = slice.band.cols() / 2;
    std::string out;
    for (std::size_t r = 0; r < slice.band.rows(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            Elem x = slice.band(r, c).trailing();
            Elem z = slice.band(r, width + c).trailing();
            if (f.q() == 2) {
                static constexpr char kLetters[2][2] = {{' ', 'Z'}, {'X', 'Y'}};
                out.push_back(kLetters[x][z]);
            } else {
                if (c) out.push_back(' ');
                out += "(" + format_element(f, x) + "," + format_element(f, z) + ")";
            }
        }
        out.push_back('\n');
    }
    return out;
}

std::string format_stabilizer(const StabilizerMatrix& s) {
    std::string out = format_field_header(s.field()) + "\nn " + std::to_string(s.n()) + "\n";
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.n(); ++j) {
            if (j) out += ", ";
            out += format_poly(s.x()(i, j));
        }
        out += " | ";
        for (std::size_t j = 0; j < s.n(); ++j) {
            if (j) out += ", ";
            out += format_poly(s.z()(i, j));
        }
        out += '\n';
    }
    return out;
}

StabilizerMatrix parse_stabilizer(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.size() < 2) throw ParseError("stabilizer file needs 'field' and 'n' header lines");
    Field f = [&] {
        try {
            return parse_field_header(lines[0].text);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lines[0].number) + ": " + e.what());
        }
    }();
    long long n = parse_keyed_int(lines[1], "n");
    if (n < 1) throw ParseError("line " + std::to_string(lines[1].number) + ": n must be positive");
    std::size_t rows = lines.size() - 2;
    PolyMatrix x(f, rows, n);
    PolyMatrix z(f, rows, n);
    for (std::size_t r = 0; r < rows; ++r) {
        const TextLine& line = lines[r + 2];
        auto bar = line.text.find('|');
        if (bar == std::string::npos || line.text.find('|', bar + 1) != std::string::npos) {
            throw ParseError("line " + std::to_string(line.number) + ": expected 'X entries | Z entries'");
        }
        auto xs = parse_row(f, {line.number, line.text.substr(0, bar)}, n);
        auto zs = parse_row(f, {line.number, line.text.substr(bar + 1)}, n);
        for (long long j = 0; j < n; ++j) {
            x(r, j) = xs[j];
            z(r, j) = zs[j];
        }
    }
    return {std::move(x), std::move(z)};
}

}  // namespace qcc

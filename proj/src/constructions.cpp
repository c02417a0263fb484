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

#include "qcc/constructions.hpp"

#include "qcc/error.hpp"
#include "qcc/smith.hpp"

namespace qcc {

namespace {

void check_parity(const PolyMatrix& h, const char* name) {
    if (h.rows() == 0) return;
    if (!h.is_polynomial()) throw DomainError(std::string(name) + " has negative exponents");
    ConvCode c(h);
    if (is_catastrophic(c)) throw DomainError(std::string(name) + " is catastrophic (an invariant factor is not 1)");
    if (!is_delay_free(c)) throw DomainError(std::string(name) + " is not delay-free (constant term is rank deficient)");
}

}  // namespace

bool css_dual_contained(const PolyMatrix& h1, const PolyMatrix& h2) {
    if (h1.field() != h2.field() || h1.cols() != h2.cols()) throw DomainError("parity checks differ in field or length");
    return (h2 * h1.adjoint_transpose()).is_zero();
}

StabilizerMatrix css_construct(const PolyMatrix& h1, const PolyMatrix& h2) {
    if (h1.field() != h2.field()) throw DomainError("parity checks use different fields");
    if (h1.cols() != h2.cols()) throw DomainError("parity checks have different lengths");
    if (h1.rows() + h2.rows() == 0) throw DomainError("CSS construction needs at least one parity check row");
    check_parity(h1, "H1");
    check_parity(h2, "H2");
    if (!css_dual_contained(h1, h2)) throw DomainError("dual containment fails: H2(D) H1(1/D)^t is not zero");
    Field f = h1.field();
    std::size_t n = h1.cols();
    PolyMatrix x(f, h2.rows() + h1.rows(), n);
    PolyMatrix z(f, h2.rows() + h1.rows(), n);
    x.set_block(0, 0, h2);
    z.set_block(h2.rows(), 0, h1);
    return {std::move(x), std::move(z)};
}

StabilizerMatrix product_construct(const ConvCode& g1, const StabilizerMatrix& s2) {
    Field f1 = g1.field();
    Field f2 = s2.field();
    if (!f1.is_prime()) throw DomainError("the classical factor must be over a prime field");
    if (f1.p() != f2.p()) throw DomainError("field characteristics differ");
    if (is_catastrophic(g1)) throw DomainError("the classical factor is catastrophic");
    if (!is_delay_free(g1)) throw DomainError("the classical factor is not delay-free");
    return {kron(g1.generator(), s2.x()), kron(g1.generator(), s2.z())};
}

int product_distance_bound(const ConvCode& g1, int d2) {
    int d1 = free_distance(dual_generator(g1)).d_free;
    return std::min(d1, d2);
}

PolyMatrix cyclic_g2(Field f, std::size_t n2, std::size_t d, Elem alpha) {
    if (d < 1) throw DomainError("d must be at least 1");
    if (!f.contains(alpha) || alpha == 0) throw DomainError("alpha must be a nonzero field element");
    if (static_cast<std::size_t>(f.order(alpha)) != n2) {
        throw DomainError("alpha has multiplicative order " + std::to_string(f.order(alpha)) + ", not n2 = " +
                          std::to_string(n2));
    }
    if (2 * (d - 1) >= n2) {
        throw DomainError("need 2(d-1) < n2; at 2(d-1) = n2 the row i = n2/2 has self inner product n2 != 0");
    }
    PolyMatrix g(f, d - 1, n2);
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t l = 0; l < n2; ++l) {
            g(i - 1, l) = LaurentPoly::constant(f, f.pow(alpha, static_cast<long long>(i * l)));
        }
    }
    return g;
}

OverlappedCode overlapped_generator(const PolyMatrix& g1, const PolyMatrix& g2, std::size_t mu) {
    if (g1.field() != g2.field()) throw DomainError("G1 and G2 use different fields");
    if (!g1.is_constant() || !g2.is_constant()) throw DomainError("G1 and G2 must be constant matrices");
    std::size_t n1 = g1.cols();
    std::size_t n2 = g2.cols();
    if (mu < 1 || mu >= n1) throw DomainError("overlap mu must satisfy 1 <= mu < n1");
    if (!(g2 * g2.transpose()).is_zero()) throw DomainError("G2 G2^t must vanish");
    if (g1.rows() == 0 || g2.rows() == 0) throw DomainError("G1 and G2 need at least one row");
    Field f = g1.field();
    std::size_t span = n1 - mu;
    std::size_t w = span * n2;
    PolyMatrix g(f, g1.rows() * g2.rows(), w);
    for (std::size_t a = 0; a < g1.rows(); ++a) {
        for (std::size_t b = 0; b < g2.rows(); ++b) {
            std::size_t r = a * g2.rows() + b;
            for (std::size_t j = 0; j < n1; ++j) {
                Elem c = g1(a, j).trailing();
                if (c == 0) continue;
                int delay = static_cast<int>(j / span);
                std::size_t pos = (j % span) * n2;
                for (std::size_t l = 0; l < n2; ++l) {
                    Elem e = f.mul(c, g2(b, l).trailing());
                    if (e != 0) g(r, pos + l) += LaurentPoly::monomial(f, e, delay);
                }
            }
        }
    }
    bool catastrophic = is_catastrophic(ConvCode(g));
    return {StabilizerMatrix(g, PolyMatrix(f, g.rows(), w)), catastrophic};
}

}  // namespace qcc

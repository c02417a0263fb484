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

#include <gtest/gtest.h>

#include "qcc/constructions.hpp"
#include "qcc/error.hpp"
#include "qcc/smith.hpp"
#include "qcc/text_format.hpp"
#include "support/fixtures.hpp"
#include "support/random_algebra.hpp"

using namespace qcc;

namespace {

PolyMatrix mat(const char* text) { return parse_matrix(text); }

// Sum of x_l y_l over F_q, computed elementwise.
Elem dot(Field f, const PolyMatrix& a, std::size_t i, std::size_t j) {
    Elem s = 0;
    for (std::size_t l = 0; l < a.cols(); ++l) s = f.add(s, f.mul(a(i, l).trailing(), a(j, l).trailing()));
    return s;
}

}  // namespace

TEST(constructions, css_two_qubit_example) {
    auto h = mat("field 2\n1, 1\n");
    auto s = css_construct(h, h);
    EXPECT_EQ(s.rows(), 2u);
    EXPECT_EQ(s.n(), 2u);
    EXPECT_TRUE(is_self_orthogonal(s));
    auto p = code_params(s);
    EXPECT_EQ(p.k, 0u);
}

TEST(constructions, css_rate_one_half_example) {
    auto g = mat("field 2\n11, 111, 1001, 1011\n");
    auto s = css_construct(g, g);
    EXPECT_EQ(s.rows(), 2u);
    EXPECT_EQ(s.n(), 4u);
    EXPECT_EQ(s.x().row(0), g);
    EXPECT_TRUE(s.x().row(1).is_zero());
    EXPECT_EQ(s.z().row(1), g);
    EXPECT_TRUE(is_self_orthogonal(s));
    auto p = code_params(s);
    EXPECT_EQ(p.k, 2u);
    EXPECT_DOUBLE_EQ(p.rate(), 0.5);
}

TEST(constructions, css_one_sided) {
    auto h = fixtures::parity_h();
    auto s = css_construct(PolyMatrix(h.field(), 0, 3), h);
    EXPECT_EQ(s.rows(), 1u);
    EXPECT_TRUE(s.z().is_zero());
    EXPECT_EQ(code_params(s).k, 2u);
}

TEST(constructions, css_rejections) {
    auto e = mat("field 2\n1, 0\n");
    EXPECT_THROW(css_construct(e, e), DomainError);
    auto cat = mat("field 2\n11, 11\n");
    EXPECT_THROW(css_construct(cat, cat), DomainError);
    auto delayed = mat("field 2\n01, 001\n");
    EXPECT_THROW(css_construct(PolyMatrix(delayed.field(), 0, 2), delayed), DomainError);
    EXPECT_THROW(css_construct(mat("field 2\n1, 1\n"), mat("field 3\n1, 2\n")), DomainError);
    EXPECT_THROW(css_construct(mat("field 2\n1, 1\n"), mat("field 2\n1, 1, 0, 0\n")), DomainError);
}

TEST(constructions, product_shape_and_blocks) {
    ConvCode g1(fixtures::parity_h());
    auto s2 = fixtures::five_qubit();
    auto s = product_construct(g1, s2);
    EXPECT_EQ(s.rows(), 4u);
    EXPECT_EQ(s.n(), 15u);
    EXPECT_EQ(s.combined().cols(), 30u);
    for (std::size_t i2 = 0; i2 < 4; ++i2) {
        for (std::size_t j1 = 0; j1 < 3; ++j1) {
            for (std::size_t j2 = 0; j2 < 5; ++j2) {
                EXPECT_EQ(s.x()(i2, j1 * 5 + j2), g1.generator()(0, j1) * s2.x()(i2, j2));
                EXPECT_EQ(s.z()(i2, j1 * 5 + j2), g1.generator()(0, j1) * s2.z()(i2, j2));
            }
        }
    }
    EXPECT_TRUE(is_self_orthogonal(s));
    EXPECT_EQ(code_params(s).k, 11u);
}

TEST(constructions, product_over_extension_field) {
    // F_2 classical factor scaling an F_4 stabilizer.
    auto s2 = parse_stabilizer("field 2^2\nn 2\n1, 1 | [0,1], [0,1]\n");
    ASSERT_TRUE(is_self_orthogonal(s2));
    ConvCode g1(fixtures::parity_h());
    auto s = product_construct(g1, s2);
    EXPECT_EQ(s.field(), Field::make(2, 2));
    EXPECT_TRUE(is_self_orthogonal(s));
}

TEST(constructions, product_rejections) {
    auto s2 = fixtures::five_qubit();
    EXPECT_THROW(product_construct(ConvCode(mat("field 3\n1, 2\n")), s2), DomainError);
    EXPECT_THROW(product_construct(ConvCode(mat("field 2^2\n1, 1\n")), s2), DomainError);
    EXPECT_THROW(product_construct(ConvCode(mat("field 2\n11, 11\n")), s2), DomainError);
}

TEST(constructions, product_distance_bound_is_a_minimum) {
    ConvCode g1(fixtures::parity_h());
    int d1 = free_distance(dual_generator(g1)).d_free;
    EXPECT_EQ(product_distance_bound(g1, 3), std::min(d1, 3));
    EXPECT_EQ(product_distance_bound(g1, 100), d1);
}

TEST(constructions, cyclic_g2_example) {
    Field f = Field::make(5);
    auto g = cyclic_g2(f, 4, 2, 2);
    EXPECT_EQ(g, PolyMatrix::constant(f, 1, 4, {1, 2, 4, 3}));
    EXPECT_TRUE((g * g.transpose()).is_zero());
    auto empty = cyclic_g2(f, 4, 1, 2);
    EXPECT_EQ(empty.rows(), 0u);
    EXPECT_EQ(empty.cols(), 4u);
    EXPECT_THROW(cyclic_g2(f, 4, 3, 2), DomainError);
    EXPECT_THROW(cyclic_g2(f, 4, 2, 4), DomainError);
    EXPECT_THROW(cyclic_g2(f, 4, 2, 0), DomainError);
}

TEST(constructions, cyclic_g2_rows_orthogonal_for_all_small_fields) {
    std::size_t checked = 0;
    for (auto [p, ell] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}}) {
        Field f = Field::make(p, ell);
        int q = f.q();
        for (Elem alpha = 1; alpha < q; ++alpha) {
            // Independent order computation by repeated multiplication.
            std::size_t n2 = 1;
            for (Elem x = alpha; x != 1; x = f.mul(x, alpha)) ++n2;
            for (std::size_t d = 1; 2 * (d - 1) < n2; ++d) {
                auto g = cyclic_g2(f, n2, d, alpha);
                ASSERT_EQ(g.rows(), d - 1);
                for (std::size_t i = 0; i < g.rows(); ++i) {
                    for (std::size_t j = 0; j < g.rows(); ++j) ASSERT_EQ(dot(f, g, i, j), 0) << "q=" << q;
                }
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 50u);
}

TEST(constructions, overlapped_identity_example) {
    Field f = Field::make(5);
    auto g1 = PolyMatrix::identity(f, 2);
    auto g2 = cyclic_g2(f, 4, 2, 2);
    EXPECT_THROW(overlapped_generator(g1, g2, 0), DomainError);
    EXPECT_THROW(overlapped_generator(g1, g2, 2), DomainError);
    auto oc = overlapped_generator(g1, g2, 1);
    const auto& g = oc.stabilizer.x();
    ASSERT_EQ(g.rows(), 2u);
    ASSERT_EQ(g.cols(), 4u);
    EXPECT_TRUE(oc.stabilizer.z().is_zero());
    for (std::size_t l = 0; l < 4; ++l) {
        EXPECT_EQ(g(0, l), g2(0, l));
        EXPECT_EQ(g(1, l), g2(0, l).shifted(1));
    }
    EXPECT_TRUE(oc.catastrophic);
}

TEST(constructions, overlapped_wraps_blocks_with_delays) {
    Field f = Field::make(5);
    auto g1 = PolyMatrix::constant(f, 1, 3, {1, 1, 1});
    auto g2 = cyclic_g2(f, 4, 2, 2);
    auto oc = overlapped_generator(g1, g2, 2);
    auto all = parse_poly(f, "111");
    ASSERT_EQ(oc.stabilizer.x().cols(), 4u);
    for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(oc.stabilizer.x()(0, l), all * g2(0, l));
    EXPECT_TRUE(oc.catastrophic);
}

TEST(constructions, overlapped_rows_unfold_to_block_code_rows) {
    gen::Rng rng(7);
    Field f = Field::make(7);
    auto g2 = cyclic_g2(f, 6, 3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n1 = static_cast<std::size_t>(rng.uniform(2, 5));
        std::size_t k1 = static_cast<std::size_t>(rng.uniform(1, 2));
        auto g1 = gen::random_matrix(f, rng, k1, n1, 0, 0.3);
        bool zero_row = false;
        for (std::size_t i = 0; i < k1; ++i) zero_row = zero_row || g1.row_is_zero(i);
        if (zero_row) continue;
        std::size_t mu = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n1) - 1));
        auto oc = overlapped_generator(g1, g2, mu);
        const auto& g = oc.stabilizer.x();
        std::size_t w = g.cols();
        ASSERT_EQ(w, (n1 - mu) * 6);
        auto block = kron(g1, g2);
        for (std::size_t r = 0; r < g.rows(); ++r) {
            // Position t*w + c of the unfolded row holds the D^t coefficient of column c.
            std::vector<Elem> seq(n1 * 6 + w, 0);
            for (std::size_t c = 0; c < w; ++c) {
                const auto& e = g(r, c);
                for (int t = e.low(); t <= e.degree(); ++t) seq[static_cast<std::size_t>(t) * w + c] = e.coeff(t);
            }
            for (std::size_t pos = 0; pos < seq.size(); ++pos) {
                Elem want = pos < block.cols() ? block(r, pos).trailing() : 0;
                ASSERT_EQ(seq[pos], want) << "row " << r << " position " << pos;
            }
        }
        EXPECT_TRUE((g * g.adjoint_transpose()).is_zero());
    }
}

TEST(constructions, product_identity_and_hand_expansion) {
    auto s2 = fixtures::five_qubit();
    EXPECT_EQ(product_construct(ConvCode(mat("field 2\n1\n")), s2), s2);
    auto x = parse_stabilizer("field 2\nn 1\n1 | 0\n");
    auto s = product_construct(ConvCode(mat("field 2\n1, 1\n")), x);
    EXPECT_EQ(s, parse_stabilizer("field 2\nn 2\n1, 1 | 0, 0\n"));
}

TEST(constructions, overlapped_css_stack_commutes) {
    Field f = Field::make(5);
    auto oc = overlapped_generator(PolyMatrix::identity(f, 2), cyclic_g2(f, 4, 2, 2), 1);
    const auto& g = oc.stabilizer.x();
    EXPECT_TRUE(is_self_orthogonal(oc.stabilizer));
    StabilizerMatrix stacked(PolyMatrix::vstack(g, PolyMatrix(f, g.rows(), g.cols())),
                             PolyMatrix::vstack(PolyMatrix(f, g.rows(), g.cols()), g));
    EXPECT_TRUE(symplectic_commutator(stacked).is_zero());
}

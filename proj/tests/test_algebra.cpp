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

#include "qcc/error.hpp"
#include "qcc/poly_matrix.hpp"
#include "qcc/smith.hpp"
#include "qcc/text_format.hpp"
#include "support/random_algebra.hpp"

using namespace qcc;
using qcc::gen::Rng;

namespace {

Field F2() { return Field::make(2); }

LaurentPoly P(Field f, const char* s) { return parse_poly(f, s); }

PolyMatrix H_eq() {
    Field f = F2();
    return PolyMatrix(f, 1, 3, {P(f, "11001"), P(f, "10111"), P(f, "10101")});
}

}  // namespace

TEST(laurent, canonical_form_trims_zeros) {
    Field f = F2();
    LaurentPoly p(f, -2, {0, 0, 1, 1, 0});
    EXPECT_EQ(p.low(), 0);
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(LaurentPoly(f, 3, {0, 0}).is_zero());
    EXPECT_EQ(LaurentPoly(f).degree(), -1);
}

TEST(laurent, characteristic_two_products) {
    Field f = F2();
    EXPECT_EQ(P(f, "11") * P(f, "11"), P(f, "101"));
    auto dinv = LaurentPoly::monomial(f, 1, -1);
    EXPECT_TRUE((dinv + dinv).is_zero());
}

TEST(laurent, adjoint_examples) {
    Field f = F2();
    EXPECT_EQ(P(f, "11").adjoint(), P(f, "D^-1 * 11"));
    auto sym = LaurentPoly::monomial(f, 1, 3) + LaurentPoly::monomial(f, 1, -3);
    EXPECT_EQ(sym.adjoint(), sym);
    EXPECT_EQ(P(f, "1101").adjoint(), P(f, "D^-3 * 1011"));
}

TEST(laurent, gcd_of_coprime_entries_is_one) {
    Field f = F2();
    EXPECT_TRUE(gcd(P(f, "11001"), P(f, "10101")).is_one());
}

TEST(laurent, gcd_with_zero_is_monic) {
    Field f = Field::make(5);
    auto g = gcd(P(f, "23"), LaurentPoly(f));
    EXPECT_EQ(g, P(f, "41"));  // 3D + 2 scaled by 3^-1 = 2 -> D + 4
    EXPECT_TRUE(gcd(LaurentPoly(f), LaurentPoly(f)).is_zero());
}

TEST(laurent, divmod_identity_and_errors) {
    Field f = Field::make(3);
    auto a = P(f, "2102201");
    auto b = P(f, "112");
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(divmod(a, LaurentPoly(f)), DomainError);
    EXPECT_THROW(divmod(P(f, "D^-1 * 1"), b), DomainError);
}

TEST(laurent, field_mismatch_throws) {
    EXPECT_THROW(P(F2(), "1") + P(Field::make(3), "1"), DomainError);
}

TEST(laurent, randomized_adjoint_and_gcd_properties) {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        Field f = gen::random_small_field(rng);
        auto a = gen::random_poly(f, rng, 6, 0.1, rng.uniform(-3, 3));
        auto b = gen::random_poly(f, rng, 6, 0.1, rng.uniform(-3, 3));
        EXPECT_EQ(a.adjoint().adjoint(), a);
        EXPECT_EQ((a * b).adjoint(), a.adjoint() * b.adjoint());
        auto x = gen::random_poly(f, rng, 6, 0.1);
        auto y = gen::random_poly(f, rng, 6, 0.1);
        auto z = gen::random_poly(f, rng, 4, 0.1);
        auto g = gcd(x, y);
        EXPECT_EQ(g, gcd(y, x));
        EXPECT_EQ(gcd(gcd(x, y), z), gcd(x, gcd(y, z)));
        if (!g.is_zero()) {
            EXPECT_EQ(g.leading(), 1);
            EXPECT_TRUE(divides(g, x));
            EXPECT_TRUE(divides(g, y));
        }
        // gcd of multiples picks up the common factor.
        if (!z.is_zero() && !g.is_zero()) EXPECT_EQ(gcd(x * z, y * z), (g * z).monic());
    }
}

TEST(poly_matrix, adjoint_transpose_examples) {
    Field f = F2();
    auto id = PolyMatrix::identity(f, 3);
    EXPECT_EQ(id.adjoint_transpose(), id);
    auto z = PolyMatrix::zero(f, 2, 3);
    EXPECT_EQ(z.adjoint_transpose(), PolyMatrix::zero(f, 3, 2));
    auto col = H_eq().adjoint_transpose();
    ASSERT_EQ(col.rows(), 3u);
    ASSERT_EQ(col.cols(), 1u);
    EXPECT_EQ(col(0, 0), P(f, "D^-4 * 10011"));
    EXPECT_EQ(col(1, 0), P(f, "D^-4 * 11101"));
    EXPECT_EQ(col(2, 0), P(f, "D^-4 * 10101"));
}

TEST(poly_matrix, determinant_and_unimodularity) {
    Field f = F2();
    PolyMatrix u(f, 2, 2, {P(f, "1"), P(f, "11"), P(f, "0"), P(f, "1")});
    EXPECT_TRUE(is_unimodular(u));
    PolyMatrix d(f, 2, 2, {P(f, "01"), P(f, "0"), P(f, "0"), P(f, "1")});
    EXPECT_FALSE(is_unimodular(d));
    EXPECT_TRUE(is_laurent_unimodular(d));
    EXPECT_EQ(determinant(d), P(f, "01"));
}

TEST(poly_matrix, kron_lifts_prime_field_entries) {
    Field f4 = Field::make(2, 2);
    Field f2 = F2();
    PolyMatrix a(f2, 1, 2, {P(f2, "1"), P(f2, "01")});
    Elem w = f4.from_coords({0, 1});
    PolyMatrix b(f4, 1, 1, {LaurentPoly::constant(f4, w)});
    auto k = kron(a, b);
    ASSERT_EQ(k.cols(), 2u);
    EXPECT_EQ(k(0, 1), LaurentPoly::monomial(f4, w, 1));
}

TEST(smith, identity_is_fixed) {
    Field f = Field::make(3);
    auto id = PolyMatrix::identity(f, 4);
    auto snf = smith_normal_form(id);
    EXPECT_EQ(snf.diagonal, id);
    EXPECT_EQ(snf.left, id);
    EXPECT_EQ(snf.right, id);
    EXPECT_EQ(snf.rank, 4u);
}

TEST(smith, coprime_row_reduces_to_unit_vector) {
    Field f = F2();
    auto h = H_eq();
    auto snf = smith_normal_form(h);
    EXPECT_EQ(snf.diagonal, PolyMatrix(f, 1, 3, {P(f, "1"), P(f, "0"), P(f, "0")}));
    EXPECT_EQ(snf.left * h * snf.right, snf.diagonal);
}

TEST(smith, divisibility_reorders_diagonal) {
    Field f = F2();
    PolyMatrix m(f, 2, 2, {P(f, "001"), P(f, "0"), P(f, "0"), P(f, "01")});
    auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.diagonal, PolyMatrix(f, 2, 2, {P(f, "01"), P(f, "0"), P(f, "0"), P(f, "001")}));
    EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
}

TEST(smith, non_coprime_diagonal_gets_gcd_and_lcm) {
    Field f = F2();
    // diag(1+D, D(1+D)^0 ... ) : diag(D, 1+D) has invariant factors 1, D(1+D).
    PolyMatrix m(f, 2, 2, {P(f, "01"), P(f, "0"), P(f, "0"), P(f, "11")});
    auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.diagonal(0, 0), P(f, "1"));
    EXPECT_EQ(snf.diagonal(1, 1), P(f, "011"));
}

TEST(smith, rejects_negative_exponents) {
    Field f = F2();
    PolyMatrix m(f, 1, 1, {P(f, "D^-1 * 1")});
    EXPECT_THROW(smith_normal_form(m), DomainError);
}

TEST(smith, randomized_decompositions) {
    Rng rng(2024);
    for (int it = 0; it < 500; ++it) {
        Field f = gen::random_small_field(rng);
        std::size_t r = rng.uniform(1, 6);
        std::size_t c = rng.uniform(1, 6);
        auto m = gen::random_matrix(f, rng, r, c, rng.uniform(0, 6), rng.coin() ? 0.2 : 0.6);
        auto snf = smith_normal_form(m);
        ASSERT_EQ(snf.left * m * snf.right, snf.diagonal);
        ASSERT_TRUE(is_unimodular(snf.left));
        ASSERT_TRUE(is_unimodular(snf.right));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                if (i != j) ASSERT_TRUE(snf.diagonal(i, j).is_zero());
            }
        }
        for (std::size_t i = 0; i < std::min(r, c); ++i) {
            const auto& d = snf.diagonal(i, i);
            ASSERT_EQ(i < snf.rank, !d.is_zero());
            if (!d.is_zero()) ASSERT_EQ(d.leading(), 1);
            if (i + 1 < std::min(r, c)) ASSERT_TRUE(divides(d, snf.diagonal(i + 1, i + 1)));
        }
        ASSERT_EQ(replay_row_ops(f, r, snf.trace), snf.left);
        ASSERT_EQ(replay_col_ops(f, c, snf.trace), snf.right);
    }
}

TEST(kernel, identity_has_trivial_kernel) {
    auto k = kernel_basis(PolyMatrix::identity(F2(), 3));
    EXPECT_EQ(k.rows(), 0u);
    EXPECT_EQ(k.cols(), 3u);
}

TEST(kernel, parity_row) {
    Field f = F2();
    auto k = kernel_basis(PolyMatrix(f, 1, 2, {P(f, "1"), P(f, "1")}));
    EXPECT_EQ(k, PolyMatrix(f, 1, 2, {P(f, "1"), P(f, "1")}));
}

TEST(kernel, reversed_parity_row_has_two_dimensional_kernel) {
    Field f = F2();
    PolyMatrix m = H_eq().adjoint().scaled(LaurentPoly::monomial(f, 1, 4));
    ASSERT_TRUE(m.is_polynomial());
    auto k = kernel_basis(m);
    ASSERT_EQ(k.rows(), 2u);
    EXPECT_TRUE((k * m.transpose()).is_zero());
    EXPECT_EQ(rank(k), 2u);
}

TEST(kernel, randomized_kernels_annihilate) {
    Rng rng(7);
    for (int it = 0; it < 150; ++it) {
        Field f = gen::random_small_field(rng);
        std::size_t r = rng.uniform(1, 4);
        std::size_t c = rng.uniform(1, 5);
        auto m = gen::random_matrix(f, rng, r, c, 3);
        auto k = kernel_basis(m);
        EXPECT_TRUE((k * m.transpose()).is_zero());
        EXPECT_EQ(k.rows() + rank(m), c);
    }
}

TEST(row_space, polynomial_versus_laurent) {
    Field f = F2();
    PolyMatrix a(f, 1, 2, {P(f, "01"), P(f, "01")});
    PolyMatrix b(f, 1, 2, {P(f, "1"), P(f, "1")});
    EXPECT_TRUE(in_row_space(b, a));
    EXPECT_FALSE(in_row_space(a, b));
    EXPECT_TRUE(row_equivalent(a, b, Ring::Laurent));
    EXPECT_FALSE(row_equivalent(a, b, Ring::Polynomial));
    PolyMatrix c(f, 1, 2, {P(f, "11"), P(f, "11")});
    EXPECT_FALSE(row_equivalent(b, c, Ring::Laurent));
    EXPECT_TRUE(same_rational_row_space(b, c));
}

TEST(text_format, polynomial_round_trip) {
    Rng rng(5);
    for (Field f : {F2(), Field::make(13), Field::make(2, 2), Field::make(3, 2)}) {
        for (int it = 0; it < 50; ++it) {
            auto p = gen::random_poly(f, rng, 5, 0.1, rng.uniform(-3, 3));
            EXPECT_EQ(parse_poly(f, format_poly(p)), p) << format_poly(p);
        }
    }
    EXPECT_EQ(format_poly(P(F2(), "1101")), "1101");
    EXPECT_EQ(format_poly(LaurentPoly(F2())), "0");
    EXPECT_EQ(parse_poly(Field::make(13), "c1"), LaurentPoly(Field::make(13), 0, {12, 1}));
}

TEST(text_format, matrix_round_trip) {
    Rng rng(9);
    Field f = Field::make(2, 2);
    auto m = gen::random_matrix(f, rng, 2, 3, 3);
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    auto e = PolyMatrix::zero(f, 0, 3);
    EXPECT_EQ(parse_matrix(format_matrix(e)), e);
}

TEST(text_format, errors_name_line_and_entry) {
    try {
        parse_matrix("field 2^1\n1, 11\n# comment\n1, 1x\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 4, entry 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_matrix("field 4^1\n1\n"), ParseError);
    EXPECT_THROW(parse_matrix("field 2\n1, 1\n1\n"), ParseError);
    EXPECT_THROW(parse_poly(F2(), "12"), ParseError);
}

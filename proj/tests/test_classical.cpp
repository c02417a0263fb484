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

#include "qcc/classical.hpp"
#include "qcc/smith.hpp"
#include "qcc/text_format.hpp"
#include "support/distance_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_algebra.hpp"
#include "support/random_codes.hpp"

using namespace qcc;
using qcc::gen::Rng;

namespace {

ConvCode code(const char* text) { return parse_conv_code(text); }

ConvCode nu3_code() { return code("1100 1110 1001 1101"); }

}  // namespace

TEST(classical, self_orthogonality_examples) {
    EXPECT_TRUE(is_self_orthogonal_classical(nu3_code()));
    EXPECT_FALSE(is_self_orthogonal_classical(code("1 0 0 0")));
    EXPECT_TRUE(is_self_orthogonal_classical(code("1 1")));
}

TEST(classical, catastrophic_examples) {
    EXPECT_TRUE(is_catastrophic(code("11 11")));
    EXPECT_FALSE(is_catastrophic(ConvCode(fixtures::parity_h())));
    EXPECT_FALSE(is_catastrophic(code("field 3\nk 2\nn 3\n1, 0, 0\n0, 1, 0\n")));
    EXPECT_TRUE(is_catastrophic(code("field 2\nk 2\nn 2\n1, 1\n1, 1\n")));
}

TEST(classical, dual_of_repetition_is_itself) {
    auto d = dual_generator(code("1 1"));
    EXPECT_EQ(d.generator(), code("1 1").generator());
}

TEST(classical, dual_of_rate_quarter_code) {
    auto c = nu3_code();
    auto d = dual_generator(c);
    EXPECT_EQ(d.k(), 3u);
    EXPECT_EQ(d.n(), 4u);
    EXPECT_TRUE((d.generator() * c.generator().adjoint_transpose()).is_zero());
    EXPECT_FALSE(is_catastrophic(d));
    EXPECT_EQ(d.overall_constraint_length(), 3);
    auto rep = free_distance(d);
    EXPECT_EQ(rep.d_free, 3);
    EXPECT_EQ(rep.count, 2u);
}

TEST(classical, rate_two_thirds_code) {
    ConvCode g(fixtures::generator_g());
    EXPECT_EQ(g.row_degrees(), (std::vector<int>{2, 2}));
    EXPECT_TRUE((g.generator() * fixtures::parity_h().adjoint_transpose()).is_zero());
    // Both rows have degree 2, so the overall constraint length is 4. The
    // trellis search and the brute-force enumeration agree on 5.
    auto rep = free_distance(g);
    EXPECT_EQ(rep.d_free, 5);
    EXPECT_EQ(rep.count, 2u);
    auto brute = oracle::brute_force_distance(g, 8);
    EXPECT_EQ(brute.d, 5);
    EXPECT_EQ(brute.count, 2u);
    auto d = dual_generator(g);
    EXPECT_TRUE(row_equivalent(d.generator(), fixtures::parity_h()));
}

TEST(classical, simple_free_distances) {
    EXPECT_EQ(free_distance(code("1 1")).d_free, 2);
    EXPECT_EQ(free_distance(code("1 1")).count, 1u);
    // Rate-1/2 memory-2 code (7, 5) in octal: d_free = 5, one minimal path.
    auto r = free_distance(code("111 101"));
    EXPECT_EQ(r.d_free, 5);
    EXPECT_EQ(r.count, 1u);
    EXPECT_THROW(free_distance(code("111 101"), 4), DistanceCapExceeded);
    EXPECT_THROW(free_distance(code("11 11")), DomainError);
}

TEST(classical, free_distance_matches_brute_force) {
    Rng rng(314);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        Field f = it % 4 == 3 ? Field::make(3) : Field::make(2);
        std::size_t n = rng.uniform(2, 4);
        std::size_t k = f.q() == 2 ? rng.uniform(1, static_cast<int>(n) - 1) : 1;
        auto c = gen::random_code(rng, f, k, n, 3);
        auto rep = free_distance(c);
        int frames = oracle::affordable_frames(c, 1u << 12);
        auto brute = oracle::brute_force_distance(c, frames);
        ASSERT_EQ(rep.d_free, brute.d) << format_conv_code(c) << "frames " << frames;
        ASSERT_EQ(rep.count, brute.count) << format_conv_code(c) << "frames " << frames;
        ++checked;
    }
    EXPECT_EQ(checked, 200);
}

TEST(classical, dual_properties) {
    Rng rng(77);
    for (int it = 0; it < 60; ++it) {
        Field f = gen::random_small_field(rng);
        std::size_t n = rng.uniform(2, 5);
        std::size_t k = rng.uniform(1, static_cast<int>(n) - 1);
        auto c = gen::random_code(rng, f, k, n, 4);
        auto d = dual_generator(c);
        EXPECT_TRUE((d.generator() * c.generator().adjoint_transpose()).is_zero());
        EXPECT_EQ(rank(c.generator()) + rank(d.generator()), n);
        EXPECT_FALSE(is_catastrophic(d));
        EXPECT_EQ(minimal_basic_form(d.generator()), d.generator());
    }
}

TEST(classical, self_orthogonal_code_lies_in_its_dual) {
    for (const char* g : {"1100 1110 1001 1101", "11001 11101 10011 10111", "1 1", "110010 111010 100001 110111"}) {
        auto c = code(g);
        ASSERT_TRUE(is_self_orthogonal_classical(c));
        auto d = dual_generator(c);
        EXPECT_EQ(rank(PolyMatrix::vstack(d.generator(), c.generator())), rank(d.generator()));
        EXPECT_TRUE(in_row_space(d.generator(), c.generator()));
    }
}

TEST(classical, minimal_basic_form_lowers_degree) {
    Field f = Field::make(2);
    // Rows (1, D) and (D, 1 + D + D^2): determinant 1 + D, leading rows dependent.
    PolyMatrix g(f, 2, 2, {parse_poly(f, "1"), parse_poly(f, "01"), parse_poly(f, "01"), parse_poly(f, "111")});
    auto m = minimal_basic_form(g);
    EXPECT_TRUE(row_equivalent(m, g));
    EXPECT_EQ(ConvCode(m).overall_constraint_length(), 1);
}

TEST(classical, bch_bound_examples) {
    EXPECT_EQ(bch_bound({1, 2}, 7), 3);
    EXPECT_EQ(bch_bound({}, 7), 1);
    for (int d = 1; d <= 6; ++d) {
        std::set<long long> zeros;
        for (int i = 1; i < d; ++i) zeros.insert(i);
        EXPECT_EQ(bch_bound(zeros, 13), d);
    }
    EXPECT_EQ(bch_bound({6, 0, 1}, 7), 4);  // wraps around
    EXPECT_EQ(bch_bound({8, 9}, 7), 3);     // reduced mod n
    EXPECT_EQ(bch_bound({0, 1, 2}, 3), 4);
}

TEST(classical, file_formats) {
    auto c = nu3_code();
    EXPECT_EQ(c.field().q(), 2);
    EXPECT_EQ(c.k(), 1u);
    EXPECT_EQ(c.n(), 4u);
    EXPECT_EQ(parse_conv_code(format_conv_code(c)).generator(), c.generator());
    auto g = ConvCode(fixtures::generator_g());
    EXPECT_EQ(parse_conv_code(format_conv_code(g)).generator(), g.generator());
    EXPECT_THROW(parse_conv_code("field 2\nk 2\nn 2\n1, 1\n"), ParseError);
    EXPECT_THROW(parse_conv_code("1100 11x0"), ParseError);
    EXPECT_THROW(parse_conv_code("field 2\nk 1\nn 2\nD^-1 * 1, 1\n"), ParseError);
}

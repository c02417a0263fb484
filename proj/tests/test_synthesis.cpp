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
#include "qcc/synthesis.hpp"
#include "qcc/text_format.hpp"
#include "support/fixtures.hpp"
#include "support/random_algebra.hpp"
#include "support/random_codes.hpp"

using namespace qcc;

namespace {

PolyMatrix mat(const char* text) { return parse_matrix(text); }

// Every check a synthesis result has to pass, computed from scratch.
void expect_valid(const SynthesisResult& r) {
    const auto& s = r.input;
    auto trivial = StabilizerMatrix::trivial(s.field(), s.n(), s.n() - s.rows());
    EXPECT_EQ(r.final_form, trivial);
    auto after = apply_circuit(s, r.inverse_circuit);
    EXPECT_EQ(r.row_transform * after.x(), trivial.x());
    EXPECT_EQ(r.row_transform * after.z(), trivial.z());
    EXPECT_TRUE(is_laurent_unimodular(r.row_transform));
    EXPECT_TRUE(verify_inverse_encoder(s, r.inverse_circuit));
    auto encoded = apply_circuit(trivial, r.encoder_circuit);
    EXPECT_TRUE(row_equivalent(encoded.combined(), s.combined(), Ring::Laurent));
    EXPECT_EQ(r.inverse_stats.gate_count, r.inverse_circuit.size());
    EXPECT_LE(r.inverse_stats.gate_count, r.gate_bound());
    EXPECT_LE(r.inverse_stats.depth, r.inverse_stats.gate_count);
    int m = std::max(s.x().max_degree(), s.z().max_degree());
    EXPECT_LE(r.inverse_stats.depth, synthesis_depth_bound(s.n(), m));
    EXPECT_LE(r.inverse_stats.gate_count, synthesis_depth_bound(s.n(), m));
}

// Random constant self-orthogonal full-rank stabilizer: a random l = 0
// circuit applied to (0 | I 0).
StabilizerMatrix random_block(gen::Rng& rng, Field f, std::size_t n, std::size_t k) {
    auto s = StabilizerMatrix::trivial(f, n, k);
    for (int g = 0; g < 40; ++g) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
        switch (rng.uniform(0, 3)) {
            case 0:
                s = apply_gate(s, CliffordGate::dft(i));
                break;
            case 1:
                s = apply_gate(s, CliffordGate::mult(i, gen::random_nonzero(f, rng)));
                break;
            case 2:
                s = apply_gate(s, CliffordGate::phase(i, gen::random_elem(f, rng)));
                break;
            default:
                if (i != j) s = apply_gate(s, CliffordGate::add(i, j, 0));
        }
    }
    return s;
}

}  // namespace

TEST(synthesis, css_rate_one_half_example) {
    auto g = mat("field 2\n11, 111, 1001, 1011\n");
    auto r = synthesize_css_encoder(g, g);
    expect_valid(r);
    EXPECT_EQ(r.final_form, StabilizerMatrix::trivial(g.field(), 4, 2));
}

TEST(synthesis, x_only_rate_two_thirds_example) {
    auto h = fixtures::parity_h();
    auto r = synthesize_css_encoder(PolyMatrix(h.field(), 0, 3), h);
    expect_valid(r);
    ASSERT_FALSE(r.intermediates.empty());
    // After the Smith stage the stabilizer reads (1 0 0 | 0 0 0).
    const auto& first = r.intermediates.front().form;
    EXPECT_EQ(first.x(), PolyMatrix::constant(h.field(), 1, 3, {1, 0, 0}));
    EXPECT_TRUE(first.z().is_zero());
}

TEST(synthesis, already_trivial_gives_empty_circuit) {
    Field f = Field::make(2);
    auto one = parse_stabilizer("field 2\nn 1\n0 | 1\n");
    auto rb = synthesize_block_inverse_encoder(one);
    EXPECT_TRUE(rb.inverse_circuit.empty());
    auto rc = synthesize_css_encoder(mat("field 2\n1, 0, 0\n0, 1, 0\n"), PolyMatrix(f, 0, 3));
    EXPECT_TRUE(rc.inverse_circuit.empty());
    expect_valid(rc);
}

TEST(synthesis, single_qudit_x_needs_one_dft) {
    auto s = parse_stabilizer("field 2\nn 1\n1 | 0\n");
    auto r = synthesize_block_inverse_encoder(s);
    ASSERT_EQ(r.inverse_circuit.size(), 1u);
    EXPECT_EQ(r.inverse_circuit.gates()[0], CliffordGate::dft(0));
    expect_valid(r);
}

TEST(synthesis, five_qubit_block) {
    auto s = fixtures::five_qubit();
    auto r = synthesize_block_inverse_encoder(s);
    expect_valid(r);
    for (const auto& g : r.inverse_circuit.gates()) EXPECT_EQ(g.delay, 0);
    // Last intermediate before the DFT layer is (I 0 | 0).
    ASSERT_GE(r.intermediates.size(), 2u);
    const auto& xonly = r.intermediates[r.intermediates.size() - 2].form;
    PolyMatrix want(s.field(), 4, 5);
    for (std::size_t i = 0; i < 4; ++i) want(i, i) = LaurentPoly::one(s.field());
    EXPECT_EQ(xonly.x(), want);
    EXPECT_TRUE(xonly.z().is_zero());
}

TEST(synthesis, block_rejections) {
    EXPECT_THROW(synthesize_block_inverse_encoder(parse_stabilizer("field 2\nn 2\n1, 0 | 1, 0\n0, 1 | 1, 0\n")),
                 DomainError);
    EXPECT_THROW(synthesize_block_inverse_encoder(parse_stabilizer("field 2\nn 2\n1, 1 | 0, 0\n1, 1 | 0, 0\n")),
                 DomainError);
    EXPECT_THROW(synthesize_block_inverse_encoder(fixtures::example_one()), DomainError);
}

TEST(synthesis, random_blocks_verify) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Field f = gen::random_small_field(rng);
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
        auto s = random_block(rng, f, n, k);
        auto r = synthesize_block_inverse_encoder(s);
        expect_valid(r);
        for (const auto& g : r.inverse_circuit.gates()) ASSERT_EQ(g.delay, 0);
    }
}

TEST(synthesis, random_css_pairs_verify) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        Field f = gen::random_small_field(rng);
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
        auto [h1, h2] = gen::random_css_pair(rng, f, n, 3);
        auto r = synthesize_css_encoder(h1, h2);
        expect_valid(r);
    }
}

TEST(synthesis, product_example) {
    ConvCode g1(fixtures::parity_h());
    auto s2 = fixtures::five_qubit();
    auto r = synthesize_product_encoder(g1, s2);
    EXPECT_EQ(r.input, product_construct(g1, s2));
    expect_valid(r);
}

TEST(synthesis, product_with_trivial_factor_is_the_block_circuit) {
    Field f = Field::make(2);
    ConvCode one(PolyMatrix::identity(f, 1));
    auto s2 = fixtures::five_qubit();
    auto rp = synthesize_product_encoder(one, s2);
    auto rb = synthesize_block_inverse_encoder(s2);
    EXPECT_EQ(rp.inverse_circuit.gates(), rb.inverse_circuit.gates());
}

TEST(synthesis, product_with_two_row_factor_compacts_wires) {
    gen::Rng rng(3);
    Field f = Field::make(3);
    int done = 0;
    while (done < 5) {
        ConvCode g1 = gen::random_code(rng, f, 2, 3, 2);
        if (!is_delay_free(g1)) continue;
        auto s2 = random_block(rng, f, 3, 1);
        auto r = synthesize_product_encoder(g1, s2);
        EXPECT_EQ(r.input.rows(), 4u);
        expect_valid(r);
        ++done;
    }
}

TEST(synthesis, verify_rejects_wrong_circuits) {
    auto s = fixtures::five_qubit();
    auto r = synthesize_block_inverse_encoder(s);
    Circuit broken = r.inverse_circuit;
    broken.push(CliffordGate::dft(0));
    EXPECT_FALSE(verify_inverse_encoder(s, broken));
    EXPECT_FALSE(verify_inverse_encoder(s, Circuit(s.field(), 5)));
}

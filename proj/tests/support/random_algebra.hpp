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

// Random instances shared by the property tests.

#ifndef QCC_TESTS_RANDOM_ALGEBRA_HPP
#define QCC_TESTS_RANDOM_ALGEBRA_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qcc/poly_matrix.hpp"

namespace qcc::gen {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
    std::mt19937_64& engine() { return eng_; }

   private:
    std::mt19937_64 eng_;
};

inline Elem random_elem(Field f, Rng& rng) { return static_cast<Elem>(rng.uniform(0, f.q() - 1)); }

inline Elem random_nonzero(Field f, Rng& rng) { return static_cast<Elem>(rng.uniform(1, f.q() - 1)); }

/// Polynomial with exponents in [lo, lo + max_deg]; zero with probability `p_zero`.
inline LaurentPoly random_poly(Field f, Rng& rng, int max_deg, double p_zero = 0.2, int lo = 0) {
    if (rng.coin(p_zero)) return LaurentPoly(f);
    int deg = rng.uniform(0, max_deg);
    std::vector<Elem> c(deg + 1);
    for (auto& x : c) x = random_elem(f, rng);
    return LaurentPoly(f, lo, std::move(c));
}

inline PolyMatrix random_matrix(Field f, Rng& rng, std::size_t rows, std::size_t cols, int max_deg,
                                double p_zero = 0.2) {
    PolyMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(f, rng, max_deg, p_zero);
    }
    return m;
}

inline Field random_small_field(Rng& rng) {
    switch (rng.uniform(0, 3)) {
        case 0:
            return Field::make(2);
        case 1:
            return Field::make(3);
        case 2:
            return Field::make(2, 2);
        default:
            return Field::make(5);
    }
}

}  // namespace qcc::gen

#endif

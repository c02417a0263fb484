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

#ifndef QCC_CLASSICAL_HPP
#define QCC_CLASSICAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/error.hpp"
#include "qcc/poly_matrix.hpp"

namespace qcc {

/// Convolutional code given by a k x n polynomial generator matrix.
class ConvCode {
   public:
    explicit ConvCode(PolyMatrix g);

    Field field() const noexcept { return g_.field(); }
    std::size_t k() const noexcept { return g_.rows(); }
    std::size_t n() const noexcept { return g_.cols(); }
    const PolyMatrix& generator() const noexcept { return g_; }
    /// Row degrees nu_i (0 for a zero row).
    std::vector<int> row_degrees() const;
    /// Sum of the row degrees.
    int overall_constraint_length() const;

   private:
    PolyMatrix g_;
};

/// G(D) G(1/D)^t = 0.
bool is_self_orthogonal_classical(const ConvCode& c);

/// G(0) has full row rank.
bool is_delay_free(const ConvCode& c);

/// Some invariant factor of G is not a unit (or G is rank deficient).
bool is_catastrophic(const ConvCode& c);

/// Minimal-basic generator of {v : v(D) G(1/D)^t = 0}.
ConvCode dual_generator(const ConvCode& c);

/// Row-reduces a basic generator until its leading-coefficient matrix has
/// full rank, by unimodular row operations. The code is unchanged.
PolyMatrix minimal_basic_form(const PolyMatrix& g);

struct DistanceReport {
    int d_free = 0;
    /// Minimum-weight detours from the zero state, counted up to time shift.
    std::uint64_t count = 0;
    int search_bound = 0;
};

class DistanceCapExceeded : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Default weight cap 2 (nu + 1) n.
int default_weight_cap(const ConvCode& c);

/**
 * Free distance by a weight-ordered search of the controller-canonical
 * trellis (state = contents of the k shift registers).
 *
 * Detours leave the zero state with a nonzero input block and end at their
 * first return to it. Throws DomainError for catastrophic input and
 * DistanceCapExceeded when no detour has weight <= weight_cap.
 */
DistanceReport free_distance(const ConvCode& c, std::optional<int> weight_cap = std::nullopt);

/// One plus the longest cyclic run of consecutive exponents in `zeros`
/// (taken mod n); n + 1 when every exponent is a zero.
int bch_bound(const std::set<long long>& zeros, long long n);

/// `field p^ell`, `k K`, `n N`, then k rows. A single line of
/// whitespace-separated binary coefficient strings is also accepted.
ConvCode parse_conv_code(std::string_view text);
std::string format_conv_code(const ConvCode& c);

}  // namespace qcc

#endif

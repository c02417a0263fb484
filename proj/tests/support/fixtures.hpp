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

// Stabilizer matrices from the worked examples, shared by several tests.

#ifndef QCC_TESTS_FIXTURES_HPP
#define QCC_TESTS_FIXTURES_HPP

#include "qcc/stabilizer.hpp"
#include "qcc/text_format.hpp"

namespace qcc::fixtures {

/// Rate-1/3 binary code with n = 3, k = 1, m = 1.
inline StabilizerMatrix example_one() {
    return parse_stabilizer(
        "field 2^1\n"
        "n 3\n"
        "11, 1, 11 | 0, 01, 01\n"
        "0, 01, 01 | 11, 11, 1\n");
}

/// The [[5,1,3]] code as a degree-0 stabilizer.
inline StabilizerMatrix five_qubit() {
    return parse_stabilizer(
        "field 2^1\n"
        "n 5\n"
        "1, 0, 0, 1, 0 | 1, 1, 1, 1, 0\n"
        "0, 1, 0, 0, 1 | 0, 1, 1, 1, 1\n"
        "1, 0, 1, 0, 0 | 1, 0, 1, 1, 1\n"
        "0, 1, 0, 1, 0 | 1, 1, 0, 1, 1\n");
}

/// 1 x 3 parity check of a rate-2/3 memory-2 binary code.
inline PolyMatrix parity_h() {
    return parse_matrix("field 2^1\n11001, 10111, 10101\n");
}

/// Generator of that rate-2/3 code.
inline PolyMatrix generator_g() {
    return parse_matrix("field 2^1\n011, 1, 101\n1, 011, 111\n");
}

}  // namespace qcc::fixtures

#endif

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

// Search for self-orthogonal binary rate-1/4 convolutional codes g(D) =
// (g_1, g_2, g_3, g_4) maximizing the free distance of the dual code.
//
// Candidates have deg g_i <= nu, some g_i of degree exactly nu and a nonzero
// constant-term vector. Generators are written as coefficient strings in
// increasing exponent order ("1100" is 1 + D); candidates and ties are
// ordered lexicographically by the concatenated strings g_1 g_2 g_3 g_4.
//
// Random mode visits the candidate domain in a pseudorandom order without
// repetition. With N the domain size, L = ceil(log2 N), mask = 2^L - 1 and
//
//   splitmix64(s): s += 0x9e3779b97f4a7c15; z = s;
//                  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//                  z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//                  return z ^ (z >> 31)
//   k0 = splitmix64(seed), k1 = splitmix64(k0)   (the state advances)
//   mix(x): x = (x + k0) & mask; h = max(1, L / 2)
//           x ^= x >> h; x = (x * 0xbf58476d1ce4e5b9) & mask
//           x ^= x >> h; x = (x * 0x94d049bb133111eb) & mask
//           x ^= x >> h; x = (x + k1) & mask
//   perm(i): x = mix(i); while x >= N: x = mix(x)
//
// each step of mix is a bijection of [0, 2^L), so perm is a bijection of
// [0, N) (cycle walking). The i-th draw is domain element perm(i), where a
// domain index decodes as c = idx mod 15 + 1 (constant-term vector),
// t = (idx / 15) mod 15 + 1 (degree-nu vector), and the remaining quotient
// holding the vectors of degrees 1..nu-1, four bits each, lowest degree
// first. Bit i of a coefficient vector is the coefficient of g_{i+1}.

#ifndef QCC_SEARCH_HPP
#define QCC_SEARCH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcc/classical.hpp"

namespace qcc {

/// Bit j of each word is the coefficient of D^j.
using QuarterGenerators = std::array<std::uint32_t, 4>;

enum class SearchMode { Exhaustive, Random };

struct SearchConfig {
    int nu = 1;
    SearchMode mode = SearchMode::Exhaustive;
    /// Random mode only.
    std::uint64_t seed = 0;
    /// Random mode only: number of candidates drawn.
    std::uint64_t budget = 0;
    std::size_t keep = 10;
    /// 0 picks QCC_THREADS, or the machine's parallelism when unset.
    unsigned threads = 0;
};

struct SearchRecord {
    QuarterGenerators generators{};
    int d_dual = 0;
    std::uint64_t count = 0;
    int nu = 0;

    ConvCode code() const;
    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

constexpr int kMaxSearchNu = 15;

/// Candidates in lexicographic order; the callback returns false to stop.
void enumerate_candidates(int nu, const std::function<bool(const QuarterGenerators&)>& visit);
/// Size of the candidate domain: 225 * 16^(nu - 1).
std::uint64_t candidate_count(int nu);
/// The i-th draw of random mode (i < candidate_count(nu)).
QuarterGenerators random_candidate(int nu, std::uint64_t seed, std::uint64_t i);

std::uint64_t splitmix64(std::uint64_t& state);

/// sum_i g_i(D) g_i(1/D) = 0: every autocorrelation of the tuple is even.
bool quarter_self_orthogonal(const QuarterGenerators& g, int nu);
/// gcd(g_1, ..., g_4) = 1.
bool quarter_basic(const QuarterGenerators& g);

/**
 * Free distance of the dual of a basic candidate, from the syndrome-former
 * trellis of h_i = D^nu g_i(1/D): the state holds the nu pending syndrome
 * bits, a block v is allowed when the current syndrome bit vanishes, and
 * detours from the zero state are counted as in free_distance.
 */
DistanceReport quarter_dual_distance(const QuarterGenerators& g, int nu);

/// Strict ordering: larger d_dual, then smaller count, then lexicographic.
bool record_better(const SearchRecord& a, const SearchRecord& b);

/// Worker count: `requested`, else QCC_THREADS, else hardware concurrency.
unsigned search_threads(unsigned requested);

/// Best `keep` records, each re-verified through dual_generator and
/// free_distance before it is returned.
std::vector<SearchRecord> search(const SearchConfig& cfg);

/// "1100", coefficients in increasing exponent order, nu + 1 digits.
std::string format_quarter_poly(std::uint32_t g, int nu);
/// Fixed-width table with the columns nu, g_1..g_4, d_dual, N.
std::string format_search_table(const std::vector<SearchRecord>& records);
/// One `record nu=... g=a,b,c,d d_dual=... count=...` line per record.
std::string format_search_records(const std::vector<SearchRecord>& records);
std::vector<SearchRecord> parse_search_records(std::string_view text);

}  // namespace qcc

#endif

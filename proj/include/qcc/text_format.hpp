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

// Text encodings shared by every file format.
//
// Polynomials are written as coefficient strings in increasing exponent
// order. Over a prime field each coefficient is one character (0-9, then a-u
// for 10..30), so "1101" is 1 + D + D^3. Over an extension field each
// coefficient is a bracketed coordinate vector over F_p, "[c0,c1,...]", and a
// bare digit is accepted as a prime-subfield element. A negative lowest
// exponent is written as a prefix: "D^-2 * 101" is D^-2 + 1. Zero is "0".
//
// Matrices are a `field p^ell` header followed by one line per row with
// comma-separated entries. Lines starting with '#' and blank lines are
// ignored everywhere.

#ifndef QCC_TEXT_FORMAT_HPP
#define QCC_TEXT_FORMAT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/poly_matrix.hpp"

namespace qcc {

std::string format_element(Field f, Elem e);
Elem parse_element(Field f, std::string_view text);

std::string format_poly(const LaurentPoly& p);
LaurentPoly parse_poly(Field f, std::string_view text);

std::string format_field_header(Field f);
/// Accepts "field p^ell" and "field p".
Field parse_field_header(std::string_view line);

/// Comma-separated entries, one row per line, no header.
std::string format_matrix_rows(const PolyMatrix& m);
/// Header plus rows; an empty matrix also gets a `shape r c` line.
std::string format_matrix(const PolyMatrix& m);
PolyMatrix parse_matrix(std::string_view text);

/// Non-comment, non-blank lines with their 1-based line numbers.
struct TextLine {
    std::size_t number;
    std::string text;
};
std::vector<TextLine> significant_lines(std::string_view text);

std::string trim(std::string_view s);
/// Splits on `sep` outside of square brackets; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view s, char sep);
/// Splits on runs of whitespace.
std::vector<std::string> split_whitespace(std::string_view s);
/// Parses one matrix row; errors name the line and entry.
std::vector<LaurentPoly> parse_row(Field f, const TextLine& line, std::size_t expected_cols);
/// "key value" header line; throws ParseError naming the line otherwise.
long long parse_keyed_int(const TextLine& line, std::string_view key);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace qcc

#endif

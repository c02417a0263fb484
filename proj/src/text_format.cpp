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

#include "qcc/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qcc/error.hpp"

namespace qcc {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstu";

int digit_value(char c) {
    auto pos = kDigits.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

long long parse_int(std::string_view s, const std::string& what) {
    std::string t = trim(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw ParseError("expected an integer for " + what + ", got '" + t + "'");
    }
    return v;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

Elem parse_bracket(Field f, std::string_view body) {
    std::vector<int> coords;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coords.push_back(static_cast<int>(parse_int(piece, "coordinate")));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return f.from_coords(coords);
}

}  // namespace

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        if (s[i] == ']') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string format_element(Field f, Elem e) {
    if (f.is_prime()) return std::to_string(static_cast<int>(e));
    std::string s = "[";
    auto c = f.coords(e);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + "]";
}

Elem parse_element(Field f, std::string_view text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') throw ParseError("unterminated bracket in element '" + t + "'");
        return parse_bracket(f, std::string_view(t).substr(1, t.size() - 2));
    }
    long long v = parse_int(t, "field element");
    if (f.is_prime()) {
        if (v < 0 || v >= f.p()) throw ParseError("element " + t + " out of range for F_" + std::to_string(f.p()));
        return static_cast<Elem>(v);
    }
    if (v < 0 || v >= f.p()) {
        throw ParseError("extension-field elements are written as [c0,c1,...]; got '" + t + "'");
    }
    return static_cast<Elem>(v);
}

std::string format_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    Field f = p.field();
    std::string body;
    int from = p.low() < 0 ? p.low() : 0;
    for (int e = from; e <= p.degree(); ++e) {
        Elem c = p.coeff(e);
        if (f.is_prime()) {
            body.push_back(kDigits[c]);
        } else {
            body += format_element(f, c);
        }
    }
    if (from < 0) return "D^" + std::to_string(from) + " * " + body;
    return body;
}

LaurentPoly parse_poly(Field f, std::string_view text) {
    std::string t = strip_spaces(text);
    if (t.empty()) throw ParseError("empty polynomial");
    int lo = 0;
    std::string_view body = t;
    if (t.size() >= 2 && t[0] == 'D' && t[1] == '^') {
        auto star = t.find('*');
        if (star == std::string::npos) throw ParseError("expected 'D^lo * coefficients' in '" + t + "'");
        lo = static_cast<int>(parse_int(std::string_view(t).substr(2, star - 2), "exponent offset"));
        body = std::string_view(t).substr(star + 1);
    }
    std::vector<Elem> coeffs;
    for (std::size_t i = 0; i < body.size();) {
        char c = body[i];
        if (c == '[') {
            auto close = body.find(']', i);
            if (close == std::string_view::npos) throw ParseError("unterminated bracket in '" + t + "'");
            coeffs.push_back(parse_bracket(f, body.substr(i + 1, close - i - 1)));
            i = close + 1;
            continue;
        }
        int v = digit_value(c);
        if (v < 0 || v >= f.p()) {
            throw ParseError(std::string("invalid coefficient '") + c + "' for F_" + std::to_string(f.q()) + " in '" +
                             t + "'");
        }
        coeffs.push_back(static_cast<Elem>(v));
        ++i;
    }
    if (coeffs.empty()) throw ParseError("no coefficients in '" + t + "'");
    return LaurentPoly(f, lo, std::move(coeffs));
}

std::string format_field_header(Field f) { return "field " + std::to_string(f.p()) + "^" + std::to_string(f.ell()); }

Field parse_field_header(std::string_view line) {
    auto words = split_whitespace(line);
    if (words.size() != 2 || words[0] != "field") {
        throw ParseError("expected 'field p^ell', got '" + trim(line) + "'");
    }
    const std::string& field_text = words[1];
    auto caret = field_text.find('^');
    int p = static_cast<int>(parse_int(field_text.substr(0, caret), "field characteristic"));
    int ell = caret == std::string::npos ? 1 : static_cast<int>(parse_int(field_text.substr(caret + 1), "extension degree"));
    try {
        return Field::make(p, ell);
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::vector<TextLine> significant_lines(std::string_view text) {
    std::vector<TextLine> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++number;
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') out.push_back({number, t});
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

std::vector<LaurentPoly> parse_row(Field f, const TextLine& line, std::size_t expected_cols) {
    auto pieces = split_top_level(line.text, ',');
    if (expected_cols != 0 && pieces.size() != expected_cols) {
        throw ParseError("line " + std::to_string(line.number) + ": expected " + std::to_string(expected_cols) +
                         " entries, found " + std::to_string(pieces.size()));
    }
    std::vector<LaurentPoly> row;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        try {
            row.push_back(parse_poly(f, pieces[k]));
        } catch (const DomainError& e) {
            throw ParseError("line " + std::to_string(line.number) + ", entry " + std::to_string(k + 1) + ": " +
                             e.what());
        }
    }
    return row;
}

long long parse_keyed_int(const TextLine& line, std::string_view key) {
    auto words = split_whitespace(line.text);
    if (words.size() != 2 || words[0] != key) {
        throw ParseError("line " + std::to_string(line.number) + ": expected '" + std::string(key) + " <int>'");
    }
    try {
        return parse_int(words[1], std::string(key));
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
    }
}

std::string format_matrix_rows(const PolyMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += format_poly(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string format_matrix(const PolyMatrix& m) {
    std::string out = format_field_header(m.field()) + "\n";
    if (m.rows() == 0 || m.cols() == 0) {
        out += "shape " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    }
    return out + format_matrix_rows(m);
}

PolyMatrix parse_matrix(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty matrix file");
    Field f = [&] {
        try {
            return parse_field_header(lines[0].text);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lines[0].number) + ": " + e.what());
        }
    }();
    std::size_t first = 1;
    if (lines.size() > 1 && lines[1].text.rfind("shape", 0) == 0) {
        auto words = split_whitespace(lines[1].text);
        if (words.size() != 3) throw ParseError("line " + std::to_string(lines[1].number) + ": expected 'shape r c'");
        auto r = static_cast<std::size_t>(parse_int(words[1], "rows"));
        auto c = static_cast<std::size_t>(parse_int(words[2], "cols"));
        if (r != 0 && c != 0) throw ParseError("shape lines are only used for empty matrices");
        return PolyMatrix(f, r, c);
    }
    std::vector<LaurentPoly> entries;
    std::size_t cols = 0;
    for (std::size_t k = first; k < lines.size(); ++k) {
        auto row = parse_row(f, lines[k], cols);
        cols = row.size();
        for (auto& e : row) entries.push_back(std::move(e));
    }
    std::size_t rows = lines.size() - first;
    if (rows == 0) throw ParseError("matrix has no rows");
    return PolyMatrix(f, rows, cols, std::move(entries));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << content;
}

}  // namespace qcc

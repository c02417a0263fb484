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

#include "qcc/laurent_poly.hpp"

#include <algorithm>

#include "qcc/error.hpp"

namespace qcc {

LaurentPoly::LaurentPoly(Field f, int lo, std::vector<Elem> coeffs) : f_(f), lo_(lo), c_(std::move(coeffs)) {
    for (Elem c : c_) {
        if (!f_.contains(c)) throw DomainError("coefficient out of range for F_" + std::to_string(f_.q()));
    }
    normalize();
}

LaurentPoly LaurentPoly::monomial(Field f, Elem c, int exponent) {
    LaurentPoly r(f);
    if (c != 0) {
        r.lo_ = exponent;
        r.c_.push_back(c);
    }
    return r;
}

void LaurentPoly::normalize() {
    std::size_t end = c_.size();
    while (end > 0 && c_[end - 1] == 0) --end;
    std::size_t begin = 0;
    while (begin < end && c_[begin] == 0) ++begin;
    if (begin == end) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (begin > 0 || end < c_.size()) {
        c_ = std::vector<Elem>(c_.begin() + begin, c_.begin() + end);
        lo_ += static_cast<int>(begin);
    }
}

void LaurentPoly::check_field(const LaurentPoly& o) const {
    if (f_ != o.f_) throw DomainError("field mismatch in polynomial arithmetic");
}

std::size_t LaurentPoly::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem c) { return c != 0; }));
}

Elem LaurentPoly::coeff(int exponent) const noexcept {
    int i = exponent - lo_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += s;
    return r;
}

LaurentPoly LaurentPoly::adjoint() const {
    LaurentPoly r(f_);
    if (is_zero()) return r;
    r.lo_ = -degree();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

LaurentPoly LaurentPoly::scaled(Elem c) const {
    if (c == 0) return LaurentPoly(f_);
    LaurentPoly r = *this;
    for (Elem& x : r.c_) x = f_.mul(x, c);
    return r;
}

LaurentPoly LaurentPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(leading()));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_field(o);
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(degree(), o.degree());
    if (lo != lo_ || hi != degree()) {
        std::vector<Elem> c(hi - lo + 1, 0);
        std::copy(c_.begin(), c_.end(), c.begin() + (lo_ - lo));
        c_ = std::move(c);
        lo_ = lo;
    }
    std::size_t off = o.lo_ - lo_;
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[off + i] = f_.add(c_[off + i], o.c_[i]);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (Elem& x : r.c_) x = f_.neg(x);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_field(o);
    LaurentPoly r(f_);
    if (is_zero() || o.is_zero()) return r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
        }
    }
    r.normalize();
    return r;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.field() != g.field()) throw DomainError("field mismatch in polynomial division");
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    if (!f.is_polynomial() || !g.is_polynomial()) {
        throw DomainError("polynomial division requires nonnegative exponents");
    }
    Field F = f.field();
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) return {LaurentPoly(F), f};

    std::vector<Elem> rem(df + 1, 0);
    for (int e = f.low(); e <= df; ++e) rem[e] = f.coeff(e);
    std::vector<Elem> gc(dg + 1, 0);
    for (int e = g.low(); e <= dg; ++e) gc[e] = g.coeff(e);
    Elem lead_inv = F.inv(gc[dg]);
    std::vector<Elem> quo(df - dg + 1, 0);
    for (int i = df; i >= dg; --i) {
        Elem c = rem[i];
        if (c == 0) continue;
        Elem t = F.mul(c, lead_inv);
        quo[i - dg] = t;
        for (int j = 0; j <= dg; ++j) {
            if (gc[j] != 0) rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(t, gc[j]));
        }
    }
    rem.resize(dg);
    return {LaurentPoly(F, 0, std::move(quo)), LaurentPoly(F, 0, std::move(rem))};
}

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.field() != g.field()) throw DomainError("field mismatch in polynomial gcd");
    if (!f.is_polynomial() || !g.is_polynomial()) {
        throw DomainError("polynomial gcd requires nonnegative exponents");
    }
    LaurentPoly a = f;
    LaurentPoly b = g;
    while (!b.is_zero()) {
        LaurentPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool divides(const LaurentPoly& g, const LaurentPoly& f) {
    if (g.is_zero()) return f.is_zero();
    return divmod(f, g).second.is_zero();
}

}  // namespace qcc

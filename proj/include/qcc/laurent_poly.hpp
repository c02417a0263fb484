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

#ifndef QCC_LAURENT_POLY_HPP
#define QCC_LAURENT_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "qcc/field.hpp"

namespace qcc {

/**
 * Laurent polynomial sum_{e} c_e D^e over F_q.
 *
 * Stored densely from the lowest exponent `low()`. The canonical form has
 * nonzero first and last coefficients; the zero polynomial has no
 * coefficients and reports low() == 0, degree() == -1.
 */
class LaurentPoly {
   public:
    explicit LaurentPoly(Field f) : f_(f) {}
    LaurentPoly(Field f, int lo, std::vector<Elem> coeffs);

    static LaurentPoly zero(Field f) { return LaurentPoly(f); }
    static LaurentPoly one(Field f) { return constant(f, 1); }
    static LaurentPoly constant(Field f, Elem c) { return monomial(f, c, 0); }
    static LaurentPoly monomial(Field f, Elem c, int exponent);

    Field field() const noexcept { return f_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int low() const noexcept { return lo_; }
    /// Highest exponent with a nonzero coefficient (-1 for zero).
    int degree() const noexcept { return c_.empty() ? -1 : lo_ + static_cast<int>(c_.size()) - 1; }
    /// Number of nonzero terms.
    std::size_t weight() const noexcept;
    Elem coeff(int exponent) const noexcept;
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem trailing() const noexcept { return c_.empty() ? 0 : c_.front(); }

    bool is_polynomial() const noexcept { return c_.empty() || lo_ >= 0; }
    bool is_constant() const noexcept { return c_.empty() || (lo_ == 0 && c_.size() == 1); }
    bool is_monomial() const noexcept { return weight() == 1; }
    /// Units of F_q[D]: nonzero constants.
    bool is_unit() const noexcept { return lo_ == 0 && c_.size() == 1; }

    /// Multiplication by D^s.
    LaurentPoly shifted(int s) const;
    /// Substitution D -> 1/D.
    LaurentPoly adjoint() const;
    LaurentPoly scaled(Elem c) const;
    /// Scaled so that the leading coefficient is 1; zero stays zero.
    LaurentPoly monic() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    /// Accumulates a * b into *this without a temporary.
    void add_product(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
        return a.f_ == b.f_ && a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) noexcept { return !(a == b); }

   private:
    void normalize();
    void check_field(const LaurentPoly& o) const;

    Field f_;
    int lo_ = 0;
    std::vector<Elem> c_;
};

/// Quotient and remainder in F_q[D]; both inputs must be polynomial and the
/// divisor nonzero. deg(remainder) < deg(divisor).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f, const LaurentPoly& g);
/// Monic generator of the ideal (f, g) in F_q[D]; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);
/// True iff g divides f in F_q[D].
bool divides(const LaurentPoly& g, const LaurentPoly& f);

}  // namespace qcc

#endif

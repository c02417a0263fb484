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

#ifndef QCC_FIELD_HPP
#define QCC_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <vector>

namespace qcc {

/// Packed element of F_q: the coefficient vector (c_0, ..., c_{ell-1}) of
/// c_0 + c_1 x + ... over F_p is stored as the integer sum c_i p^i. Prime
/// field elements therefore keep their natural integer value in every
/// extension of the same characteristic.
using Elem = std::uint8_t;

/// Lookup tables behind a Field handle. Built once, immutable afterwards.
struct FieldData {
    int p = 0;
    int ell = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
};

/**
 * Handle to one of the supported finite fields F_q, q = p^ell.
 *
 * Arithmetic goes through precomputed q x q tables. Tables are built once per
 * (p, ell) and never modified afterwards, so handles are cheap to copy and
 * safe to share between threads. Two handles compare equal iff they refer to
 * the same (p, ell).
 *
 * Supported: every prime p <= 31 with ell = 1, and the extensions below with
 * fixed moduli (coefficients listed from the constant term up):
 *
 *   F_4  = F_2[x]/(x^2 + x + 1)
 *   F_8  = F_2[x]/(x^3 + x + 1)
 *   F_16 = F_2[x]/(x^4 + x + 1)
 *   F_9  = F_3[x]/(x^2 + 1)
 *   F_27 = F_3[x]/(x^3 + 2x + 1)
 *   F_25 = F_5[x]/(x^2 + x + 2)
 *
 * For prime fields the modulus is recorded as x.
 */
class Field {
   public:
    /// Throws DomainError for non-prime p or an unsupported (p, ell).
    static Field make(int p, int ell = 1);

    int p() const noexcept { return d_->p; }
    int ell() const noexcept { return d_->ell; }
    int q() const noexcept { return d_->q; }
    bool is_prime() const noexcept { return d_->ell == 1; }
    /// Monic modulus, coefficients from the constant term up (length ell+1).
    const std::vector<int>& modulus() const noexcept { return d_->modulus; }

    Elem add(Elem a, Elem b) const noexcept { return d_->add[a * d_->q + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return d_->add[a * d_->q + d_->neg[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return d_->mul[a * d_->q + b]; }
    Elem neg(Elem a) const noexcept { return d_->neg[a]; }
    /// Throws DomainError for a == 0.
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;
    /// Smallest k >= 1 with a^k = 1; throws for a == 0.
    int order(Elem a) const;

    /// Coordinates (c_0, ..., c_{ell-1}) over F_p.
    std::vector<int> coords(Elem a) const;
    Elem from_coords(const std::vector<int>& c) const;
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(long long v) const noexcept;

    bool contains(int v) const noexcept { return v >= 0 && v < q(); }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.d_ != b.d_; }

   private:
    explicit Field(const FieldData* d) : d_(d) {}
    const FieldData* d_;
};

std::ostream& operator<<(std::ostream& os, const Field& f);

/// A field element bundled with its field, for call sites where the field is
/// not otherwise implied (gate parameters, CLI input).
class FieldElement {
   public:
    FieldElement(Field f, Elem v);
    static FieldElement zero(Field f) { return {f, 0}; }
    static FieldElement one(Field f) { return {f, 1}; }

    Field field() const noexcept { return f_; }
    Elem value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    std::vector<int> coords() const { return f_.coords(v_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.f_ == b.f_ && a.v_ == b.v_;
    }

   private:
    void check_same(const FieldElement& o) const;
    Field f_;
    Elem v_;
};

bool is_prime(int p) noexcept;
/// f given constant term first; brute-force search for a factor.
bool is_irreducible_mod_p(const std::vector<int>& f, int p);

}  // namespace qcc

#endif

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

#include "qcc/field.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcc/error.hpp"

namespace qcc {

namespace {

constexpr int kMaxPrime = 31;

struct ExtensionEntry {
    int p;
    int ell;
    std::vector<int> modulus;  // constant term first, monic
};

const std::vector<ExtensionEntry>& extension_table() {
    static const std::vector<ExtensionEntry> table = {
        {2, 2, {1, 1, 1}},     // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
        {2, 4, {1, 1, 0, 0, 1}},
        {3, 2, {1, 0, 1}},  // x^2 + 1
        {3, 3, {1, 2, 0, 1}},
        {5, 2, {2, 1, 1}},
    };
    return table;
}

// Remainder of a modulo monic b over F_p; both low-to-high.
std::vector<int> poly_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
        }
    }
    a.resize(std::max(0, db));
    return a;
}

}  // namespace

bool is_prime(int p) noexcept {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/// Brute-force irreducibility test: no monic factor of degree 1..deg/2.
bool is_irreducible_mod_p(const std::vector<int>& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            auto r = poly_mod_p(f, g, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

namespace {

std::unique_ptr<FieldData> build(int p, int ell, std::vector<int> modulus) {
    if (ell > 1 && !is_irreducible_mod_p(modulus, p)) {
        throw std::logic_error("field table modulus is reducible");
    }
    auto d = std::make_unique<FieldData>();
    d->p = p;
    d->ell = ell;
    int q = 1;
    for (int i = 0; i < ell; ++i) q *= p;
    d->q = q;
    d->modulus = std::move(modulus);

    auto digits = [&](int v) {
        std::vector<int> c(ell);
        for (int i = 0; i < ell; ++i) {
            c[i] = v % p;
            v /= p;
        }
        return c;
    };
    auto pack = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = ell - 1; i >= 0; --i) v = v * p + c[i];
        return static_cast<Elem>(v);
    };

    d->add.resize(q * q);
    d->mul.resize(q * q);
    d->neg.resize(q);
    d->inv.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto ca = digits(a);
        std::vector<int> na(ell);
        for (int i = 0; i < ell; ++i) na[i] = (p - ca[i]) % p;
        d->neg[a] = pack(na);
        for (int b = 0; b < q; ++b) {
            auto cb = digits(b);
            std::vector<int> s(ell);
            for (int i = 0; i < ell; ++i) s[i] = (ca[i] + cb[i]) % p;
            d->add[a * q + b] = pack(s);
            std::vector<int> prod(2 * ell - 1, 0);
            for (int i = 0; i < ell; ++i) {
                for (int j = 0; j < ell; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            }
            auto r = ell == 1 ? prod : poly_mod_p(prod, d->modulus, p);
            r.resize(ell, 0);
            d->mul[a * q + b] = pack(r);
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (d->mul[a * q + b] == 1) {
                d->inv[a] = static_cast<Elem>(b);
                break;
            }
        }
    }
    return d;
}

class Registry {
   public:
    Registry() {
        for (int p = 2; p <= kMaxPrime; ++p) {
            if (is_prime(p)) fields_[{p, 1}] = build(p, 1, {0, 1});
        }
        for (const auto& e : extension_table()) fields_[{e.p, e.ell}] = build(e.p, e.ell, e.modulus);
    }
    const FieldData* find(int p, int ell) const {
        auto it = fields_.find({p, ell});
        return it == fields_.end() ? nullptr : it->second.get();
    }

   private:
    std::map<std::pair<int, int>, std::unique_ptr<FieldData>> fields_;
};

const Registry& registry() {
    static const Registry r;
    return r;
}

}  // namespace

Field Field::make(int p, int ell) {
    if (!qcc::is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (ell < 1) throw DomainError("extension degree must be at least 1");
    const FieldData* d = registry().find(p, ell);
    if (d == nullptr) {
        throw DomainError("unsupported field " + std::to_string(p) + "^" + std::to_string(ell));
    }
    return Field(d);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero in F_" + std::to_string(q()));
    return d_->inv[a];
}

Elem Field::pow(Elem a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem result = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int Field::order(Elem a) const {
    if (a == 0) throw DomainError("zero has no multiplicative order");
    Elem x = a;
    int k = 1;
    while (x != 1) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<int> Field::coords(Elem a) const {
    std::vector<int> c(ell());
    int v = a;
    for (int i = 0; i < ell(); ++i) {
        c[i] = v % p();
        v /= p();
    }
    return c;
}

Elem Field::from_coords(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != ell()) {
        throw DomainError("expected " + std::to_string(ell()) + " coordinates over F_" + std::to_string(p()));
    }
    int v = 0;
    for (int i = ell() - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p()) throw DomainError("coordinate out of range for F_" + std::to_string(p()));
        v = v * p() + c[i];
    }
    return static_cast<Elem>(v);
}

Elem Field::from_int(long long v) const noexcept {
    long long r = v % p();
    if (r < 0) r += p();
    return static_cast<Elem>(r);
}

std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.p() << '^' << f.ell(); }

FieldElement::FieldElement(Field f, Elem v) : f_(f), v_(v) {
    if (!f.contains(v)) throw DomainError("element out of range for F_" + std::to_string(f.q()));
}

void FieldElement::check_same(const FieldElement& o) const {
    if (f_ != o.f_) throw DomainError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.mul(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {f_, f_.neg(v_)}; }
FieldElement FieldElement::inverse() const { return {f_, f_.inv(v_)}; }

}  // namespace qcc

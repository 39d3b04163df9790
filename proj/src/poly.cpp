/*
   Copyright 2026 The qckit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qckit/poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qckit/linalg.hpp"

namespace qckit {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!field_->contains(c)) throw Error(ErrorKind::FieldMismatch, "coefficient outside " + field_->describe());
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::cyclic_modulus(FieldPtr field, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = field->neg(1);
    v[n] = field->add(v[n], 1);
    return Poly(std::move(field), std::move(v));
}

std::size_t Poly::degree() const {
    if (coeffs_.empty()) throw Error(ErrorKind::BadParameters, "the zero polynomial has no degree");
    return coeffs_.size() - 1;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
    return Poly(field_, std::move(v));
}

Elem Poly::eval(Elem point) const { return eval_in(*field_, point); }

Elem Poly::eval_in(const Field& ext, Elem point) const {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, point), coeffs_[i]);
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->neg(coeffs_[i]);
    return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const Field& f = *a.field_;
    std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = *a.field_;
    std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(v));
}

DivMod divmod(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& F = f.ring();
    std::vector<Elem> r = f.coeffs();
    const std::size_t dg = g.degree();
    if (r.size() <= dg) return {Poly(f.field()), f};
    std::vector<Elem> q(r.size() - dg, 0);
    const Elem lead_inv = F.inv(g.leading());
    for (std::size_t i = r.size(); i-- > dg;) {
        const Elem c = F.mul(r[i], lead_inv);
        q[i - dg] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dg; ++k) r[i - dg + k] = F.sub(r[i - dg + k], F.mul(c, g.coeffs()[k]));
    }
    return {Poly(f.field(), std::move(q)), Poly(f.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.coeffs_ == b.coeffs_ && same_field(a.field_, b.field_);
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Elem c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Egcd egcd(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    const FieldPtr& F = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(F, 1), s1(F);
    Poly t0(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem s = F->inv(r0.leading());
    return {r0.scaled(s), s0.scaled(s), t0.scaled(s)};
}

Poly inverse_mod(const Poly& f, const Poly& m) {
    auto [d, u, v] = egcd(f % m, m);
    if (d.is_zero() || d.degree() != 0) throw Error(ErrorKind::DivisionByZero, "polynomial is not invertible modulo " + m.to_string());
    return u % m;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(a.field(), 1) % m;
    Poly base = a % m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) throw Error(ErrorKind::ZeroConstantTerm, "reciprocal needs f(0) != 0");
    std::vector<Elem> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(v)).scaled(f.ring().inv(f.coeff(0)));
}

bool is_self_reciprocal(const Poly& f) { return f.is_monic() && f.coeff(0) != 0 && reciprocal(f) == f; }

Poly scale_var(const Poly& f, Elem lambda) {
    if (lambda == 0) throw Error(ErrorKind::ZeroScalar, "scale_var needs lambda != 0");
    const Field& F = f.ring();
    std::vector<Elem> v(f.coeffs().size());
    Elem w = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = F.mul(f.coeffs()[i], w);
        w = F.mul(w, lambda);
    }
    return Poly(f.field(), std::move(v));
}

Poly negate_var(const Poly& f) { return scale_var(f, f.ring().neg(1)); }

Poly power_var(const Poly& f, std::size_t a, std::size_t n) {
    if (n == 0 || std::gcd(a, n) != 1)
        throw Error(ErrorKind::MultiplierNotCoprime,
                    "multiplier " + std::to_string(a) + " is not coprime to " + std::to_string(n));
    const Field& F = f.ring();
    std::vector<Elem> v(n, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const std::size_t j = static_cast<std::size_t>((static_cast<unsigned __int128>(i) * a) % n);
        v[j] = F.add(v[j], f.coeffs()[i]);
    }
    return Poly(f.field(), std::move(v));
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    const std::size_t n = f.degree();
    if (n == 1) return true;
    const Poly fm = f.monic();
    const Poly x = Poly::x(f.field());
    const std::uint64_t q = f.ring().size();
    Poly h = x % fm;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = pow_mod(h, q, fm);
        const Poly g = gcd(fm, h - x);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

// Calls visit(coeffs) for every monic polynomial of the given degree, coefficients
// c_0..c_{d-1} enumerated with c_0 most significant. Stops when visit returns true.
template <typename Visit>
bool for_each_monic(const FieldPtr& field, std::size_t degree, Visit&& visit) {
    const std::uint64_t q = field->size();
    std::vector<Elem> c(degree + 1, 0);
    c[degree] = 1;
    while (true) {
        if (visit(c)) return true;
        std::size_t i = degree;
        while (i-- > 0) {
            if (++c[i] < q) break;
            c[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) return false;
    }
}

}  // namespace

bool is_irreducible_by_trial_division(const Poly& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    const std::size_t n = f.degree();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        const bool found = for_each_monic(f.field(), d, [&](const std::vector<Elem>& c) {
            return (f % Poly(f.field(), c)).is_zero();
        });
        if (found) return false;
    }
    return true;
}

Poly first_irreducible(const FieldPtr& field, std::size_t degree) {
    if (degree == 0) throw Error(ErrorKind::BadParameters, "irreducible polynomials have degree >= 1");
    std::optional<Poly> out;
    for_each_monic(field, degree, [&](const std::vector<Elem>& c) {
        if (degree > 1 && c[0] == 0) return false;
        Poly f(field, c);
        if (!is_irreducible(f)) return false;
        out = std::move(f);
        return true;
    });
    if (!out) throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");
    return *out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

namespace {

// Splits a squarefree product of irreducibles of equal degree d (Berlekamp).
std::vector<Poly> berlekamp_split(const Poly& g, std::size_t d) {
    const std::size_t n = g.degree();
    if (n == d) return {g};
    const FieldPtr& F = g.field();
    const Field& f = *F;
    const std::uint64_t q = f.size();

    // Rows x^(q i) mod g minus the unit vector; the kernel of the transpose is the
    // Berlekamp subalgebra {v : v^q = v mod g}.
    const Poly xq = pow_mod(Poly::x(F), q, g);
    Matrix bt(n, n);
    Poly row = Poly::constant(F, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) bt(j, i) = row.coeff(j);
        bt(i, i) = f.sub(bt(i, i), 1);
        row = mul_mod(row, xq, g);
    }
    const Matrix basis = kernel(f, bt);
    const std::size_t count = basis.rows;

    std::vector<Poly> parts{g};
    for (std::size_t b = 0; b < basis.rows && parts.size() < count; ++b) {
        const auto r = basis.row(b);
        const Poly v(F, std::vector<Elem>(r.begin(), r.end()));
        if (v.is_zero() || v.degree() == 0) continue;
        std::vector<Poly> next;
        for (const Poly& u : parts) {
            Poly cur = u;
            for (Elem c = 0; c < q && cur.degree() > d; ++c) {
                const Poly w = gcd(cur, v - Poly::constant(F, c));
                if (w.degree() > 0 && w.degree() < cur.degree()) {
                    next.push_back(w);
                    cur = cur / w;
                }
            }
            next.push_back(cur);
        }
        parts = std::move(next);
    }
    if (parts.size() != count) throw std::logic_error("Berlekamp splitting did not separate all factors");
    return parts;
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::BadParameters, "cannot factor the zero polynomial");
    const FieldPtr& F = f.field();
    const std::uint64_t q = F->size();
    std::vector<Poly> out;
    Poly rest = f.monic();
    const Poly x = Poly::x(F);
    Poly h = x % rest;
    for (std::size_t d = 1; rest.degree() >= 2 * d; ++d) {
        h = pow_mod(h, q, rest);
        const Poly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            for (auto& p : berlekamp_split(g, d)) out.push_back(p.monic());
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back(rest.monic());
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<Poly> FactorClassification::slots() const {
    std::vector<Poly> out = self_reciprocal;
    for (const auto& pr : pairs) {
        out.push_back(pr.h);
        out.push_back(pr.h_star);
    }
    return out;
}

FactorClassification factor_cyclic_modulus(const FieldPtr& field, std::size_t m) {
    if (m == 0 || m % field->characteristic() == 0)
        throw Error(ErrorKind::NotCoprime,
                    "gcd(m, q) != 1 for m = " + std::to_string(m) + ", q = " + std::to_string(field->size()));
    const Poly target = Poly::cyclic_modulus(field, m);
    FactorClassification out;
    out.field = field;
    out.m = m;
    const auto factors = factor_squarefree(target);
    std::vector<bool> used(factors.size(), false);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        const Poly rec = reciprocal(factors[i]);
        if (rec == factors[i]) {
            out.self_reciprocal.push_back(factors[i]);
            used[i] = true;
            continue;
        }
        auto it = std::find(factors.begin(), factors.end(), rec);
        if (it == factors.end()) throw std::logic_error("reciprocal partner missing from factorization");
        used[i] = true;
        used[static_cast<std::size_t>(it - factors.begin())] = true;
        // factors are sorted, so factors[i] is the smaller partner
        out.pairs.push_back({factors[i], rec});
    }
    Poly product = Poly::constant(field, 1);
    for (const auto& p : out.slots()) product = product * p;
    out.delta = field->div(target.leading(), product.leading());
    if (product.scaled(out.delta) != target) throw std::logic_error("factorization does not multiply back to x^m - 1");
    return out;
}

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::uint64_t q, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> coset;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            coset.push_back(j);
            j = static_cast<std::size_t>((static_cast<unsigned __int128>(j) * q) % n);
        }
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

std::size_t multiplicative_order_mod(std::uint64_t q, std::size_t n) {
    if (n == 0 || std::gcd<std::uint64_t>(q, n) != 1) throw Error(ErrorKind::NotCoprime, "q is not a unit mod n");
    if (n == 1) return 1;
    std::size_t k = 1;
    std::uint64_t v = q % n;
    while (v != 1) {
        v = (v * q) % n;
        ++k;
    }
    return k;
}

}  // namespace qckit

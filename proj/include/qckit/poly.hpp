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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qckit/galois.hpp"

namespace qckit {

/// Dense univariate polynomial over a field handle. Coefficients ascend by
/// degree with trailing zeros stripped; the zero polynomial has no coefficients
/// and no degree.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
    /// x^n - 1
    static Poly cyclic_modulus(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    const Field& ring() const noexcept { return *field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws BadParameters for the zero polynomial, which has no degree.
    std::size_t degree() const;
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Poly monic() const;
    Poly scaled(Elem c) const;
    Elem eval(Elem point) const;
    /// Evaluates at a point of an extension of this polynomial's field.
    Elem eval_in(const Field& ext, Elem point) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) noexcept;

    std::string to_string(char var = 'x') const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

DivMod divmod(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

struct Egcd {
    Poly d;
    Poly u;
    Poly v;
};

/// (d, u, v) with u f + v g = d and d monic.
Egcd egcd(const Poly& f, const Poly& g);

/// Inverse of f modulo m, throws DivisionByZero when gcd(f, m) != 1.
Poly inverse_mod(const Poly& f, const Poly& m);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m);

/// Monic reciprocal f(0)^-1 x^deg f(1/x); throws ZeroConstantTerm.
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);

/// f(-x)
Poly negate_var(const Poly& f);
/// f(lambda x); throws ZeroScalar.
Poly scale_var(const Poly& f, Elem lambda);
/// f(x^a) mod x^n - 1; throws MultiplierNotCoprime unless gcd(a, n) = 1.
Poly power_var(const Poly& f, std::size_t a, std::size_t n);

/// Irreducibility by the Ben-Or gcd test: gcd(f, x^(q^i) - x) = 1 for i <= deg/2.
bool is_irreducible(const Poly& f);
/// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible_by_trial_division(const Poly& f);

/// Lexicographically smallest monic irreducible of the given degree, with
/// coefficients compared from the constant term upwards.
Poly first_irreducible(const FieldPtr& field, std::size_t degree);

/// Ordering used for factor lists: degree, then coefficients from the leading term down.
bool poly_less(const Poly& a, const Poly& b);

/// Monic irreducible factors of a squarefree polynomial, sorted by poly_less.
/// Distinct-degree splitting followed by Berlekamp splitting of each part.
std::vector<Poly> factor_squarefree(const Poly& f);

struct ReciprocalPair {
    Poly h;
    Poly h_star;
};

/// x^m - 1 = delta * prod g_i * prod h_j h_j^*.
struct FactorClassification {
    FieldPtr field;
    std::size_t m = 0;
    Elem delta = 1;
    std::vector<Poly> self_reciprocal;
    std::vector<ReciprocalPair> pairs;

    std::size_t s() const noexcept { return self_reciprocal.size(); }
    std::size_t t() const noexcept { return pairs.size(); }
    std::size_t r() const noexcept { return s() + 2 * t(); }
    /// All factors in slot order g_1..g_s, h_1, h_1^*, ..., h_t, h_t^*.
    std::vector<Poly> slots() const;
};

/// Throws NotCoprime unless gcd(m, q) = 1.
FactorClassification factor_cyclic_modulus(const FieldPtr& field, std::size_t m);

/// q-cyclotomic cosets {i q^k mod n}, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::uint64_t q, std::size_t n);

/// Smallest k >= 1 with q^k = 1 mod n.
std::size_t multiplicative_order_mod(std::uint64_t q, std::size_t n);

}  // namespace qckit

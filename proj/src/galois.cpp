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

#include "qckit/galois.hpp"

#include <numeric>

#include "qckit/poly.hpp"

namespace qckit {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b))
        throw Error(ErrorKind::FieldMismatch,
                    "field mismatch: " + (a ? a->describe() : "null") + " vs " + (b ? b->describe() : "null"));
}

Field::Field(Passkey, std::uint32_t p) : p_(p), size_(p), degree_(1), base_size_(p) { build_tables(); }

Field::Field(Passkey, FieldPtr base, std::vector<Elem> modulus, std::uint64_t bound, bool constituent)
    : p_(base->characteristic()),
      degree_(modulus.size() - 1),
      base_size_(base->size()),
      base_(std::move(base)),
      modulus_(std::move(modulus)),
      constituent_(constituent) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        q *= base_size_;
        if (q > bound)
            throw Error(ErrorKind::BoundExceeded, "field of size " + std::to_string(base_size_) + "^" +
                                                      std::to_string(degree_) + " exceeds bound " +
                                                      std::to_string(bound));
    }
    size_ = static_cast<std::uint32_t>(q);
    build_tables();
}

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return std::make_shared<const Field>(Passkey{}, p);
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus, std::uint64_t bound) {
    if (!base) throw Error(ErrorKind::BadParameters, "extension of a null field");
    Poly f(base, modulus);
    if (f.is_zero() || f.degree() < 1 || !f.is_monic())
        throw Error(ErrorKind::NotIrreducible, "modulus must be monic of degree >= 1");
    if (!is_irreducible(f))
        throw Error(ErrorKind::NotIrreducible, "modulus " + f.to_string() + " is reducible over " + base->describe());
    return std::make_shared<const Field>(Passkey{}, std::move(base), f.coeffs(), bound, false);
}

FieldPtr Field::constituent(FieldPtr base, std::vector<Elem> modulus, std::uint64_t bound) {
    if (!base) throw Error(ErrorKind::BadParameters, "constituent over a null field");
    Poly f(base, modulus);
    if (f.is_zero() || f.degree() < 1 || !f.is_monic())
        throw Error(ErrorKind::NotIrreducible, "modulus must be monic of degree >= 1");
    if (!is_irreducible(f))
        throw Error(ErrorKind::NotIrreducible, "modulus " + f.to_string('Y') + " is reducible");
    const std::size_t d = f.degree();
    const std::uint64_t q = base->size();
    auto field = std::make_shared<Field>(Passkey{}, base, f.coeffs(), bound, true);
    if (d % 2 == 0 && f.coeff(0) != 0 && is_self_reciprocal(f)) {
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < d / 2; ++i) e *= q;
        field->conj_exp_ = e;
    }
    return field;
}

std::size_t Field::absolute_degree() const noexcept {
    return base_ ? degree_ * base_->absolute_degree() : 1;
}

Elem Field::add(Elem a, Elem b) const {
    if (!base_) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Elem out = 0, scale = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        out += base_->add(a % base_size_, b % base_size_) * scale;
        a /= base_size_;
        b /= base_size_;
        scale *= base_size_;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    if (!base_) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Elem out = 0, scale = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        out += base_->neg(a % base_size_) * scale;
        a /= base_size_;
        scale *= base_size_;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t s = log_[a] + log_[b];
    return exp_[s >= size_ - 1 ? s - (size_ - 1) : s];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = size_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Elem Field::from_int(std::int64_t n) const noexcept {
    const std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "logarithm of zero");
    return log_[a];
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
    const std::uint64_t n = size_ - 1;
    return n / std::gcd<std::uint64_t>(n, log_[a]);
}

std::vector<Elem> Field::coefficients(Elem a) const {
    std::vector<Elem> c(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
        c[i] = a % base_size_;
        a /= base_size_;
    }
    return c;
}

Elem Field::from_coefficients(std::span<const Elem> c) const {
    if (c.size() > degree_) throw Error(ErrorKind::ShapeMismatch, "too many coordinates for " + describe());
    Elem out = 0, scale = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= base_size_) throw Error(ErrorKind::FieldMismatch, "coordinate out of range");
        out += c[i] * scale;
        scale *= base_size_;
    }
    return out;
}

Elem Field::reduce(std::span<const Elem> poly) const {
    if (!base_) {
        // F_p viewed as F_p[x]/(x): only the constant term survives.
        return poly.empty() ? 0 : poly[0] % p_;
    }
    std::vector<Elem> r(poly.begin(), poly.end());
    const Field& b = *base_;
    for (std::size_t i = r.size(); i-- > degree_;) {
        const Elem c = r[i];
        if (c == 0) continue;
        for (std::size_t k = 0; k <= degree_; ++k) r[i - degree_ + k] = b.sub(r[i - degree_ + k], b.mul(c, modulus_[k]));
    }
    r.resize(degree_, 0);
    return from_coefficients(r);
}

Elem Field::root() const {
    if (!base_) return 1;
    const Elem x[2] = {0, 1};
    return reduce(x);
}

Elem Field::slow_mul(Elem a, Elem b) const {
    if (!base_) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    const Field& f = *base_;
    std::vector<Elem> prod(2 * degree_ - 1, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < degree_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(ca[i], cb[j]));
    }
    return reduce(prod);
}

Elem Field::slow_pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e > 0) {
        if (e & 1) result = slow_mul(result, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return result;
}

void Field::build_tables() {
    const std::uint64_t n = size_ - 1;
    const auto factors = prime_factors(n);
    generator_ = 0;
    for (Elem g = 1; g < size_; ++g) {
        bool primitive = true;
        for (auto r : factors)
            if (slow_pow(g, n / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0) throw Error(ErrorKind::NotIrreducible, "no primitive element in " + describe());
    exp_.assign(n, 0);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        exp_[k] = x;
        log_[x] = static_cast<std::uint32_t>(k);
        x = slow_mul(x, generator_);
    }
}

bool Field::operator==(const Field& other) const noexcept {
    if (this == &other) return true;
    if (p_ != other.p_ || size_ != other.size_ || degree_ != other.degree_ || modulus_ != other.modulus_) return false;
    if (!base_ || !other.base_) return !base_ && !other.base_;
    return *base_ == *other.base_;
}

std::string Field::describe() const {
    if (!base_) return "GF(" + std::to_string(p_) + ")";
    Poly f(base_, modulus_);
    return base_->describe() + "[" + (constituent_ ? "Y" : "x") + "]/(" + f.to_string(constituent_ ? 'Y' : 'x') + ")";
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint32_t e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), e};
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint64_t bound) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1) throw Error(ErrorKind::BadParameters, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > bound) throw Error(ErrorKind::BoundExceeded, std::to_string(p) + "^" + std::to_string(e) + " exceeds bound");
    }
    auto fp = Field::prime(p);
    if (e == 1) return fp;
    const Poly modulus = first_irreducible(fp, e);
    return Field::extension(fp, modulus.coeffs(), bound);
}

std::optional<Elem> find_sqrt_minus_one(const Field& field) {
    const Elem minus_one = field.neg(1);
    for (Elem a = 0; a < field.size(); ++a)
        if (field.mul(a, a) == minus_one) return a;
    return std::nullopt;
}

}  // namespace qckit

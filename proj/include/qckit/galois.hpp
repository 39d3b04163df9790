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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qckit/error.hpp"

namespace qckit {

/// Field element code. In an extension K = B[x]/(f) of degree d the element
/// c_0 + c_1 x + ... + c_{d-1} x^{d-1} is encoded as sum c_i |B|^i, where c_i are
/// the codes of B. A subfield element therefore has the same code in every field
/// of its tower, so embeddings are the identity on codes.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n) noexcept;

/**
 * Finite field, immutable after construction.
 *
 * A field is either a prime field F_p or a simple extension B[x]/(f) of another
 * field B by a monic irreducible f. Multiplication runs on log/antilog tables
 * built from the smallest primitive element, so every field is bounded by
 * kDefaultFieldBound elements.
 *
 * Constituent fields F_q[Y]/(g) of a self-reciprocal g of even degree d carry
 * the conjugation r -> r^(q^(d/2)), which is the image of Y -> Y^-1. All
 * other fields use the identity conjugation.
 */
class Field {
    struct Passkey {};

public:
    /// Prime field F_p.
    static FieldPtr prime(std::uint32_t p);
    /// base[x]/(modulus); modulus holds ascending base codes and must be monic irreducible.
    static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus,
                              std::uint64_t bound = kDefaultFieldBound);
    /// base[Y]/(modulus) with the conjugation attached when modulus is self-reciprocal of even degree.
    static FieldPtr constituent(FieldPtr base, std::vector<Elem> modulus,
                                std::uint64_t bound = kDefaultFieldBound);

    Field(Passkey, std::uint32_t p);
    Field(Passkey, FieldPtr base, std::vector<Elem> modulus, std::uint64_t bound, bool constituent);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t size() const noexcept { return size_; }
    /// Degree over the immediate base (1 for a prime field).
    std::size_t degree() const noexcept { return degree_; }
    /// Degree over F_p.
    std::size_t absolute_degree() const noexcept;
    bool is_prime_field() const noexcept { return base_ == nullptr; }
    const FieldPtr& base() const noexcept { return base_; }
    /// Ascending base codes, monic, length degree()+1. Empty for a prime field.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    std::uint64_t conjugation_exponent() const noexcept { return conj_exp_; }
    bool is_constituent() const noexcept { return constituent_; }

    bool contains(Elem a) const noexcept { return a < size_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem conjugate(Elem a) const { return pow(a, conj_exp_); }
    /// Integer n reduced into the prime subfield.
    Elem from_int(std::int64_t n) const noexcept;

    /// Smallest primitive element by code.
    Elem generator() const noexcept { return generator_; }
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t k) const noexcept { return exp_[k % (size_ - 1)]; }
    std::uint64_t multiplicative_order(Elem a) const;

    /// Coordinates over the immediate base, length degree().
    std::vector<Elem> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const Elem> c) const;
    /// Class of a polynomial over the base (ascending codes) modulo the modulus.
    Elem reduce(std::span<const Elem> poly) const;
    /// Class of the adjoined root x (for prime fields: 0 is meaningless, returns 1).
    Elem root() const;

    /// Structural equality (conjugation is not part of the field).
    bool operator==(const Field& other) const noexcept;
    std::string describe() const;

private:
    Elem slow_mul(Elem a, Elem b) const;
    Elem slow_pow(Elem a, std::uint64_t e) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t size_ = 0;
    std::size_t degree_ = 1;
    std::uint32_t base_size_ = 0;
    FieldPtr base_;
    std::vector<Elem> modulus_;
    std::uint64_t conj_exp_ = 1;
    bool constituent_ = false;
    Elem generator_ = 1;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

/// Throws FieldMismatch unless a and b describe the same field.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// F_{p^e} with the lexicographically smallest monic irreducible modulus,
/// coefficients compared from the constant term upwards.
FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint64_t bound = kDefaultFieldBound);

/// Splits q into (p, e) or throws NotPrime.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

/// Some gamma with gamma^2 + 1 = 0 by exhaustive search, smallest code first.
std::optional<Elem> find_sqrt_minus_one(const Field& field);

}  // namespace qckit

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
#include <optional>
#include <vector>

#include "qckit/linear_code.hpp"
#include "qckit/poly.hpp"

namespace qckit {

/// Ideal <g> of field[x]/(x^n - 1) with g monic and g | x^n - 1.
class CyclicCode {
public:
    /// Requires gcd(n, char) = 1.
    static CyclicCode make(FieldPtr field, std::size_t n, const Poly& g);
    /// Same checks without the coprimality requirement.
    static CyclicCode make_repeated_root(FieldPtr field, std::size_t n, const Poly& g);
    /// Recovers <g> from a shift-invariant linear code, or none if c is not cyclic.
    static std::optional<CyclicCode> from_linear(const LinearCode& c);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return n_ - g_.degree(); }
    const Poly& generator_poly() const noexcept { return g_; }
    /// h = (x^n - 1) / g.
    Poly check_poly() const;
    bool simple_roots() const noexcept;
    LinearCode to_linear() const;

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) noexcept;

private:
    CyclicCode(FieldPtr field, std::size_t n, Poly g) : field_(std::move(field)), n_(n), g_(std::move(g)) {}

    FieldPtr field_;
    std::size_t n_;
    Poly g_;
};

/// <h*>, checked against the kernel of the expanded generator matrix.
CyclicCode cyclic_dual(const CyclicCode& c);

/// Smallest extension of base containing the n-th roots of unity, with
/// alpha = beta^(unit (Q-1)/n) for the smallest primitive element beta.
struct SplittingField {
    FieldPtr field;
    Elem alpha;
};
SplittingField splitting_field(const FieldPtr& base, std::size_t n, std::size_t unit = 1);

/// {i : g(alpha^i) = 0}; unit selects the alternative root alpha^unit.
std::vector<std::size_t> defining_set(const CyclicCode& c, std::size_t unit = 1);

/// Coordinate map i -> a i mod n.
MonomialMap multiplier_map(std::size_t n, std::size_t a);
/// <gcd(x^n - 1, g(x^a))>, cross-checked against the defining-set route.
CyclicCode multiplier_apply(const CyclicCode& c, std::size_t a);
/// prod over j in a^-1 T of (x - alpha^j).
CyclicCode multiplier_apply_by_defining_set(const CyclicCode& c, std::size_t a, std::size_t unit = 1);
/// Smallest a in (Z/n)^* with multiplier_apply(c, a) = d.
std::optional<std::size_t> multiplier_equivalent(const CyclicCode& c, const CyclicCode& d);

/// A code together with a verified monomial map onto it.
struct WitnessedCode {
    CyclicCode code;
    MonomialMap witness;
};

/// <g*> with the coordinate map i -> -i mod n.
WitnessedCode reciprocal_code(const CyclicCode& c);
/// <g(lambda x)> with diag[i] = lambda^i; lambda^n must be 1.
WitnessedCode scale_code(const CyclicCode& c, Elem lambda);
/// Map taking <g> onto <f>^perp when g f = x^n - 1.
MonomialMap cofactor_dual_equivalence(const Poly& g, const Poly& f, std::size_t n);

enum class IsodualVariant { A, B };

struct IsodualCyclic {
    CyclicCode code;
    /// Takes code onto its Euclidean dual.
    MonomialMap witness;
    bool self_dual;
};

/**
 * Length-2s code <(x - 1) f(-x)> (variant A) or <(x + 1) f(x)> (variant B),
 * where x^s - 1 = (x - 1) f. Requires s odd and gcd(s, q) = 1. In
 * characteristic 2 the two variants coincide.
 */
IsodualCyclic construct_isodual_cyclic(const FieldPtr& field, std::size_t s, IsodualVariant variant);

}  // namespace qckit

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

#include "qckit/cyclic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qckit {

namespace {

std::size_t inverse_mod_n(std::size_t a, std::size_t n) {
    for (std::size_t b = 1; b < n; ++b)
        if ((a * b) % n == 1) return b;
    return n == 1 ? 0 : throw Error(ErrorKind::MultiplierNotCoprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
}

std::uint64_t splitting_field_size(std::uint64_t q, std::size_t n) {
    std::uint64_t size = 1;
    for (std::size_t k = multiplicative_order_mod(q, n); k > 0; --k) {
        size *= q;
        if (size > kDefaultFieldBound) break;
    }
    return size;
}

void check_generator(const FieldPtr& field, std::size_t n, const Poly& g) {
    if (n == 0) throw Error(ErrorKind::BadParameters, "cyclic code of length 0");
    require_same_field(field, g.field());
    if (!g.is_monic()) throw Error(ErrorKind::BadParameters, "generator polynomial must be monic");
    if (!(Poly::cyclic_modulus(field, n) % g).is_zero())
        throw Error(ErrorKind::NotDivisor, g.to_string() + " does not divide x^" + std::to_string(n) + " - 1");
}

void verify_image(const LinearCode& from, const MonomialMap& map, const LinearCode& to, const char* what) {
    if (!(apply_monomial(from, map) == to)) throw std::logic_error(std::string("unverified witness: ") + what);
}

}  // namespace

CyclicCode CyclicCode::make(FieldPtr field, std::size_t n, const Poly& g) {
    if (n % field->characteristic() == 0)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(field->size()) + ") != 1");
    check_generator(field, n, g);
    return CyclicCode(std::move(field), n, g);
}

CyclicCode CyclicCode::make_repeated_root(FieldPtr field, std::size_t n, const Poly& g) {
    check_generator(field, n, g);
    return CyclicCode(std::move(field), n, g);
}

std::optional<CyclicCode> CyclicCode::from_linear(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n == 0 || !is_shift_invariant(c, 1)) return std::nullopt;
    Poly g = Poly::cyclic_modulus(c.field(), n);
    for (const auto& row : c.rows()) g = gcd(g, Poly(c.field(), row));
    auto out = make_repeated_root(c.field(), n, g);
    if (!(out.to_linear() == c)) throw std::logic_error("cyclic generator recovery failed");
    return out;
}

Poly CyclicCode::check_poly() const { return Poly::cyclic_modulus(field_, n_) / g_; }

bool CyclicCode::simple_roots() const noexcept { return n_ % field_->characteristic() != 0; }

LinearCode CyclicCode::to_linear() const {
    const std::size_t d = g_.degree();
    Matrix m(n_ - d, n_);
    for (std::size_t i = 0; i < n_ - d; ++i)
        for (std::size_t j = 0; j <= d; ++j) m(i, i + j) = g_.coeff(j);
    return LinearCode::from_matrix(field_, std::move(m));
}

bool operator==(const CyclicCode& a, const CyclicCode& b) noexcept {
    return a.n_ == b.n_ && a.g_ == b.g_;
}

CyclicCode cyclic_dual(const CyclicCode& c) {
    auto d = CyclicCode::make_repeated_root(c.field(), c.length(), reciprocal(c.check_poly()));
    if (!(d.to_linear() == euclidean_dual(c.to_linear())))
        throw Error(ErrorKind::DualMismatch, "cyclic dual disagrees with the kernel dual");
    return d;
}

SplittingField splitting_field(const FieldPtr& base, std::size_t n, std::size_t unit) {
    if (n == 0 || n % base->characteristic() == 0)
        throw Error(ErrorKind::NotCoprime, "no simple n-th roots of unity for n = " + std::to_string(n));
    if (std::gcd(unit, n) != 1) throw Error(ErrorKind::MultiplierNotCoprime, "root selector must be a unit mod n");

    static std::mutex mu;
    static std::map<std::tuple<const Field*, std::size_t>, std::pair<FieldPtr, FieldPtr>> cache;
    const std::size_t k = multiplicative_order_mod(base->size(), n);
    FieldPtr ext;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({base.get(), k});
        if (it != cache.end()) ext = it->second.second;
    }
    if (!ext) {
        ext = k == 1 ? base : Field::extension(base, first_irreducible(base, k).coeffs());
        std::lock_guard lock(mu);
        // The base pointer is kept alive by the entry so the key stays valid.
        cache.emplace(std::make_tuple(base.get(), k), std::make_pair(base, ext));
    }
    const std::uint64_t order = ext->size() - 1;
    const Elem alpha = ext->pow(ext->generator(), (order / n) * (unit % n));
    return {ext, alpha};
}

std::vector<std::size_t> defining_set(const CyclicCode& c, std::size_t unit) {
    const auto sf = splitting_field(c.field(), c.length(), unit);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.length(); ++i)
        if (c.generator_poly().eval_in(*sf.field, sf.field->pow(sf.alpha, i)) == 0) out.push_back(i);
    return out;
}

MonomialMap multiplier_map(std::size_t n, std::size_t a) {
    if (std::gcd(a, n) != 1) throw Error(ErrorKind::MultiplierNotCoprime, "gcd(a, n) != 1");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (a * i) % n;
    return MonomialMap::permutation(std::move(perm));
}

CyclicCode multiplier_apply_by_defining_set(const CyclicCode& c, std::size_t a, std::size_t unit) {
    const std::size_t n = c.length();
    if (std::gcd(a, n) != 1) throw Error(ErrorKind::MultiplierNotCoprime, "gcd(a, n) != 1");
    const auto sf = splitting_field(c.field(), n, unit);
    const std::size_t ainv = inverse_mod_n(a % n, n);
    const Field& ext = *sf.field;
    Poly prod = Poly::constant(sf.field, 1);
    for (std::size_t t : defining_set(c, unit)) {
        const Elem root = ext.pow(sf.alpha, (ainv * t) % n);
        prod = prod * Poly(sf.field, {ext.neg(root), 1});
    }
    for (Elem e : prod.coeffs())
        if (!c.field()->contains(e)) throw std::logic_error("root product left the base field");
    return CyclicCode::make(c.field(), n, Poly(c.field(), prod.coeffs()));
}

CyclicCode multiplier_apply(const CyclicCode& c, std::size_t a) {
    const std::size_t n = c.length();
    if (std::gcd(a, n) != 1) throw Error(ErrorKind::MultiplierNotCoprime, "gcd(a, n) != 1");
    if (n == 1) return c;
    const Poly image = power_var(c.generator_poly(), a % n, n);
    auto out = CyclicCode::make_repeated_root(c.field(), n, gcd(Poly::cyclic_modulus(c.field(), n), image));
    if (c.simple_roots() && splitting_field_size(c.field()->size(), n) <= kEnumerationLimit) {
        // Large splitting fields are skipped: tabulating them costs more than the check is worth.
        if (!(multiplier_apply_by_defining_set(c, a) == out)) throw std::logic_error("multiplier routes disagree");
    }
    return out;
}

std::optional<std::size_t> multiplier_equivalent(const CyclicCode& c, const CyclicCode& d) {
    require_same_field(c.field(), d.field());
    if (c.length() != d.length()) throw Error(ErrorKind::LengthMismatch, "cyclic codes of different lengths");
    if (c.dimension() != d.dimension()) return std::nullopt;
    const std::size_t n = c.length();
    for (std::size_t a = 1; a <= std::max<std::size_t>(n - 1, 1); ++a)
        if (std::gcd(a, n) == 1 && multiplier_apply(c, a) == d) return a;
    return std::nullopt;
}

WitnessedCode reciprocal_code(const CyclicCode& c) {
    const std::size_t n = c.length();
    auto image = CyclicCode::make_repeated_root(c.field(), n, reciprocal(c.generator_poly()));
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (n - i) % n;
    auto w = MonomialMap::permutation(std::move(perm));
    verify_image(c.to_linear(), w, image.to_linear(), "reciprocal");
    return {image, w};
}

WitnessedCode scale_code(const CyclicCode& c, Elem lambda) {
    const Field& f = *c.field();
    const std::size_t n = c.length();
    if (!f.contains(lambda) || lambda == 0 || f.pow(lambda, n) != 1)
        throw Error(ErrorKind::NotRootOfUnity, "lambda^n != 1");
    auto image = CyclicCode::make_repeated_root(c.field(), n, scale_var(c.generator_poly(), lambda).monic());
    std::vector<Elem> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = f.pow(lambda, i);
    auto w = MonomialMap::diagonal(std::move(diag));
    verify_image(c.to_linear(), w, image.to_linear(), "scaling");
    return {image, w};
}

MonomialMap cofactor_dual_equivalence(const Poly& g, const Poly& f, std::size_t n) {
    require_same_field(g.field(), f.field());
    if (g.is_zero() || f.is_zero() || !(g * f == Poly::cyclic_modulus(g.field(), n)))
        throw Error(ErrorKind::NotCofactors, "g f != x^n - 1");
    auto cg = CyclicCode::make_repeated_root(g.field(), n, g.monic());
    auto cf = CyclicCode::make_repeated_root(f.field(), n, f.monic());
    auto w = reciprocal_code(cg).witness;
    verify_image(cg.to_linear(), w, euclidean_dual(cf.to_linear()), "cofactor dual");
    return w;
}

IsodualCyclic construct_isodual_cyclic(const FieldPtr& field, std::size_t s, IsodualVariant variant) {
    const Field& k = *field;
    if (s % 2 == 0) throw Error(ErrorKind::BadParameters, "s must be odd");
    if (s % k.characteristic() == 0) throw Error(ErrorKind::BadParameters, "gcd(s, q) != 1");
    const std::size_t n = 2 * s;
    const Elem minus_one = k.neg(1);

    Poly f = Poly::constant(field, 1);
    for (std::size_t i = 1; i < s; ++i) f = f + Poly::monomial(field, 1, i);
    const Poly g = variant == IsodualVariant::A ? Poly(field, {minus_one, 1}) * negate_var(f)
                                                : Poly(field, {1, 1}) * f;
    auto code = CyclicCode::make_repeated_root(field, n, g.monic());

    std::vector<Elem> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = i % 2 ? minus_one : 1;
    auto w = reciprocal_code(code).witness.then(MonomialMap::diagonal(std::move(signs)), k);

    const auto lin = code.to_linear();
    const auto dual = euclidean_dual(lin);
    verify_image(lin, w, dual, "isodual cyclic");
    return {code, w, lin == dual};
}

}  // namespace qckit

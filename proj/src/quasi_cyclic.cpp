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

#include "qckit/quasi_cyclic.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qckit {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void require_coprime(const Field& f, std::size_t m) {
    if (m == 0) throw Error(ErrorKind::BadParameters, "m must be positive");
    if (m % f.characteristic() == 0)
        throw Error(ErrorKind::NotCoprime, "gcd(" + str(m) + ", " + str(f.size()) + ") != 1");
}

MonomialMap block_permutation(const std::vector<std::size_t>& tau, std::size_t m) {
    const std::size_t l = tau.size();
    std::vector<std::size_t> perm(l * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < l; ++j) perm[j + i * l] = tau[j] + i * l;
    return MonomialMap::permutation(std::move(perm));
}

bool maps_all(const std::vector<LinearCode>& from, const std::vector<LinearCode>& to, const MonomialMap& tau) {
    for (std::size_t k = 0; k < from.size(); ++k)
        if (!(apply_monomial(from[k], tau) == to[k])) return false;
    return true;
}

std::optional<std::vector<std::size_t>> common_permutation(const std::vector<LinearCode>& from,
                                                           const std::vector<LinearCode>& to,
                                                           const std::vector<ComponentFinding>& findings,
                                                           std::size_t l) {
    for (const auto& f : findings)
        if (f.witness && maps_all(from, to, *f.witness)) return f.witness->perm;
    std::vector<std::size_t> tau(l);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        if (maps_all(from, to, MonomialMap::permutation(tau))) return tau;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return std::nullopt;
}

}  // namespace

QuasiCyclicCode QuasiCyclicCode::make(std::size_t l, std::size_t m, LinearCode code) {
    if (l == 0) throw Error(ErrorKind::BadParameters, "index must be positive");
    require_coprime(*code.field(), m);
    if (code.length() != l * m)
        throw Error(ErrorKind::LengthMismatch, "code length " + str(code.length()) + " != l m = " + str(l * m));
    if (!is_shift_invariant(code, l)) throw Error(ErrorKind::NotShiftInvariant, "row space is not invariant under T^" + str(l));
    return QuasiCyclicCode(l, m, std::move(code));
}

QuasiCyclicCode QuasiCyclicCode::from_rows(FieldPtr field, std::size_t l, std::size_t m,
                                           const std::vector<std::vector<Elem>>& rows) {
    return make(l, m, LinearCode::from_rows(std::move(field), l * m, rows));
}

std::size_t QuasiCyclicCode::minimal_index() const {
    const std::size_t n = length();
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0 && is_shift_invariant(code_, d)) return d;
    return n;
}

std::vector<Poly> phi(const FieldPtr& field, std::span<const Elem> v, std::size_t l, std::size_t m) {
    if (v.size() != l * m) throw Error(ErrorKind::LengthMismatch, "vector length " + str(v.size()) + " != l m");
    std::vector<Poly> out;
    out.reserve(l);
    for (std::size_t j = 0; j < l; ++j) {
        std::vector<Elem> c(m);
        for (std::size_t i = 0; i < m; ++i) c[i] = v[j + i * l];
        out.emplace_back(field, std::move(c));
    }
    return out;
}

std::vector<Elem> phi_inv(std::span<const Poly> c, std::size_t l, std::size_t m) {
    if (c.size() != l) throw Error(ErrorKind::LengthMismatch, "expected " + str(l) + " slot polynomials");
    std::vector<Elem> v(l * m, 0);
    for (std::size_t j = 0; j < l; ++j) {
        if (c[j].coeffs().size() > m) throw Error(ErrorKind::LengthMismatch, "slot polynomial of degree >= m");
        for (std::size_t i = 0; i < m; ++i) v[j + i * l] = c[j].coeff(i);
    }
    return v;
}

MonomialMap phi_coordinates(std::size_t l, std::size_t m) {
    std::vector<std::size_t> perm(l * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < l; ++j) perm[j + i * l] = i + j * m;
    return MonomialMap::permutation(std::move(perm));
}

std::shared_ptr<const QcRing> qc_ring(const FieldPtr& field, std::size_t m) {
    require_coprime(*field, m);
    static std::mutex mu;
    // Entries keep their field alive so the address key cannot be reused.
    static std::map<std::pair<const Field*, std::size_t>, std::shared_ptr<const QcRing>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({field.get(), m});
        if (it != cache.end()) return it->second;
    }
    auto ring = std::make_shared<QcRing>();
    ring->field = field;
    ring->m = m;
    ring->classification = factor_cyclic_modulus(field, m);
    ring->factors = ring->classification.slots();
    const Poly modulus = Poly::cyclic_modulus(field, m);
    const std::size_t s = ring->classification.s();
    for (std::size_t k = 0; k < ring->factors.size(); ++k) {
        const Poly& f = ring->factors[k];
        ring->local_fields.push_back(Field::constituent(field, f.coeffs()));
        const Poly cof = modulus / f;
        ring->idempotents.push_back(inverse_mod(cof % f, f) * cof % modulus);
        if (k < s) {
            ring->kinds.push_back(SlotKind::self_reciprocal);
            ring->partner.push_back(k);
        } else if ((k - s) % 2 == 0) {
            ring->kinds.push_back(SlotKind::primed);
            ring->partner.push_back(k + 1);
        } else {
            ring->kinds.push_back(SlotKind::double_primed);
            ring->partner.push_back(k - 1);
        }
    }
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(field.get(), m), std::move(ring)).first->second;
}

LinearCode transport(const LinearCode& c, const FieldPtr& target) {
    const Field& src = *c.field();
    const Field& dst = *target;
    if (!src.base() || !dst.base() || !same_field(src.base(), dst.base()) || src.degree() != dst.degree())
        throw Error(ErrorKind::FieldMismatch, "transport needs two local fields of equal degree over one base");
    const Elem z = dst.inv(dst.root());
    auto rows = c.rows();
    for (auto& row : rows)
        for (auto& a : row) {
            const auto coeffs = src.coefficients(a);
            Elem acc = 0;
            for (std::size_t k = coeffs.size(); k-- > 0;) acc = dst.add(dst.mul(acc, z), coeffs[k]);
            a = acc;
        }
    return LinearCode::from_rows(target, c.length(), rows);
}

ConstituentDecomposition crt_decompose(const QuasiCyclicCode& c) {
    ConstituentDecomposition d;
    d.ring = qc_ring(c.field(), c.co_index());
    d.l = c.index();
    const std::size_t slots = d.ring->slot_count();
    std::vector<std::vector<std::vector<Elem>>> rows(slots);
    for (const auto& row : c.code().rows()) {
        const auto polys = phi(c.field(), row, c.index(), c.co_index());
        for (std::size_t k = 0; k < slots; ++k) {
            const Field& K = *d.ring->local_fields[k];
            std::vector<Elem> v(d.l);
            for (std::size_t j = 0; j < d.l; ++j) v[j] = K.reduce(polys[j].coeffs());
            rows[k].push_back(std::move(v));
        }
    }
    for (std::size_t k = 0; k < slots; ++k)
        d.components.push_back(LinearCode::from_rows(d.ring->local_fields[k], d.l, rows[k]));
    return d;
}

QuasiCyclicCode crt_reconstruct(const ConstituentDecomposition& d) {
    if (!d.ring) throw Error(ErrorKind::ShapeMismatch, "decomposition without a ring");
    const QcRing& ring = *d.ring;
    const std::size_t l = d.l, m = ring.m;
    if (d.components.size() != ring.slot_count())
        throw Error(ErrorKind::ShapeMismatch, "expected " + str(ring.slot_count()) + " constituents");
    const Poly modulus = Poly::cyclic_modulus(ring.field, m);
    std::vector<std::vector<Elem>> rows;
    for (std::size_t k = 0; k < ring.slot_count(); ++k) {
        const LinearCode& comp = d.components[k];
        if (comp.length() != l || !same_field(comp.field(), ring.local_fields[k]))
            throw Error(ErrorKind::ShapeMismatch, "constituent " + str(k) + " has the wrong length or field");
        const Field& K = *ring.local_fields[k];
        const Elem y = K.root();
        for (const auto& v : comp.rows()) {
            Elem scale = 1;
            for (std::size_t t = 0; t < K.degree(); ++t, scale = K.mul(scale, y)) {
                std::vector<Poly> lifted;
                for (std::size_t j = 0; j < l; ++j)
                    lifted.push_back(Poly(ring.field, K.coefficients(K.mul(scale, v[j]))) * ring.idempotents[k] % modulus);
                rows.push_back(phi_inv(lifted, l, m));
            }
        }
    }
    return QuasiCyclicCode::make(l, m, LinearCode::from_rows(ring.field, l * m, rows));
}

ConstituentDecomposition dual_constituents(const ConstituentDecomposition& d) {
    ConstituentDecomposition out{d.ring, d.l, {}};
    const QcRing& ring = *d.ring;
    for (std::size_t k = 0; k < ring.slot_count(); ++k) {
        if (ring.kinds[k] == SlotKind::self_reciprocal)
            out.components.push_back(hermitian_dual(d.components[k]));
        else
            out.components.push_back(euclidean_dual(transport(d.components[ring.partner[k]], ring.local_fields[k])));
    }
    return out;
}

QuasiCyclicCode qc_dual(const QuasiCyclicCode& c) {
    auto direct = QuasiCyclicCode::make(c.index(), c.co_index(), euclidean_dual(c.code()));
    auto via = crt_reconstruct(dual_constituents(crt_decompose(c)));
    if (!(direct == via)) throw Error(ErrorKind::DualMismatch, "kernel dual and constituent dual differ");
    return direct;
}

SelfDualReport selfdual_report(const QuasiCyclicCode& c) {
    const auto d = crt_decompose(c);
    const auto dual = dual_constituents(d);
    SelfDualReport r;
    r.componentwise = d.components == dual.components;
    r.direct = c.code() == euclidean_dual(c.code());
    return r;
}

bool is_selfdual(const QuasiCyclicCode& c) {
    const auto r = selfdual_report(c);
    if (r.componentwise != r.direct) throw std::logic_error("componentwise self-duality disagrees with C = C^perp");
    return r.direct;
}

bool selfdual_exists(std::uint64_t q, std::size_t l) {
    const auto [p, e] = prime_power(q);
    const bool by_congruence = l % 2 == 0 && (p == 2 || p % 4 == 1 || (p % 4 == 3 && e % 2 == 0));
    const bool by_search = l % 2 == 0 && find_sqrt_minus_one(*make_field(p, e)).has_value();
    if (by_congruence != by_search) throw std::logic_error("self-dual existence formulations disagree");
    return by_search;
}

QuasiCyclicCode construct_selfdual_qc(const FieldPtr& field, std::size_t l, std::size_t m) {
    if (l == 0 || l % 2 != 0) throw Error(ErrorKind::BadParameters, "l must be even");
    require_coprime(*field, m);
    const auto gamma = find_sqrt_minus_one(*field);
    if (!gamma) throw Error(ErrorKind::NoGamma, "no gamma with gamma^2 + 1 = 0 in " + field->describe());
    auto ring = qc_ring(field, m);
    ConstituentDecomposition d{ring, l, {}};
    std::vector<std::vector<Elem>> rows(l / 2, std::vector<Elem>(l, 0));
    for (std::size_t b = 0; b < l / 2; ++b) {
        rows[b][2 * b] = 1;
        rows[b][2 * b + 1] = *gamma;
    }
    for (const auto& K : ring->local_fields) d.components.push_back(LinearCode::from_rows(K, l, rows));
    auto out = crt_reconstruct(d);
    if (!is_selfdual(out)) throw std::logic_error("constructed code is not self-dual");
    return out;
}

IsodualVerdict is_isodual(const QuasiCyclicCode& c, IsodualStrategy strategy, std::size_t cutoff) {
    IsodualVerdict v;
    v.strategy = strategy;
    const std::size_t l = c.index(), m = c.co_index();

    if (strategy == IsodualStrategy::bruteforce) {
        if (l * m > cutoff) {
            v.note = "length " + str(l * m) + " exceeds cutoff " + str(cutoff);
            return v;
        }
        v.witness = equivalence_search(c.code(), qc_dual(c).code(), {EquivalenceMode::permutation, cutoff});
        v.result = v.witness ? IsodualResult::isodual : IsodualResult::not_isodual;
        return v;
    }

    if (l % 2 != 0) {
        v.result = IsodualResult::not_isodual;
        v.note = "odd index";
        return v;
    }
    if (l > cutoff) {
        v.note = "index " + str(l) + " exceeds cutoff " + str(cutoff);
        return v;
    }
    const auto d = crt_decompose(c);
    const auto dual = dual_constituents(d);
    bool all = true;
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        ComponentFinding f;
        f.slot = k;
        f.kind = d.ring->kinds[k];
        f.witness = equivalence_search(d.components[k], dual.components[k], {EquivalenceMode::permutation, cutoff});
        f.equivalent = f.witness.has_value();
        all = all && f.equivalent;
        v.component_report.push_back(std::move(f));
    }
    v.result = all ? IsodualResult::isodual : IsodualResult::not_isodual;
    if (!all) return v;

    if (auto tau = common_permutation(d.components, dual.components, v.component_report, l)) {
        auto w = block_permutation(*tau, m);
        if (!(apply_monomial(c.code(), w) == euclidean_dual(c.code())))
            throw std::logic_error("block witness does not reach the dual");
        v.witness = std::move(w);
    } else {
        v.note = "no single block permutation serves every constituent";
    }
    return v;
}

ConstructedIsodual construct_isodual_qc(const FieldPtr& field, std::size_t l, std::size_t m, std::size_t cutoff) {
    if (l == 0 || l % 2 != 0 || (l / 2) % 2 == 0) throw Error(ErrorKind::BadParameters, "l must be 2s with s odd");
    require_coprime(*field, m);
    auto ring = qc_ring(field, m);
    ConstituentDecomposition d{ring, l, {}};
    for (const auto& K : ring->local_fields)
        d.components.push_back(construct_isodual_cyclic(K, l / 2, IsodualVariant::B).code.to_linear());
    auto code = crt_reconstruct(d);

    auto verdict = is_isodual(code, IsodualStrategy::components, cutoff);
    const bool small = l * m <= cutoff;
    if (small && !(verdict.result == IsodualResult::isodual && verdict.witness)) {
        auto bf = is_isodual(code, IsodualStrategy::bruteforce, cutoff);
        bf.component_report = std::move(verdict.component_report);
        bf.note = "exhaustive search after the constituent check";
        verdict = std::move(bf);
    }
    std::optional<bool> monomial;
    if (small)
        monomial = equivalence_search(code.code(), euclidean_dual(code.code()), {EquivalenceMode::monomial, cutoff}).has_value();
    return {std::move(code), std::move(verdict), monomial};
}

CyclicityReport constituent_cyclicity(const QuasiCyclicCode& c) {
    CyclicityReport r;
    const auto d = crt_decompose(c);
    r.constituents = std::all_of(d.components.begin(), d.components.end(),
                                 [](const LinearCode& k) { return is_shift_invariant(k, 1); });
    std::vector<std::size_t> tau(c.index());
    for (std::size_t j = 0; j < tau.size(); ++j) tau[j] = (j + 1) % tau.size();
    r.block_shift = apply_monomial(c.code(), block_permutation(tau, c.co_index())) == c.code();
    return r;
}

bool constituents_all_cyclic(const QuasiCyclicCode& c) {
    const auto r = constituent_cyclicity(c);
    if (r.constituents != r.block_shift) throw std::logic_error("constituent cyclicity disagrees with slot-shift invariance");
    return r.constituents;
}

std::optional<std::vector<std::size_t>> qc_multiplier_equivalent(const QuasiCyclicCode& c, const QuasiCyclicCode& d) {
    require_same_field(c.field(), d.field());
    if (c.index() != d.index() || c.co_index() != d.co_index())
        throw Error(ErrorKind::BadParameters, "codes with different (l, m)");
    if (!constituents_all_cyclic(c) || !constituents_all_cyclic(d))
        throw Error(ErrorKind::NotCyclicConstituents, "constituents are not all cyclic");
    const auto dc = crt_decompose(c);
    const auto dd = crt_decompose(d);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dc.components.size(); ++k) {
        auto a = CyclicCode::from_linear(dc.components[k]);
        auto b = CyclicCode::from_linear(dd.components[k]);
        auto w = multiplier_equivalent(*a, *b);
        if (!w) return std::nullopt;
        out.push_back(*w);
    }
    return out;
}

std::string code_hash(const LinearCode& c) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(c.field()->size());
    mix(c.length());
    mix(c.dimension());
    for (Elem e : c.generator().data) mix(e);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

EnumerationReport enumerate_multiplier_equivalents(const QuasiCyclicCode& c) {
    const std::size_t p = c.index();
    if (!is_prime(p)) throw Error(ErrorKind::NotPrimeIndex, "index " + str(p) + " is not prime");
    if (!constituents_all_cyclic(c)) throw Error(ErrorKind::NotCyclicConstituents, "constituents are not all cyclic");
    const auto d = crt_decompose(c);
    const std::size_t r = d.components.size();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < r; ++k) {
        total *= p;
        if (total > (std::uint64_t{1} << 20)) throw Error(ErrorKind::TooLarge, "p^r exceeds 2^20 selections");
    }

    // images[k][a] = mu_a applied to constituent k, with a = 0 meaning unselected.
    std::vector<std::vector<LinearCode>> images(r);
    for (std::size_t k = 0; k < r; ++k) {
        const auto cyc = *CyclicCode::from_linear(d.components[k]);
        images[k].push_back(d.components[k]);
        for (std::size_t a = 1; a < p; ++a) images[k].push_back(multiplier_apply(cyc, a).to_linear());
    }

    EnumerationReport rep;
    rep.r = r;
    rep.p = p;
    std::map<std::pair<std::size_t, std::vector<Elem>>, std::size_t> seen;
    std::vector<std::size_t> sel(r, 0);
    for (;;) {
        ConstituentDecomposition e{d.ring, p, {}};
        for (std::size_t k = 0; k < r; ++k) e.components.push_back(images[k][sel[k]]);
        auto code = crt_reconstruct(e);
        ++rep.tuples_counted;
        rep.orbit.push_back({sel, code_hash(code.code())});
        if (seen.emplace(std::make_pair(code.code().dimension(), code.code().generator().data), rep.distinct.size()).second)
            rep.distinct.push_back(std::move(code));

        std::size_t k = 0;
        while (k < r && ++sel[k] == p) sel[k++] = 0;
        if (k == r) break;
    }
    rep.distinct_codes = rep.distinct.size();
    return rep;
}

}  // namespace qckit

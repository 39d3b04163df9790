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

#include "qckit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qckit/cyclic.hpp"
#include "qckit/quasi_cyclic.hpp"

namespace qckit {

namespace {

using Rng = std::mt19937_64;

FieldPtr field_of(std::uint64_t q) {
    const auto [p, e] = prime_power(q);
    return make_field(p, e);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Span of the T^l shifts of a few sparse random vectors.
QuasiCyclicCode random_qc(const FieldPtr& f, std::size_t l, std::size_t m, std::size_t max_gens, Rng& rng) {
    const std::size_t n = l * m;
    std::vector<std::vector<Elem>> rows;
    for (std::size_t g = uniform(rng, 0, max_gens); g > 0; --g) {
        std::vector<Elem> v(n);
        for (auto& x : v) x = uniform(rng, 0, 2) == 0 ? static_cast<Elem>(uniform(rng, 0, f->size() - 1)) : 0;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Elem> w(n);
            for (std::size_t k = 0; k < n; ++k) w[(k + i * l) % n] = v[k];
            rows.push_back(std::move(w));
        }
    }
    return QuasiCyclicCode::from_rows(f, l, m, rows);
}

std::string describe(const QuasiCyclicCode& c) {
    std::ostringstream os;
    os << "q=" << c.field()->size() << " l=" << c.index() << " m=" << c.co_index() << " k=" << c.code().dimension()
       << " gen=[";
    const auto rows = c.code().rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ";" : "");
        for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
    }
    os << "]";
    return os.str();
}

/// Random codes over q in {2,3,4,5}, l <= 4, m <= 15, with every eighth slot a constructed code.
std::vector<QuasiCyclicCode> mixed_corpus(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    const std::uint32_t qs[] = {2, 3, 4, 5};
    std::vector<QuasiCyclicCode> out;
    while (out.size() < count) {
        auto F = field_of(qs[out.size() % 4]);
        const std::size_t l = uniform(rng, 1, 4);
        const std::size_t m = uniform(rng, 1, 15);
        if (m % F->characteristic() == 0) continue;
        if (out.size() % 8 == 7 && l % 2 == 0 && selfdual_exists(F->size(), l)) {
            out.push_back(construct_selfdual_qc(F, l, m));
        } else if (out.size() % 8 == 3 && l == 2) {
            out.push_back(construct_isodual_qc(F, l, m, 0).code);
        } else {
            out.push_back(random_qc(F, l, m, 2, rng));
        }
    }
    return out;
}

/// Codes of length at most 8: constructed isodual and self-dual instances plus random ones.
std::vector<QuasiCyclicCode> small_corpus(std::uint64_t seed, std::size_t count) {
    std::vector<QuasiCyclicCode> out;
    const std::tuple<std::uint32_t, std::size_t, std::size_t> iso[] = {
        {2, 2, 1}, {2, 2, 3}, {2, 6, 1}, {3, 2, 1}, {3, 2, 2}, {3, 2, 4}, {4, 2, 1}, {4, 2, 3},
        {5, 2, 1}, {5, 2, 2}, {5, 2, 3}, {5, 2, 4}, {7, 2, 1}, {7, 2, 2}, {7, 2, 3}, {9, 2, 1}};
    for (const auto& [q, l, m] : iso) out.push_back(construct_isodual_qc(field_of(q), l, m, 0).code);
    const std::tuple<std::uint32_t, std::size_t, std::size_t> sd[] = {
        {2, 2, 1}, {2, 2, 3}, {2, 4, 1}, {4, 2, 3}, {5, 2, 1}, {5, 2, 2}, {5, 4, 1}, {5, 4, 2}, {9, 2, 1}, {13, 2, 1}};
    for (const auto& [q, l, m] : sd) out.push_back(construct_selfdual_qc(field_of(q), l, m));

    Rng rng(seed);
    const std::uint32_t qs[] = {2, 3, 4, 5};
    while (out.size() < count) {
        auto F = field_of(qs[out.size() % 4]);
        const std::size_t l = uniform(rng, 1, 8);
        const std::size_t m = uniform(rng, 1, 8 / l);
        if (m % F->characteristic() == 0) continue;
        out.push_back(random_qc(F, l, m, 2, rng));
    }
    return out;
}

const char* verdict_name(IsodualResult r) {
    switch (r) {
        case IsodualResult::isodual: return "isodual";
        case IsodualResult::not_isodual: return "not_isodual";
        default: return "inconclusive";
    }
}

// ---- items ------------------------------------------------------------------

void factorization(SelftestItem& it, std::uint64_t) {
    std::size_t cases = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
        auto F = field_of(q);
        for (std::size_t m = 1; m <= 30; ++m) {
            if (std::gcd<std::size_t>(m, q) != 1) continue;
            ++cases;
            const auto cls = factor_cyclic_modulus(F, m);
            Poly prod = Poly::constant(F, cls.delta);
            bool ok = true;
            for (const auto& f : cls.slots()) {
                prod = prod * f;
                ok = ok && f.is_monic() && is_irreducible(f);
            }
            for (const auto& g : cls.self_reciprocal) ok = ok && reciprocal(g) == g;
            for (const auto& pr : cls.pairs) ok = ok && reciprocal(pr.h) == pr.h_star && !(pr.h == pr.h_star);
            ok = ok && prod == Poly::cyclic_modulus(F, m);
            ok = ok && cls.r() == cyclotomic_cosets(q, m).size();
            if (!ok) it.findings.push_back("q=" + std::to_string(q) + " m=" + std::to_string(m));
        }
    }
    it.passed = it.findings.empty();
    it.detail = std::to_string(cases) + " (q, m) pairs, " + std::to_string(it.findings.size()) + " failures";
}

void crt_roundtrip(SelftestItem& it, std::uint64_t seed) {
    const auto corpus = mixed_corpus(seed, 200);
    for (const auto& c : corpus) {
        const auto d = crt_decompose(c);
        std::size_t dim = 0;
        for (std::size_t k = 0; k < d.components.size(); ++k)
            dim += d.ring->local_fields[k]->degree() * d.components[k].dimension();
        if (!(crt_reconstruct(d) == c) || dim != c.code().dimension()) it.findings.push_back(describe(c));
    }
    it.passed = it.findings.empty();
    it.detail = std::to_string(corpus.size()) + " codes, " + std::to_string(it.findings.size()) + " mismatches";
}

void propodual(SelftestItem& it, std::uint64_t seed) {
    const auto corpus = mixed_corpus(seed, 200);
    for (const auto& c : corpus) {
        const auto kernel = euclidean_dual(c.code());
        const auto via = crt_reconstruct(dual_constituents(crt_decompose(c))).code();
        if (!(kernel == via)) it.findings.push_back(describe(c));
    }
    it.passed = it.findings.empty();
    it.detail = std::to_string(corpus.size()) + " codes, " + std::to_string(it.findings.size()) + " mismatches";
}

void main_theorem(SelftestItem& it, std::uint64_t seed) {
    const auto corpus = small_corpus(seed, 100);
    std::size_t iso = 0, non = 0, without_witness = 0;
    for (const auto& c : corpus) {
        const auto comp = is_isodual(c, IsodualStrategy::components, 8);
        const auto bf = is_isodual(c, IsodualStrategy::bruteforce, 8);
        (bf.result == IsodualResult::isodual ? iso : non)++;
        if (comp.result == IsodualResult::isodual && !comp.witness) ++without_witness;
        if (comp.result != bf.result)
            it.findings.push_back(std::string("components=") + verdict_name(comp.result) +
                                  " bruteforce=" + verdict_name(bf.result) + " " + describe(c));
    }
    it.passed = it.findings.empty();
    it.detail = std::to_string(corpus.size()) + " codes (" + std::to_string(iso) + " isodual, " + std::to_string(non) +
                " not), " + std::to_string(it.findings.size()) + " disagreements, " + std::to_string(without_witness) +
                " constituent verdicts without a block witness";
}

void corollary(SelftestItem& it, std::uint64_t seed) {
    const auto corpus = mixed_corpus(seed, 200);
    std::size_t self_dual = 0;
    for (const auto& c : corpus) {
        const auto r = selfdual_report(c);
        self_dual += r.direct;
        if (r.componentwise != r.direct) it.findings.push_back(describe(c));
    }
    it.passed = it.findings.empty();
    it.detail = std::to_string(corpus.size()) + " codes (" + std::to_string(self_dual) + " self-dual), " +
                std::to_string(it.findings.size()) + " mismatches";
}

void isodual_cyclic(SelftestItem& it, std::uint64_t) {
    std::size_t built = 0, searched = 0;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 9u}) {
        auto F = field_of(q);
        for (std::size_t s : {1u, 3u, 5u, 7u}) {
            if (std::gcd<std::size_t>(2 * s, q) != 1) continue;
            for (auto v : {IsodualVariant::A, IsodualVariant::B}) {
                const auto r = construct_isodual_cyclic(F, s, v);
                const auto lin = r.code.to_linear();
                const auto dual = euclidean_dual(lin);
                ++built;
                bool ok = apply_monomial(lin, r.witness) == dual && r.code.length() == 2 * s;
                if (2 * s <= 8) {
                    ++searched;
                    ok = ok && equivalence_search(lin, dual, {EquivalenceMode::monomial, 8}).has_value();
                }
                if (!ok)
                    it.findings.push_back("q=" + std::to_string(q) + " s=" + std::to_string(s) +
                                          (v == IsodualVariant::A ? " A" : " B"));
            }
        }
    }
    it.passed = it.findings.empty() && built > 0;
    it.detail = std::to_string(built) + " codes with verified witnesses, " + std::to_string(searched) +
                " confirmed by monomial search";
}

void selfdual_existence(SelftestItem& it, std::uint64_t) {
    std::size_t fields = 0;
    for (std::uint64_t q = 2; q <= 64; ++q) {
        std::uint32_t p = 0, e = 0;
        try {
            std::tie(p, e) = prime_power(q);
        } catch (const Error&) {
            continue;
        }
        ++fields;
        auto F = make_field(p, e);
        bool gamma = false;
        for (Elem g = 0; g < F->size() && !gamma; ++g) gamma = F->add(F->mul(g, g), 1) == 0;
        for (std::size_t l = 1; l <= 4; ++l)
            if (selfdual_exists(q, l) != (l % 2 == 0 && gamma)) it.findings.push_back("q=" + std::to_string(q));
    }
    std::size_t built = 0;
    for (std::uint32_t q : {2u, 4u, 5u, 9u, 13u})
        for (std::size_t l : {2u, 4u})
            for (std::size_t m : {1u, 3u, 5u}) {
                auto F = field_of(q);
                if (m % F->characteristic() == 0) continue;
                const auto c = construct_selfdual_qc(F, l, m);
                const auto rows = c.code().rows();
                bool ok = 2 * rows.size() == l * m;
                for (const auto& a : rows)
                    for (const auto& b : rows) ok = ok && dot(*F, a, b) == 0;
                ++built;
                if (!ok) it.findings.push_back(describe(c));
            }
    // Length 2 over F_3: no one-dimensional code is self-dual.
    auto f3 = field_of(3);
    bool none = true;
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b)
            if (a || b) {
                auto c = LinearCode::from_rows(f3, 2, {{a, b}});
                none = none && !(c == euclidean_dual(c));
            }
    bool no_gamma = false;
    try {
        construct_selfdual_qc(f3, 2, 1);
    } catch (const Error& e) {
        no_gamma = e.kind() == ErrorKind::NoGamma;
    }
    if (!none || !no_gamma) it.findings.push_back("q=3 l=2 m=1 nonexistence not confirmed");
    it.passed = it.findings.empty();
    it.detail = std::to_string(fields) + " fields checked, " + std::to_string(built) +
                " constructions verified, q=3 l=2 m=1 has no self-dual code";
}

/// Seed code for the multiplier enumeration: each constituent is generated by the
/// smallest irreducible factor of x^l - 1 of largest degree over its local field.
QuasiCyclicCode enumeration_seed(const FieldPtr& F, std::size_t l, std::size_t m) {
    auto ring = qc_ring(F, m);
    ConstituentDecomposition d{ring, l, {}};
    for (const auto& K : ring->local_fields) {
        auto factors = factor_squarefree(Poly::cyclic_modulus(K, l));
        const Poly& g = factors.back();
        d.components.push_back(CyclicCode::make(K, l, g).to_linear());
    }
    return crt_reconstruct(d);
}

void prime_index(SelftestItem& it, std::uint64_t) {
    const std::tuple<std::uint32_t, std::size_t, std::size_t, std::uint64_t> cases[] = {
        {2, 3, 3, 9}, {2, 7, 3, 9}, {3, 2, 5, 625}};
    std::ostringstream detail;
    for (const auto& [q, m, l, listed] : cases) {
        const auto seed_code = enumeration_seed(field_of(q), l, m);
        const auto rep = enumerate_multiplier_equivalents(seed_code);
        std::uint64_t pr = 1;
        for (std::size_t k = 0; k < rep.r; ++k) pr *= rep.p;
        std::size_t back = 0;
        for (const auto& c : rep.distinct) back += qc_multiplier_equivalent(c, seed_code).has_value();
        detail << "(q=" << q << ",m=" << m << ",l=" << l << "): r=" << rep.r << " tuples=" << rep.tuples_counted
               << " p^r=" << pr << " listed=" << listed << " distinct=" << rep.distinct_codes << "; ";
        if (rep.tuples_counted != pr || back != rep.distinct.size())
            it.findings.push_back("q=" + std::to_string(q) + " m=" + std::to_string(m) + " l=" + std::to_string(l));
    }
    it.passed = it.findings.empty();
    it.detail = detail.str();
}

void multiplier_consistency(SelftestItem& it, std::uint64_t) {
    std::size_t pairs = 0;
    for (std::uint32_t q : {2u, 4u}) {
        auto F = field_of(q);
        for (std::size_t n : {7u, 9u, 15u}) {
            const auto factors = factor_squarefree(Poly::cyclic_modulus(F, n));
            for (std::size_t mask = 0; mask < (std::size_t{1} << factors.size()); ++mask) {
                Poly g = Poly::constant(F, 1);
                for (std::size_t i = 0; i < factors.size(); ++i)
                    if (mask >> i & 1) g = g * factors[i];
                const auto c = CyclicCode::make(F, n, g);
                for (std::size_t a = 1; a < n; ++a) {
                    if (std::gcd(a, n) != 1) continue;
                    ++pairs;
                    const auto by_gcd = CyclicCode::make(F, n, gcd(Poly::cyclic_modulus(F, n), power_var(g, a, n)));
                    if (!(by_gcd == multiplier_apply_by_defining_set(c, a)))
                        it.findings.push_back("q=" + std::to_string(q) + " n=" + std::to_string(n) + " g=" +
                                              g.to_string() + " a=" + std::to_string(a));
                }
            }
        }
    }
    auto f2 = field_of(2);
    const auto h1 = CyclicCode::make(f2, 7, Poly(f2, {1, 1, 0, 1}));
    const auto h2 = CyclicCode::make(f2, 7, Poly(f2, {1, 0, 1, 1}));
    const auto a = multiplier_equivalent(h1, h2);
    bool hamming = a && (*a == 3 || *a == 5 || *a == 6);
    // Smallest: no smaller unit maps h1 onto h2 as a coordinate permutation.
    for (std::size_t b = 1; hamming && b < *a; ++b)
        hamming = !(apply_monomial(h1.to_linear(), multiplier_map(7, b)) == h2.to_linear());
    if (!hamming) it.findings.push_back("Hamming pair witness missing or not smallest");
    it.passed = it.findings.empty();
    it.detail = std::to_string(pairs) + " (code, multiplier) pairs agree; Hamming pair witness a=" +
                (a ? std::to_string(*a) : std::string("none"));
}

void prop_image(SelftestItem& it, std::uint64_t seed) {
    Rng rng(seed + 17);
    std::size_t equivalent = 0, checked = 0;
    while (checked < 60) {
        auto F = field_of(checked % 2 ? 3 : 2);
        const std::size_t l = uniform(rng, 1, 4);
        const std::size_t m = uniform(rng, 1, 8 / l);
        if (m % F->characteristic() == 0) continue;
        ++checked;
        const auto c = random_qc(F, l, m, 2, rng);
        std::vector<std::size_t> units;
        for (std::size_t a = 1; a < std::max<std::size_t>(l * m, 2); ++a)
            if (std::gcd(a, l * m) == 1) units.push_back(a);
        const auto partner = checked % 3 == 0
                                 ? random_qc(F, l, m, 2, rng)
                                 : QuasiCyclicCode::make(l, m, apply_monomial(c.code(), multiplier_map(l * m, units[uniform(rng, 0, units.size() - 1)])));
        const auto pm = phi_coordinates(l, m);
        const auto img = apply_monomial(c.code(), pm);
        const auto img2 = apply_monomial(partner.code(), pm);
        const auto w = equivalence_search(c.code(), partner.code());
        const auto wi = equivalence_search(img, img2);
        bool ok = w.has_value() == wi.has_value();
        if (w) {
            ++equivalent;
            const auto tau = MonomialMap::permutation(pm.inverse_perm()).then(*w, *F).then(pm, *F);
            ok = ok && apply_monomial(img, tau) == img2;
        }
        if (wi) {
            const auto sigma = pm.then(*wi, *F).then(MonomialMap::permutation(pm.inverse_perm()), *F);
            ok = ok && apply_monomial(c.code(), sigma) == partner.code();
        }
        if (!ok) it.findings.push_back(describe(c) + " vs " + describe(partner));
    }
    it.passed = it.findings.empty();
    it.detail = std::to_string(checked) + " pairs (" + std::to_string(equivalent) + " equivalent), " +
                std::to_string(it.findings.size()) + " mismatches";
}

struct Entry {
    const char* name;
    void (*run)(SelftestItem&, std::uint64_t);
};

const Entry kEntries[] = {
    {"factorization", factorization},
    {"crt-roundtrip", crt_roundtrip},
    {"propodual", propodual},
    {"main:thm", main_theorem},
    {"cor:condi", corollary},
    {"thm:equivalent2", isodual_cyclic},
    {"selfdual-existence", selfdual_existence},
    {"th:prime", prime_index},
    {"multiplier-consistency", multiplier_consistency},
    {"prop:image", prop_image},
};

}  // namespace

bool SelftestReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const SelftestItem& i) { return i.passed; });
}

const std::vector<std::string>& selftest_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kEntries) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

SelftestItem run_selftest_item(const std::string& name, std::uint64_t seed) {
    for (const auto& e : kEntries) {
        if (name != e.name) continue;
        SelftestItem it;
        it.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run(it, seed);
        } catch (const std::exception& ex) {
            it.passed = false;
            it.detail = std::string("exception: ") + ex.what();
        }
        it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return it;
    }
    throw Error(ErrorKind::BadParameters, "unknown selftest item " + name);
}

SelftestReport run_selftest(std::uint64_t seed, const std::function<void(const SelftestItem&)>& progress) {
    SelftestReport rep;
    rep.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : selftest_names()) {
        rep.items.push_back(run_selftest_item(name, seed));
        if (progress) progress(rep.items.back());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace qckit

#include <numeric>
#include <random>

#include "doctest.h"
#include "qckit/quasi_cyclic.hpp"
#include "support.hpp"

using namespace qckit;
using qckit::testing::kSeed;

namespace {

using Rows = std::vector<std::vector<Elem>>;

Poly P(const FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

QuasiCyclicCode abab(const FieldPtr& f2) {
    return QuasiCyclicCode::from_rows(f2, 2, 3, {{1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}});
}

// Random QC corpus with gcd(m, q) = 1.
template <typename Visit>
void corpus(std::size_t count, std::uint64_t seed, std::vector<std::uint32_t> qs, std::size_t max_l, std::size_t max_m,
            Visit visit) {
    std::mt19937_64 rng(seed);
    std::size_t made = 0;
    while (made < count) {
        const auto q = qs[made % qs.size()];
        auto F = qckit::testing::field_of(q);
        const std::size_t l = std::uniform_int_distribution<std::size_t>(1, max_l)(rng);
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
        if (m % F->characteristic() == 0) continue;
        visit(qckit::testing::random_qc(F, l, m, 2, rng));
        ++made;
    }
}

}  // namespace

TEST_CASE("qc_make") {
    auto f2 = make_field(2, 1);
    auto ham = CyclicCode::make(f2, 7, P(f2, {1, 1, 0, 1})).to_linear();
    CHECK(QuasiCyclicCode::make(1, 7, ham).code() == ham);
    auto c = abab(f2);
    CHECK(c.code().dimension() == 2);
    CHECK(c.minimal_index() == 1);
    CHECK(QuasiCyclicCode::from_rows(f2, 2, 3, {{1, 0, 1, 0, 1, 0}}).minimal_index() == 2);
    try {
        QuasiCyclicCode::from_rows(f2, 2, 3, {{1, 0, 0, 0, 0, 0}});
        FAIL("expected NotShiftInvariant");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotShiftInvariant);
    }
    try {
        QuasiCyclicCode::from_rows(f2, 1, 4, {});
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
    }
}

TEST_CASE("phi reindexing") {
    auto f2 = make_field(2, 1);
    const std::vector<Elem> v{1, 0, 0, 1, 1, 0};
    auto c = phi(f2, v, 2, 3);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == P(f2, {1, 0, 1}));
    CHECK(c[1] == P(f2, {0, 1}));
    CHECK(phi_inv(c, 2, 3) == v);
    CHECK_THROWS_AS(phi(f2, v, 2, 2), Error);

    std::mt19937_64 rng(kSeed);
    for (auto q : {2u, 3u, 4u, 5u}) {
        auto F = qckit::testing::field_of(q);
        for (int t = 0; t < 30; ++t) {
            const std::size_t l = 1 + t % 4, m = 1 + t % 6;
            std::vector<Elem> w(l * m);
            for (auto& x : w) x = qckit::testing::random_elem(*F, rng);
            const auto polys = phi(F, w, l, m);
            CHECK(phi_inv(polys, l, m) == w);
            const auto shifted = shift_map(l * m, l).apply(*F, w);
            const auto sp = phi(F, shifted, l, m);
            const Poly mod = Poly::cyclic_modulus(F, m);
            for (std::size_t j = 0; j < l; ++j) CHECK(sp[j] == Poly::x(F) * polys[j] % mod);
        }
    }
}

TEST_CASE("crt_decompose examples") {
    auto f2 = make_field(2, 1);
    auto d = crt_decompose(abab(f2));
    REQUIRE(d.components.size() == 2);
    CHECK(d.ring->factors[0] == P(f2, {1, 1}));
    CHECK(d.components[0] == LinearCode::full(d.ring->local_fields[0], 2));
    CHECK(d.components[1] == LinearCode::zero(d.ring->local_fields[1], 2));

    auto z = crt_decompose(QuasiCyclicCode::from_rows(f2, 3, 5, {}));
    for (const auto& comp : z.components) CHECK(comp.dimension() == 0);

    // l = 1: the constituent at f vanishes exactly when f divides g.
    for (const auto& g : {P(f2, {1, 1, 0, 1}), P(f2, {1, 1}), P(f2, {1, 0, 1, 1}) * P(f2, {1, 1})}) {
        auto cyc = CyclicCode::make(f2, 7, g);
        auto dec = crt_decompose(QuasiCyclicCode::make(1, 7, cyc.to_linear()));
        const auto ds = defining_set(cyc);
        for (std::size_t k = 0; k < dec.components.size(); ++k) {
            const Poly& f = dec.ring->factors[k];
            const bool divides = (g % f).is_zero();
            CHECK((dec.components[k].dimension() == 0) == divides);
            const auto fs = defining_set(CyclicCode::make(f2, 7, f));
            CHECK(std::includes(ds.begin(), ds.end(), fs.begin(), fs.end()) == divides);
        }
    }
}

TEST_CASE("crt_reconstruct") {
    auto f3 = make_field(3, 1);
    auto ring = qc_ring(f3, 4);
    ConstituentDecomposition zero{ring, 2, {}}, full{ring, 2, {}};
    for (const auto& K : ring->local_fields) {
        zero.components.push_back(LinearCode::zero(K, 2));
        full.components.push_back(LinearCode::full(K, 2));
    }
    CHECK(crt_reconstruct(zero).code() == LinearCode::zero(f3, 8));
    CHECK(crt_reconstruct(full).code() == LinearCode::full(f3, 8));
    full.components.pop_back();
    CHECK_THROWS_AS(crt_reconstruct(full), Error);

    std::size_t checked = 0;
    corpus(200, kSeed + 1, {2, 3, 4, 5}, 4, 15, [&](const QuasiCyclicCode& c) {
        const auto d = crt_decompose(c);
        CHECK(crt_reconstruct(d) == c);
        std::size_t dim = 0;
        for (std::size_t k = 0; k < d.components.size(); ++k)
            dim += d.ring->local_fields[k]->degree() * d.components[k].dimension();
        CHECK(dim == c.code().dimension());
        ++checked;
    });
    CHECK(checked == 200);
}

TEST_CASE("ring idempotents") {
    for (auto q : {2u, 3u, 4u, 5u}) {
        auto F = qckit::testing::field_of(q);
        for (std::size_t m = 1; m <= 15; ++m) {
            if (m % F->characteristic() == 0) continue;
            auto ring = qc_ring(F, m);
            const Poly mod = Poly::cyclic_modulus(F, m);
            Poly sum(F);
            for (std::size_t k = 0; k < ring->slot_count(); ++k) {
                const Poly& e = ring->idempotents[k];
                CHECK(e * e % mod == e);
                for (std::size_t k2 = 0; k2 < ring->slot_count(); ++k2)
                    CHECK((e % ring->factors[k2]) == Poly::constant(F, k == k2 ? 1 : 0));
                sum = sum + e;
            }
            CHECK(sum == Poly::constant(F, 1));
        }
    }
}

TEST_CASE("transport between paired fields") {
    auto f2 = make_field(2, 1);
    auto ring = qc_ring(f2, 7);
    REQUIRE(ring->classification.t() == 1);
    const auto& h = ring->local_fields[1];
    const auto& hs = ring->local_fields[2];
    // Y -> Y^-1 is a field isomorphism; transporting twice is the identity.
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 30; ++t) {
        auto c = qckit::testing::random_code(h, 4, 4, rng);
        auto there = transport(c, hs);
        CHECK(there.dimension() == c.dimension());
        CHECK(transport(there, h) == c);
    }
    const Elem y = h->root();
    auto one = LinearCode::from_rows(h, 1, {{y}});
    CHECK(transport(one, hs).dimension() == 1);
    CHECK(transport(LinearCode::from_rows(h, 2, {{1, y}}), hs) == LinearCode::from_rows(hs, 2, {{1, hs->inv(hs->root())}}));
}

TEST_CASE("qc_dual") {
    auto f2 = make_field(2, 1);
    auto d = qc_dual(abab(f2));
    CHECK(d.code().dimension() == 4);
    auto dd = crt_decompose(d);
    CHECK(dd.components[0].dimension() == 0);
    CHECK(dd.components[1].dimension() == 2);

    corpus(200, kSeed + 1, {2, 3, 4, 5}, 4, 15, [&](const QuasiCyclicCode& c) {
        const auto dual = qc_dual(c);
        CHECK(dual.code() == euclidean_dual(c.code()));
        CHECK(crt_reconstruct(dual_constituents(crt_decompose(c))) == dual);
        CHECK(c.code().dimension() + dual.code().dimension() == c.length());
        CHECK(qc_dual(dual) == c);
    });
}

TEST_CASE("self-duality") {
    auto f2 = make_field(2, 1);
    auto ring = qc_ring(f2, 3);
    const auto& F4 = ring->local_fields[1];
    ConstituentDecomposition d{ring, 2, {}};
    d.components.push_back(LinearCode::from_rows(ring->local_fields[0], 2, {{1, 1}}));
    d.components.push_back(LinearCode::from_rows(F4, 2, {{1, F4->root()}}));
    auto sd = crt_reconstruct(d);
    CHECK(sd.code().dimension() == 3);
    CHECK(is_selfdual(sd));
    CHECK_FALSE(is_selfdual(abab(f2)));
    CHECK_FALSE(is_selfdual(QuasiCyclicCode::from_rows(f2, 2, 3, {})));

    std::size_t self_dual = 0;
    corpus(200, kSeed + 3, {2, 3, 4, 5}, 4, 9, [&](const QuasiCyclicCode& c) {
        const auto r = selfdual_report(c);
        CHECK(r.componentwise == r.direct);
        self_dual += r.direct;
    });
    for (auto q : {2u, 4u, 5u, 9u, 13u})
        for (std::size_t l : {2u, 4u})
            for (std::size_t m : {1u, 3u, 5u}) {
                auto F = qckit::testing::field_of(q);
                if (m % F->characteristic() == 0) continue;
                auto c = construct_selfdual_qc(F, l, m);
                const auto r = selfdual_report(c);
                CHECK(r.componentwise);
                CHECK(r.direct);
                CHECK(2 * c.code().dimension() == l * m);
            }
    MESSAGE("random self-dual codes: " << self_dual);
}

TEST_CASE("self-dual existence") {
    CHECK(selfdual_exists(2, 2));
    CHECK(selfdual_exists(5, 2));
    CHECK_FALSE(selfdual_exists(3, 2));
    CHECK(selfdual_exists(9, 2));
    CHECK_FALSE(selfdual_exists(2, 3));
    for (std::uint64_t q = 2; q <= 64; ++q) {
        std::uint32_t p = 0, e = 0;
        try {
            std::tie(p, e) = prime_power(q);
        } catch (const Error&) {
            continue;
        }
        for (std::size_t l = 1; l <= 4; ++l) {
            auto F = make_field(p, e);
            bool gamma = false;
            for (Elem g = 0; g < F->size(); ++g) gamma = gamma || F->add(F->mul(g, g), 1) == 0;
            CHECK(selfdual_exists(q, l) == (l % 2 == 0 && gamma));
        }
    }

    auto f5 = make_field(5, 1);
    auto c = construct_selfdual_qc(f5, 2, 1);
    CHECK(c.code() == LinearCode::from_rows(f5, 2, {{1, 2}}));
    try {
        construct_selfdual_qc(make_field(3, 1), 2, 1);
        FAIL("expected NoGamma");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoGamma);
    }
    CHECK_THROWS_AS(construct_selfdual_qc(make_field(2, 1), 3, 1), Error);

    // No self-dual code of length 2 over F_3: exhaustive over all 1-dimensional codes.
    auto f3 = make_field(3, 1);
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            auto code = LinearCode::from_rows(f3, 2, {{a, b}});
            CHECK_FALSE(code == euclidean_dual(code));
        }
}

TEST_CASE("isoduality verdicts") {
    auto f2 = make_field(2, 1);
    auto sd = construct_selfdual_qc(f2, 2, 3);
    for (auto s : {IsodualStrategy::components, IsodualStrategy::bruteforce}) {
        auto v = is_isodual(sd, s);
        CHECK(v.result == IsodualResult::isodual);
        REQUIRE(v.witness.has_value());
        CHECK(*v.witness == MonomialMap::identity(6));
    }

    auto f3 = make_field(3, 1);
    auto t = QuasiCyclicCode::from_rows(f3, 2, 1, {{1, 1}});
    CHECK(is_isodual(t, IsodualStrategy::components).result == IsodualResult::not_isodual);
    CHECK(is_isodual(t, IsodualStrategy::bruteforce).result == IsodualResult::not_isodual);

    CHECK(is_isodual(QuasiCyclicCode::from_rows(f2, 5, 3, {}), IsodualStrategy::bruteforce).result ==
          IsodualResult::inconclusive);

    // Odd index: the fast path agrees with exhaustive search at length 6.
    std::mt19937_64 rng(kSeed + 4);
    for (auto q : {3u, 5u}) {
        auto F = qckit::testing::field_of(q);
        for (int k = 0; k < 20; ++k) {
            auto c = qckit::testing::random_qc(F, 3, 2, 2, rng);
            CHECK(is_isodual(c, IsodualStrategy::components).result == IsodualResult::not_isodual);
            CHECK(is_isodual(c, IsodualStrategy::bruteforce).result == IsodualResult::not_isodual);
        }
    }
}

TEST_CASE("isodual construction") {
    auto f2 = make_field(2, 1);
    auto a = construct_isodual_qc(f2, 2, 3);
    CHECK(a.verdict.result == IsodualResult::isodual);
    CHECK(a.verdict.witness.has_value());
    auto b = construct_isodual_qc(f2, 6, 1);
    CHECK(b.verdict.result == IsodualResult::isodual);
    CHECK(is_selfdual(b.code));

    auto c = construct_isodual_qc(make_field(3, 1), 2, 1);
    CHECK(c.code.code() == LinearCode::from_rows(make_field(3, 1), 2, {{1, 1}}));
    CHECK(c.verdict.result == IsodualResult::not_isodual);
    CHECK(c.monomial_isodual == std::optional<bool>{true});
    CHECK_THROWS_AS(construct_isodual_qc(f2, 4, 3), Error);
}

TEST_CASE("constituent cyclicity") {
    auto f2 = make_field(2, 1);
    auto ring = qc_ring(f2, 1);
    ConstituentDecomposition d{ring, 2, {LinearCode::from_rows(ring->local_fields[0], 2, {{1, 0}})}};
    auto c = crt_reconstruct(d);
    CHECK_FALSE(constituents_all_cyclic(c));
    CHECK(constituents_all_cyclic(construct_isodual_qc(f2, 2, 3).code));

    corpus(150, kSeed + 5, {2, 3}, 4, 7, [&](const QuasiCyclicCode& q) {
        const auto r = constituent_cyclicity(q);
        CHECK(r.constituents == r.block_shift);
    });
}

TEST_CASE("multiplier equivalence of quasi-cyclic codes") {
    auto f2 = make_field(2, 1);
    auto ring = qc_ring(f2, 3);
    auto build = [&](const Poly& slot1) {
        ConstituentDecomposition d{ring, 7, {}};
        auto K0 = ring->local_fields[0], K1 = ring->local_fields[1];
        d.components.push_back(CyclicCode::make(K0, 7, Poly(K0, {1, 1})).to_linear());
        d.components.push_back(CyclicCode::make(K1, 7, Poly(K1, slot1.coeffs())).to_linear());
        return crt_reconstruct(d);
    };
    auto c = build(P(f2, {1, 1, 0, 1}));
    auto d = build(P(f2, {1, 0, 1, 1}));
    CHECK(qc_multiplier_equivalent(c, c) == std::optional<std::vector<std::size_t>>{{1, 1}});
    CHECK(qc_multiplier_equivalent(c, d) == std::optional<std::vector<std::size_t>>{{1, 3}});
    auto e = build(P(f2, {1, 1}));
    CHECK_FALSE(qc_multiplier_equivalent(c, e).has_value());

    ConstituentDecomposition bad{qc_ring(f2, 1), 2, {LinearCode::from_rows(qc_ring(f2, 1)->local_fields[0], 2, {{1, 0}})}};
    auto nc = crt_reconstruct(bad);
    try {
        qc_multiplier_equivalent(nc, nc);
        FAIL("expected NotCyclicConstituents");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotCyclicConstituents);
    }
}

TEST_CASE("multiplier enumeration") {
    auto f2 = make_field(2, 1);
    auto full = QuasiCyclicCode::make(3, 3, LinearCode::full(f2, 9));
    auto rep = enumerate_multiplier_equivalents(full);
    CHECK(rep.r == 2);
    CHECK(rep.tuples_counted == 9);
    CHECK(rep.distinct_codes == 1);
    CHECK(rep.orbit.size() == 9);

    auto one = enumerate_multiplier_equivalents(QuasiCyclicCode::make(3, 1, LinearCode::full(f2, 3)));
    CHECK(one.r == 1);
    CHECK(one.tuples_counted == 3);

    CHECK_THROWS_AS(enumerate_multiplier_equivalents(QuasiCyclicCode::make(4, 1, LinearCode::full(f2, 4))), Error);

    // A code whose constituents move under multipliers.
    auto ring = qc_ring(f2, 7);
    ConstituentDecomposition d{ring, 7, {}};
    for (std::size_t k = 0; k < ring->slot_count(); ++k) {
        auto K = ring->local_fields[k];
        d.components.push_back(CyclicCode::make(K, 7, Poly(K, {1, 1, 0, 1})).to_linear());
    }
    auto seed = crt_reconstruct(d);
    auto r7 = enumerate_multiplier_equivalents(seed);
    CHECK(r7.r == 3);
    CHECK(r7.tuples_counted == 343);
    CHECK(r7.distinct_codes <= r7.tuples_counted);
    CHECK(r7.distinct_codes == 8);
    for (const auto& code : r7.distinct) CHECK(qc_multiplier_equivalent(code, seed).has_value());
}

TEST_CASE("equivalence reads the same through phi") {
    std::mt19937_64 rng(kSeed + 9);
    const auto P_ = [](std::size_t l, std::size_t m) { return phi_coordinates(l, m); };
    for (auto q : {2u, 3u}) {
        auto F = qckit::testing::field_of(q);
        for (int t = 0; t < 40; ++t) {
            const std::size_t l = 1 + t % 4;
            const std::size_t m = (q == 2) ? (t % 2 ? 1 : 3) : 1 + t % 2;
            if (l * m > 8) continue;
            auto c = qckit::testing::random_qc(F, l, m, 2, rng);
            // Partners: a multiplier of all l m coordinates keeps T^l invariance.
            std::vector<std::size_t> units;
            for (std::size_t a = 1; a < std::max<std::size_t>(l * m, 2); ++a)
                if (std::gcd(a, l * m) == 1) units.push_back(a);
            const std::size_t a = units[t % units.size()];
            auto cp = (t % 3 == 0) ? qckit::testing::random_qc(F, l, m, 2, rng)
                                   : QuasiCyclicCode::make(l, m, apply_monomial(c.code(), multiplier_map(l * m, a)));
            const auto pm = P_(l, m);
            const auto img = apply_monomial(c.code(), pm);
            const auto img2 = apply_monomial(cp.code(), pm);
            auto w = equivalence_search(c.code(), cp.code());
            auto wi = equivalence_search(img, img2);
            CHECK(w.has_value() == wi.has_value());
            if (w) {
                // tau = P sigma P^-1 takes the images onto each other.
                auto tau = MonomialMap::permutation(pm.inverse_perm()).then(*w, *F).then(pm, *F);
                CHECK(apply_monomial(img, tau) == img2);
            }
        }
    }
}

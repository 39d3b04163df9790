#include <random>

#include "doctest.h"
#include "qckit/poly.hpp"
#include "support.hpp"

using namespace qckit;
using qckit::testing::kSeed;

namespace {
Poly P(const FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }
}  // namespace

TEST_CASE("basic polynomial arithmetic") {
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    CHECK(gcd(P(f2, {1, 0, 1}), P(f2, {1, 1})) == P(f2, {1, 1}));

    auto [q, r] = divmod(P(f3, {2, 0, 0, 1}), P(f3, {2, 1}));  // x^3 - 1 by x - 1
    CHECK(q == P(f3, {1, 1, 1}));
    CHECK(r.is_zero());

    const Poly f = P(f3, {2, 1, 0, 1});
    CHECK(f.eval(0) == 2);
    CHECK_THROWS_AS(divmod(f, Poly(f3)), Error);
    CHECK_THROWS_AS(Poly(f3).degree(), Error);
    CHECK_THROWS_AS(P(f2, {1, 1}) + P(f3, {1, 1}), Error);
}

TEST_CASE("extended gcd identity on random pairs") {
    std::mt19937_64 rng(kSeed);
    for (auto q : {2u, 3u, 4u, 5u, 9u}) {
        auto F = qckit::testing::field_of(q);
        for (int t = 0; t < 40; ++t) {
            const Poly a = qckit::testing::random_poly(F, 7, rng);
            const Poly b = qckit::testing::random_poly(F, 5, rng);
            if (a.is_zero() && b.is_zero()) continue;
            auto [d, u, v] = egcd(a, b);
            CHECK(u * a + v * b == d);
            CHECK(d.is_monic());
            CHECK(d == gcd(a, b));
            CHECK((a % d).is_zero());
            CHECK((b % d).is_zero());
        }
    }
}

TEST_CASE("reciprocal examples and properties") {
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    CHECK(reciprocal(P(f2, {1, 1, 1})) == P(f2, {1, 1, 1}));
    CHECK(reciprocal(P(f2, {1, 1, 0, 1})) == P(f2, {1, 0, 1, 1}));
    CHECK(reciprocal(P(f3, {1, 2})) == P(f3, {2, 1}));
    try {
        reciprocal(P(f3, {0, 1}));
        FAIL("expected ZeroConstantTerm");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroConstantTerm);
    }

    std::mt19937_64 rng(kSeed + 1);
    for (auto q : {2u, 3u, 4u, 7u}) {
        auto F = qckit::testing::field_of(q);
        for (int t = 0; t < 50; ++t) {
            Poly a = qckit::testing::random_monic(F, 1 + t % 6, rng);
            Poly b = qckit::testing::random_monic(F, 1 + t % 4, rng);
            if (a.coeff(0) == 0 || b.coeff(0) == 0) continue;
            CHECK(reciprocal(reciprocal(a)) == a);
            CHECK(reciprocal(a * b) == reciprocal(a) * reciprocal(b));
            CHECK(reciprocal(a).degree() == a.degree());
        }
    }
}

TEST_CASE("variable substitutions") {
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    const Poly g = P(f2, {1, 1, 0, 1});
    CHECK(negate_var(g) == g);
    CHECK(scale_var(P(f3, {1, 1, 1}), 2) == P(f3, {1, 2, 1}));
    CHECK(power_var(g, 3, 7) == P(f2, {1, 0, 1, 1}));
    CHECK_THROWS_AS(scale_var(g, 0), Error);
    try {
        power_var(g, 7, 7);
        FAIL("expected MultiplierNotCoprime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MultiplierNotCoprime);
    }

    std::mt19937_64 rng(kSeed + 2);
    for (std::size_t n : {5, 7, 9, 12, 15}) {
        auto F = qckit::testing::field_of(n % 2 ? 2 : 5);
        for (int t = 0; t < 20; ++t) {
            const Poly f = qckit::testing::random_poly(F, n - 1, rng);
            for (std::size_t a = 1; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                std::size_t inv = 1;
                while ((inv * a) % n != 1) ++inv;
                CHECK(power_var(power_var(f, a, n), inv, n) == f);
            }
        }
    }
}

TEST_CASE("Ben-Or irreducibility agrees with trial division") {
    for (auto q : {2u, 3u, 4u}) {
        auto F = qckit::testing::field_of(q);
        const std::size_t maxdeg = q == 2 ? 7 : 4;
        for (std::size_t d = 1; d <= maxdeg; ++d) {
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < d; ++i) total *= q;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<Elem> c(d + 1);
                std::uint64_t x = code;
                for (std::size_t i = 0; i < d; ++i) {
                    c[i] = static_cast<Elem>(x % q);
                    x /= q;
                }
                c[d] = 1;
                const Poly f(F, c);
                CHECK(is_irreducible(f) == is_irreducible_by_trial_division(f));
            }
        }
    }
}

TEST_CASE("factorization examples") {
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);

    auto c7 = factor_cyclic_modulus(f2, 7);
    REQUIRE(c7.s() == 1);
    REQUIRE(c7.t() == 1);
    CHECK(c7.self_reciprocal[0] == P(f2, {1, 1}));
    CHECK(c7.pairs[0].h == P(f2, {1, 1, 0, 1}));
    CHECK(c7.pairs[0].h_star == P(f2, {1, 0, 1, 1}));
    CHECK(c7.delta == 1);

    auto c1 = factor_cyclic_modulus(f2, 1);
    CHECK(c1.s() == 1);
    CHECK(c1.t() == 0);
    CHECK(c1.self_reciprocal[0] == P(f2, {1, 1}));

    auto c4 = factor_cyclic_modulus(f3, 4);
    REQUIRE(c4.s() == 3);
    CHECK(c4.t() == 0);
    CHECK(c4.self_reciprocal[0] == P(f3, {1, 1}));  // Y + 1
    CHECK(c4.self_reciprocal[1] == P(f3, {2, 1}));  // Y - 1
    CHECK(c4.self_reciprocal[2] == P(f3, {1, 0, 1}));

    try {
        factor_cyclic_modulus(f2, 4);
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
    }
}

TEST_CASE("classified factorizations satisfy their invariants") {
    for (auto q : {2u, 3u, 4u, 5u, 7u, 9u}) {
        auto F = qckit::testing::field_of(q);
        for (std::size_t m = 1; m <= 24; ++m) {
            if (m % F->characteristic() == 0) continue;
            const auto cls = factor_cyclic_modulus(F, m);
            Poly prod = Poly::constant(F, cls.delta);
            for (const auto& f : cls.slots()) {
                CHECK(f.is_monic());
                CHECK(is_irreducible(f));
                prod = prod * f;
            }
            CHECK(prod == Poly::cyclic_modulus(F, m));
            for (const auto& g : cls.self_reciprocal) CHECK(reciprocal(g) == g);
            for (const auto& pr : cls.pairs) {
                CHECK(reciprocal(pr.h) == pr.h_star);
                CHECK(reciprocal(pr.h_star) == pr.h);
                CHECK(pr.h != pr.h_star);
                CHECK(poly_less(pr.h, pr.h_star));
            }
            CHECK(cls.r() == cyclotomic_cosets(q, m).size());
        }
    }
}

TEST_CASE("cyclotomic cosets and orders") {
    auto cos = cyclotomic_cosets(2, 7);
    REQUIRE(cos.size() == 3);
    CHECK(cos[0] == std::vector<std::size_t>{0});
    CHECK(cos[1] == std::vector<std::size_t>{1, 2, 4});
    CHECK(cos[2] == std::vector<std::size_t>{3, 5, 6});
    CHECK(multiplicative_order_mod(2, 7) == 3);
    CHECK(multiplicative_order_mod(4, 15) == 2);
    CHECK(multiplicative_order_mod(3, 1) == 1);
}

TEST_CASE("first irreducible") {
    auto f2 = make_field(2, 1);
    CHECK(first_irreducible(f2, 2) == P(f2, {1, 1, 1}));
    CHECK(first_irreducible(f2, 3) == P(f2, {1, 0, 1, 1}));
    auto f4 = make_field(2, 2);
    const Poly f = first_irreducible(f4, 3);
    CHECK(is_irreducible_by_trial_division(f));
}

#pragma once

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "qckit/galois.hpp"
#include "qckit/poly.hpp"

namespace qckit::testing {

inline constexpr std::uint64_t kSeed = 20261018;

inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        try {
            prime_power(q);
            out.push_back(q);
        } catch (const Error&) {
        }
    }
    return out;
}

inline FieldPtr field_of(std::uint64_t q) {
    auto [p, e] = prime_power(q);
    return make_field(p, e);
}

inline Elem random_elem(const Field& f, std::mt19937_64& rng) {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(0, f.size() - 1)(rng));
}

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(1, f.size() - 1)(rng));
}

inline Poly random_poly(const FieldPtr& f, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<Elem> c(max_degree + 1);
    for (auto& x : c) x = random_elem(*f, rng);
    return Poly(f, c);
}

inline Poly random_monic(const FieldPtr& f, std::size_t degree, std::mt19937_64& rng) {
    std::vector<Elem> c(degree + 1);
    for (auto& x : c) x = random_elem(*f, rng);
    c[degree] = 1;
    return Poly(f, c);
}

}  // namespace qckit::testing

#include "qckit/linear_code.hpp"

namespace qckit::testing {

inline LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t max_rows, std::mt19937_64& rng) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, max_rows)(rng);
    std::vector<std::vector<Elem>> r(rows, std::vector<Elem>(n));
    for (auto& row : r)
        for (auto& x : row) x = random_elem(*f, rng);
    return LinearCode::from_rows(f, n, r);
}

inline std::vector<std::size_t> random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace qckit::testing

#include "qckit/quasi_cyclic.hpp"

namespace qckit::testing {

/// Span of all T^l shifts of a few random vectors.
inline QuasiCyclicCode random_qc(const FieldPtr& f, std::size_t l, std::size_t m, std::size_t max_gens,
                                 std::mt19937_64& rng) {
    const std::size_t gens = std::uniform_int_distribution<std::size_t>(0, max_gens)(rng);
    const std::size_t n = l * m;
    std::vector<std::vector<Elem>> rows;
    for (std::size_t g = 0; g < gens; ++g) {
        std::vector<Elem> v(n);
        // Sparse generators keep dimensions spread out.
        for (auto& x : v) x = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? random_elem(*f, rng) : 0;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Elem> w(n);
            for (std::size_t k = 0; k < n; ++k) w[(k + i * l) % n] = v[k];
            rows.push_back(std::move(w));
        }
    }
    return QuasiCyclicCode::from_rows(f, l, m, rows);
}

}  // namespace qckit::testing

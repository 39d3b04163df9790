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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qckit/galois.hpp"
#include "qckit/linalg.hpp"

namespace qckit {

/// Largest codeword count we are willing to enumerate.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 16;

/**
 * Monomial coordinate map. Coordinate i of the image of x is diag[i] * x[perm^-1(i)],
 * i.e. source coordinate s moves to perm[s] and is then scaled by diag[perm[s]].
 */
struct MonomialMap {
    std::vector<std::size_t> perm;
    std::vector<Elem> diag;

    static MonomialMap identity(std::size_t n);
    static MonomialMap permutation(std::vector<std::size_t> perm);
    static MonomialMap diagonal(std::vector<Elem> diag);

    std::size_t size() const noexcept { return perm.size(); }
    bool is_permutation() const noexcept;
    /// Throws BadParameters unless perm is a bijection and every scalar is a nonzero element of field.
    void validate(const Field& field) const;
    std::vector<Elem> apply(const Field& field, std::span<const Elem> x) const;
    /// The map x -> next(this(x)).
    MonomialMap then(const MonomialMap& next, const Field& field) const;
    std::vector<std::size_t> inverse_perm() const;

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

/// Linear code stored by its canonical (RREF) generator matrix.
class LinearCode {
public:
    static LinearCode from_rows(FieldPtr field, std::size_t n, const std::vector<std::vector<Elem>>& rows);
    static LinearCode from_matrix(FieldPtr field, Matrix gen);
    static LinearCode zero(FieldPtr field, std::size_t n);
    static LinearCode full(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return gen_.cols; }
    std::size_t dimension() const noexcept { return gen_.rows; }
    const Matrix& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<std::vector<Elem>> rows() const;

    bool contains(std::span<const Elem> v) const;
    /// Number of codewords q^k, saturating at UINT64_MAX.
    std::uint64_t size() const noexcept;

    friend bool operator==(const LinearCode& a, const LinearCode& b) noexcept;

private:
    LinearCode(FieldPtr field, Matrix gen);

    FieldPtr field_;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

LinearCode euclidean_dual(const LinearCode& c);
/// Entrywise conjugation of every codeword.
LinearCode conjugated(const LinearCode& c);
/// {v : sum_k v_k conj(c_k) = 0 for all c}, computed as the Euclidean dual of the conjugated code.
LinearCode hermitian_dual(const LinearCode& c);
LinearCode apply_monomial(const LinearCode& c, const MonomialMap& map);
LinearCode direct_sum(std::span<const LinearCode> parts);
/// True when the row space is closed under coordinate shift i -> i + step mod n.
bool is_shift_invariant(const LinearCode& c, std::size_t step);
/// Map sending coordinate i to i + step mod n.
MonomialMap shift_map(std::size_t n, std::size_t step);

/// Codewords restricted to the coordinates [first, first + count).
LinearCode puncture_to(const LinearCode& c, std::size_t first, std::size_t count);

/// Calls visit for every codeword; throws TooLarge beyond kEnumerationLimit.
void for_each_codeword(const LinearCode& c, const std::function<void(std::span<const Elem>)>& visit);

/// count[w] = number of codewords of Hamming weight w.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c);

enum class EquivalenceMode { permutation, monomial };

struct SearchOptions {
    EquivalenceMode mode = EquivalenceMode::permutation;
    std::size_t cutoff = 8;
};

/**
 * Exhaustive search for a map taking c onto d.
 *
 * Prunes on dimension, weight distribution and per-coordinate weight profiles
 * (when q^k is enumerable), then backtracks over column assignments in
 * increasing source order, so the returned witness is the first one in that
 * order. Throws CutoffExceeded when n > cutoff.
 */
std::optional<MonomialMap> equivalence_search(const LinearCode& c, const LinearCode& d, const SearchOptions& opts = {});

}  // namespace qckit

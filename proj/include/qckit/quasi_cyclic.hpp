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
#include <string>
#include <vector>

#include "qckit/cyclic.hpp"
#include "qckit/linear_code.hpp"
#include "qckit/poly.hpp"

namespace qckit {

/// Linear code of length l m over F_q invariant under the shift T^l, gcd(m, q) = 1.
class QuasiCyclicCode {
public:
    static QuasiCyclicCode make(std::size_t l, std::size_t m, LinearCode code);
    static QuasiCyclicCode from_rows(FieldPtr field, std::size_t l, std::size_t m,
                                     const std::vector<std::vector<Elem>>& rows);

    const FieldPtr& field() const noexcept { return code_.field(); }
    std::size_t index() const noexcept { return l_; }
    std::size_t co_index() const noexcept { return m_; }
    std::size_t length() const noexcept { return l_ * m_; }
    const LinearCode& code() const noexcept { return code_; }
    /// Smallest divisor d of l m with T^d invariance.
    std::size_t minimal_index() const;

    friend bool operator==(const QuasiCyclicCode& a, const QuasiCyclicCode& b) noexcept {
        return a.l_ == b.l_ && a.m_ == b.m_ && a.code_ == b.code_;
    }

private:
    QuasiCyclicCode(std::size_t l, std::size_t m, LinearCode code) : l_(l), m_(m), code_(std::move(code)) {}

    std::size_t l_;
    std::size_t m_;
    LinearCode code_;
};

/// (c_0(Y), ..., c_{l-1}(Y)) with c_j = sum_i v[j + i l] Y^i.
std::vector<Poly> phi(const FieldPtr& field, std::span<const Elem> v, std::size_t l, std::size_t m);
std::vector<Elem> phi_inv(std::span<const Poly> c, std::size_t l, std::size_t m);
/// Coordinate map j + i l -> i + j m, which lays the slot polynomials end to end.
MonomialMap phi_coordinates(std::size_t l, std::size_t m);

enum class SlotKind { self_reciprocal, primed, double_primed };

/// Factorization data of F_q[Y]/(Y^m - 1) shared by every decomposition over it.
struct QcRing {
    FieldPtr field;
    std::size_t m = 0;
    FactorClassification classification;
    /// Slot order g_1..g_s, h_1, h_1^*, ..., h_t, h_t^*.
    std::vector<Poly> factors;
    std::vector<FieldPtr> local_fields;
    /// e_f = 1 mod f, 0 mod (Y^m - 1)/f.
    std::vector<Poly> idempotents;
    std::vector<SlotKind> kinds;
    /// Slot of the reciprocal partner (itself for self-reciprocal slots).
    std::vector<std::size_t> partner;

    std::size_t slot_count() const noexcept { return factors.size(); }
};

/// Cached per (field, m). Throws NotCoprime unless gcd(m, q) = 1.
std::shared_ptr<const QcRing> qc_ring(const FieldPtr& field, std::size_t m);

/// Image of c under Y -> Y^-1 from F_q[Y]/(f) into target = F_q[Y]/(f^*).
LinearCode transport(const LinearCode& c, const FieldPtr& target);

struct ConstituentDecomposition {
    std::shared_ptr<const QcRing> ring;
    std::size_t l = 0;
    /// One length-l code per slot, over ring->local_fields[slot].
    std::vector<LinearCode> components;
};

ConstituentDecomposition crt_decompose(const QuasiCyclicCode& c);
QuasiCyclicCode crt_reconstruct(const ConstituentDecomposition& d);

/// Constituents of the Euclidean dual: Hermitian duals on self-reciprocal
/// slots, transported Euclidean duals of the partner on paired slots.
ConstituentDecomposition dual_constituents(const ConstituentDecomposition& d);

/// Kernel dual, checked against the constituent route (DualMismatch).
QuasiCyclicCode qc_dual(const QuasiCyclicCode& c);

struct SelfDualReport {
    bool componentwise = false;
    bool direct = false;
};
SelfDualReport selfdual_report(const QuasiCyclicCode& c);
bool is_selfdual(const QuasiCyclicCode& c);

bool selfdual_exists(std::uint64_t q, std::size_t l);
/// Constituents are l/2 copies of span{(1, gamma)} with gamma^2 = -1.
QuasiCyclicCode construct_selfdual_qc(const FieldPtr& field, std::size_t l, std::size_t m);

enum class IsodualResult { isodual, not_isodual, inconclusive };
enum class IsodualStrategy { components, bruteforce };

struct ComponentFinding {
    std::size_t slot = 0;
    SlotKind kind = SlotKind::self_reciprocal;
    bool equivalent = false;
    std::optional<MonomialMap> witness;
};

struct IsodualVerdict {
    IsodualResult result = IsodualResult::inconclusive;
    IsodualStrategy strategy = IsodualStrategy::components;
    /// Permutation of the l m coordinates taking the code onto its dual.
    std::optional<MonomialMap> witness;
    std::vector<ComponentFinding> component_report;
    std::string note;
};

/// components: per-slot permutation searches of length l; bruteforce: search of length l m.
/// Inputs beyond the cutoff give an inconclusive verdict.
IsodualVerdict is_isodual(const QuasiCyclicCode& c, IsodualStrategy strategy, std::size_t cutoff = 8);

struct ConstructedIsodual {
    QuasiCyclicCode code;
    IsodualVerdict verdict;
    /// Monomial equivalence to the dual, when lm is within the cutoff.
    std::optional<bool> monomial_isodual;
};

/// Every constituent set to the variant-B length-l isodual cyclic code over its local field.
ConstructedIsodual construct_isodual_qc(const FieldPtr& field, std::size_t l, std::size_t m, std::size_t cutoff = 8);

struct CyclicityReport {
    bool constituents = false;
    bool block_shift = false;
};
/// Shift invariance of every constituent, and of the code under the cyclic shift of the l slots.
CyclicityReport constituent_cyclicity(const QuasiCyclicCode& c);
bool constituents_all_cyclic(const QuasiCyclicCode& c);

/// Per-slot smallest multipliers taking c's constituents to d's, or none.
std::optional<std::vector<std::size_t>> qc_multiplier_equivalent(const QuasiCyclicCode& c, const QuasiCyclicCode& d);

struct OrbitEntry {
    /// Per-slot multiplier; 0 marks an unselected slot.
    std::vector<std::size_t> multipliers;
    std::string hash;
};

struct EnumerationReport {
    std::size_t r = 0;
    std::size_t p = 0;
    std::uint64_t tuples_counted = 0;
    std::uint64_t distinct_codes = 0;
    std::vector<OrbitEntry> orbit;
    std::vector<QuasiCyclicCode> distinct;
};

EnumerationReport enumerate_multiplier_equivalents(const QuasiCyclicCode& c);

/// Stable hex digest of a code's canonical generator matrix.
std::string code_hash(const LinearCode& c);

}  // namespace qckit

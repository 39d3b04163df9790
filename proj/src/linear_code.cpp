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

#include "qckit/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qckit {

MonomialMap MonomialMap::identity(std::size_t n) {
    MonomialMap m;
    m.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.perm[i] = i;
    m.diag.assign(n, 1);
    return m;
}

MonomialMap MonomialMap::permutation(std::vector<std::size_t> perm) {
    MonomialMap m;
    m.diag.assign(perm.size(), 1);
    m.perm = std::move(perm);
    return m;
}

MonomialMap MonomialMap::diagonal(std::vector<Elem> diag) {
    MonomialMap m = identity(diag.size());
    m.diag = std::move(diag);
    return m;
}

bool MonomialMap::is_permutation() const noexcept {
    return std::all_of(diag.begin(), diag.end(), [](Elem d) { return d == 1; });
}

void MonomialMap::validate(const Field& field) const {
    if (diag.size() != perm.size()) throw Error(ErrorKind::BadParameters, "monomial map shape mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || hit[p]) throw Error(ErrorKind::BadParameters, "monomial map is not a bijection");
        hit[p] = true;
    }
    for (auto d : diag)
        if (d == 0 || !field.contains(d)) throw Error(ErrorKind::BadParameters, "monomial scalars must be nonzero");
}

std::vector<Elem> MonomialMap::apply(const Field& field, std::span<const Elem> x) const {
    if (x.size() != perm.size()) throw Error(ErrorKind::LengthMismatch, "vector length does not match map");
    std::vector<Elem> y(x.size(), 0);
    for (std::size_t s = 0; s < x.size(); ++s) y[perm[s]] = field.mul(diag[perm[s]], x[s]);
    return y;
}

MonomialMap MonomialMap::then(const MonomialMap& next, const Field& field) const {
    if (next.size() != size()) throw Error(ErrorKind::LengthMismatch, "cannot compose maps of different lengths");
    MonomialMap out;
    out.perm.resize(size());
    out.diag.resize(size());
    const auto next_inv = next.inverse_perm();
    for (std::size_t s = 0; s < size(); ++s) out.perm[s] = next.perm[perm[s]];
    for (std::size_t j = 0; j < size(); ++j) out.diag[j] = field.mul(next.diag[j], diag[next_inv[j]]);
    return out;
}

std::vector<std::size_t> MonomialMap::inverse_perm() const {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t s = 0; s < perm.size(); ++s) inv[perm[s]] = s;
    return inv;
}

LinearCode::LinearCode(FieldPtr field, Matrix gen) : field_(std::move(field)), gen_(std::move(gen)) {
    pivots_ = rref(*field_, gen_);
}

LinearCode LinearCode::from_rows(FieldPtr field, std::size_t n, const std::vector<std::vector<Elem>>& rows) {
    Matrix m(0, n);
    for (const auto& r : rows) {
        if (r.size() != n) throw Error(ErrorKind::LengthMismatch, "row of length " + std::to_string(r.size()) +
                                                                      " in a code of length " + std::to_string(n));
        for (auto x : r)
            if (!field->contains(x)) throw Error(ErrorKind::FieldMismatch, "entry outside " + field->describe());
        m.append_row(r);
    }
    return LinearCode(std::move(field), std::move(m));
}

LinearCode LinearCode::from_matrix(FieldPtr field, Matrix gen) { return LinearCode(std::move(field), std::move(gen)); }

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(std::move(field), Matrix(0, n)); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return LinearCode(std::move(field), std::move(m));
}

std::vector<std::vector<Elem>> LinearCode::rows() const {
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < gen_.rows; ++i) out.emplace_back(gen_.row(i).begin(), gen_.row(i).end());
    return out;
}

bool LinearCode::contains(std::span<const Elem> v) const {
    if (v.size() != length()) throw Error(ErrorKind::LengthMismatch, "vector length does not match code");
    std::vector<Elem> r(v.begin(), v.end());
    const Field& f = *field_;
    for (std::size_t i = 0; i < gen_.rows; ++i) {
        const Elem c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, gen_(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

std::uint64_t LinearCode::size() const noexcept {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / field_->size()) return std::numeric_limits<std::uint64_t>::max();
        total *= field_->size();
    }
    return total;
}

bool operator==(const LinearCode& a, const LinearCode& b) noexcept {
    return a.gen_ == b.gen_ && same_field(a.field_, b.field_);
}

LinearCode euclidean_dual(const LinearCode& c) {
    return LinearCode::from_matrix(c.field(), kernel(*c.field(), c.generator()));
}

LinearCode conjugated(const LinearCode& c) {
    Matrix m = c.generator();
    for (auto& x : m.data) x = c.field()->conjugate(x);
    return LinearCode::from_matrix(c.field(), std::move(m));
}

LinearCode hermitian_dual(const LinearCode& c) { return euclidean_dual(conjugated(c)); }

LinearCode apply_monomial(const LinearCode& c, const MonomialMap& map) {
    if (map.size() != c.length()) throw Error(ErrorKind::LengthMismatch, "monomial map length does not match code");
    map.validate(*c.field());
    Matrix m(0, c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i) m.append_row(map.apply(*c.field(), c.generator().row(i)));
    return LinearCode::from_matrix(c.field(), std::move(m));
}

LinearCode direct_sum(std::span<const LinearCode> parts) {
    if (parts.empty()) throw Error(ErrorKind::BadParameters, "direct sum of nothing");
    std::size_t n = 0;
    for (const auto& p : parts) {
        require_same_field(parts.front().field(), p.field());
        n += p.length();
    }
    Matrix m(0, n);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.dimension(); ++i) {
            std::vector<Elem> row(n, 0);
            std::copy(p.generator().row(i).begin(), p.generator().row(i).end(), row.begin() + static_cast<std::ptrdiff_t>(offset));
            m.append_row(row);
        }
        offset += p.length();
    }
    return LinearCode::from_matrix(parts.front().field(), std::move(m));
}

MonomialMap shift_map(std::size_t n, std::size_t step) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = n ? (i + step) % n : 0;
    return MonomialMap::permutation(std::move(perm));
}

bool is_shift_invariant(const LinearCode& c, std::size_t step) {
    const std::size_t n = c.length();
    if (n == 0) return true;
    const auto shift = shift_map(n, step);
    for (const auto& row : c.rows())
        if (!c.contains(shift.apply(*c.field(), row))) return false;
    return true;
}

LinearCode puncture_to(const LinearCode& c, std::size_t first, std::size_t count) {
    if (first + count > c.length()) throw Error(ErrorKind::LengthMismatch, "projection outside the code");
    Matrix m(0, count);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        auto r = c.generator().row(i);
        m.append_row(r.subspan(first, count));
    }
    return LinearCode::from_matrix(c.field(), std::move(m));
}

void for_each_codeword(const LinearCode& c, const std::function<void(std::span<const Elem>)>& visit) {
    const std::uint64_t total = c.size();
    if (total > kEnumerationLimit)
        throw Error(ErrorKind::TooLarge, "code has more than " + std::to_string(kEnumerationLimit) + " codewords");
    const Field& f = *c.field();
    const std::size_t k = c.dimension(), n = c.length();
    std::vector<Elem> msg(k, 0), word(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t j = 0; j < k; ++j) {
            msg[j] = static_cast<Elem>(x % f.size());
            x /= f.size();
        }
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (msg[j] == 0) continue;
            auto row = c.generator().row(j);
            for (std::size_t i = 0; i < n; ++i)
                if (row[i] != 0) word[i] = f.add(word[i], f.mul(msg[j], row[i]));
        }
        visit(word);
    }
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
    std::vector<std::uint64_t> counts(c.length() + 1, 0);
    for_each_codeword(c, [&](std::span<const Elem> w) {
        counts[static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }))]++;
    });
    return counts;
}

namespace {

using Profile = std::vector<std::uint64_t>;

// Per-coordinate weight profile: profile[i][w] counts codewords of weight w that are
// nonzero at coordinate i. Invariant under monomial maps (up to reindexing).
std::vector<Profile> coordinate_profiles(const LinearCode& c) {
    const std::size_t n = c.length();
    std::vector<Profile> prof(n, Profile(n + 1, 0));
    for_each_codeword(c, [&](std::span<const Elem> w) {
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != 0) prof[i][wt]++;
    });
    return prof;
}

class Backtracker {
public:
    Backtracker(const LinearCode& c, const LinearCode& d, EquivalenceMode mode)
        : c_(c), field_(*c.field()), parity_(euclidean_dual(d).generator()), mode_(mode), n_(c.length()) {
        if (c.size() <= kEnumerationLimit && d.size() <= kEnumerationLimit) {
            prof_c_ = coordinate_profiles(c);
            prof_d_ = coordinate_profiles(d);
        }
        src_.assign(n_, 0);
        used_.assign(n_, false);
    }

    std::optional<MonomialMap> run() {
        if (descend(0)) return result_;
        return std::nullopt;
    }

private:
    bool compatible(std::size_t s, std::size_t i) const { return prof_c_.empty() || prof_c_[s] == prof_d_[i]; }

    bool descend(std::size_t i) {
        if (i == n_) return leaf();
        for (std::size_t s = 0; s < n_; ++s) {
            if (used_[s] || !compatible(s, i)) continue;
            used_[s] = true;
            src_[i] = s;
            if (descend(i + 1)) return true;
            used_[s] = false;
        }
        return false;
    }

    // Entry (r, i) of the permuted generator matrix.
    Elem g(std::size_t r, std::size_t i) const { return c_.generator()(r, src_[i]); }

    bool leaf() {
        const std::size_t k = c_.dimension();
        if (mode_ == EquivalenceMode::permutation) {
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t s = 0; s < parity_.rows; ++s) {
                    Elem acc = 0;
                    for (std::size_t i = 0; i < n_; ++i) acc = field_.add(acc, field_.mul(g(r, i), parity_(s, i)));
                    if (acc != 0) return false;
                }
            finish(std::vector<Elem>(n_, 1));
            return true;
        }
        // Solve for the diagonal: sum_i G'(r, i) d_i K(s, i) = 0 for all r, s.
        Matrix system(0, n_);
        std::vector<Elem> eq(n_);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t s = 0; s < parity_.rows; ++s) {
                for (std::size_t i = 0; i < n_; ++i) eq[i] = field_.mul(g(r, i), parity_(s, i));
                system.append_row(eq);
            }
        const Matrix sol = kernel(field_, system);
        if (auto diag = nowhere_zero(sol)) {
            finish(*diag);
            return true;
        }
        return false;
    }

    // Some vector of the row space of basis with no zero entry, scanning combinations in order.
    std::optional<std::vector<Elem>> nowhere_zero(const Matrix& basis) const {
        const std::size_t t = basis.rows;
        for (std::size_t i = 0; i < n_; ++i) {
            bool any = false;
            for (std::size_t r = 0; r < t; ++r) any = any || basis(r, i) != 0;
            if (!any) return std::nullopt;
        }
        const std::vector<Elem> ones(n_, 1);
        {
            const LinearCode space = LinearCode::from_matrix(c_.field(), basis);
            if (space.contains(ones)) return ones;
        }
        std::uint64_t total = 1;
        for (std::size_t r = 0; r < t && total <= (kEnumerationLimit << 4); ++r) total *= field_.size();
        total = std::min<std::uint64_t>(total, kEnumerationLimit << 4);
        std::vector<Elem> v(n_);
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            std::fill(v.begin(), v.end(), 0);
            std::uint64_t x = idx;
            for (std::size_t r = 0; r < t; ++r) {
                const Elem a = static_cast<Elem>(x % field_.size());
                x /= field_.size();
                if (a == 0) continue;
                for (std::size_t i = 0; i < n_; ++i) v[i] = field_.add(v[i], field_.mul(a, basis(r, i)));
            }
            if (std::all_of(v.begin(), v.end(), [](Elem e) { return e != 0; })) return v;
        }
        return std::nullopt;
    }

    void finish(std::vector<Elem> diag) {
        MonomialMap m;
        m.perm.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) m.perm[src_[i]] = i;
        m.diag = std::move(diag);
        result_ = std::move(m);
    }

    const LinearCode& c_;
    const Field& field_;
    Matrix parity_;
    EquivalenceMode mode_;
    std::size_t n_;
    std::vector<Profile> prof_c_, prof_d_;
    std::vector<std::size_t> src_;
    std::vector<bool> used_;
    MonomialMap result_;
};

}  // namespace

std::optional<MonomialMap> equivalence_search(const LinearCode& c, const LinearCode& d, const SearchOptions& opts) {
    require_same_field(c.field(), d.field());
    if (c.length() != d.length()) throw Error(ErrorKind::LengthMismatch, "codes of different lengths");
    if (c.length() > opts.cutoff)
        throw Error(ErrorKind::CutoffExceeded, "length " + std::to_string(c.length()) + " exceeds search cutoff " +
                                                   std::to_string(opts.cutoff));
    if (c.dimension() != d.dimension()) return std::nullopt;
    if (c == d) return MonomialMap::identity(c.length());
    if (c.size() <= kEnumerationLimit && weight_distribution(c) != weight_distribution(d)) return std::nullopt;
    auto found = Backtracker(c, d, opts.mode).run();
    if (found && apply_monomial(c, *found) != d) throw std::logic_error("equivalence witness failed verification");
    return found;
}

}  // namespace qckit

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

#include "qckit/linalg.hpp"

namespace qckit {

void Matrix::append_row(std::span<const Elem> r) {
    if (rows == 0 && cols == 0) cols = r.size();
    if (r.size() != cols) throw Error(ErrorKind::LengthMismatch, "row length mismatch");
    data.insert(data.end(), r.begin(), r.end());
    ++rows;
}

std::vector<std::size_t> rref(const Field& field, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        const Elem s = field.inv(m(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = field.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const Elem f = m(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = field.sub(m(i, j), field.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows = r;
    m.data.resize(r * m.cols);
    return pivots;
}

Matrix kernel(const Field& field, const Matrix& m) {
    Matrix a = m;
    const auto pivots = rref(field, a);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(0, m.cols);
    out.cols = m.cols;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elem> x(m.cols, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(a(r, f));
        out.append_row(x);
    }
    rref(field, out);
    return out;
}

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
    Elem s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && b[k] != 0) s = field.add(s, field.mul(a[k], b[k]));
    return s;
}

std::vector<Elem> mul_transpose(const Field& field, std::span<const Elem> v, const Matrix& m) {
    std::vector<Elem> out(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) out[i] = dot(field, v, m.row(i));
    return out;
}

}  // namespace qckit

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
#include <span>
#include <vector>

#include "qckit/galois.hpp"

namespace qckit {

/// Row-major dense matrix of element codes; the field is supplied by the caller.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::span<Elem> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const Elem> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
    void append_row(std::span<const Elem> r);

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduces in place to row-reduced echelon form, drops zero rows and returns
/// the pivot columns.
std::vector<std::size_t> rref(const Field& field, Matrix& m);

/// Basis (in RREF) of the right kernel {x : m x^T = 0}.
Matrix kernel(const Field& field, const Matrix& m);

/// Row vector times matrix transposed: entries sum_k v_k m(i, k).
std::vector<Elem> mul_transpose(const Field& field, std::span<const Elem> v, const Matrix& m);

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace qckit

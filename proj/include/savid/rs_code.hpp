/*
 * Copyright 2026 The savid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "savid/domain.hpp"
#include "savid/field.hpp"

namespace savid {

/// Dense row-major matrix over Z_p.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static FieldMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// Gauss-Jordan inverse; pivots on the first nonzero entry of each column.
/// Throws InvalidArgument when the matrix is singular or not square.
FieldMatrix invert(const FieldMatrix& m);

/// (n, k) Reed-Solomon code: information vector u ↦ (U(α_1), …, U(α_n)) with
/// U(X) = Σ_j u_j X^j. Node indices are 1-based throughout the public API.
class CodeParams {
public:
    /// α_i = ω^(i-1) for a primitive root ω of order next_pow2(n): the FFT path.
    CodeParams(std::size_t n, std::size_t k);
    /// Arbitrary pairwise-distinct evaluation points: naive encoding only.
    CodeParams(std::vector<FieldElement> alphas, std::size_t k);

    std::size_t n() const noexcept { return alphas_.size(); }
    std::size_t k() const noexcept { return k_; }
    std::span<const FieldElement> alphas() const noexcept { return alphas_; }
    /// α_i for 1-based node index i.
    const FieldElement& alpha(std::size_t index) const;
    /// Present when the points are the powers of a 2^s-th root of unity.
    const std::optional<EvaluationDomain>& domain() const noexcept { return domain_; }

    /// Generator column g_i = (α_i^0, …, α_i^(k-1)) for 1-based index i.
    std::vector<FieldElement> generator_column(std::size_t index) const;

private:
    std::vector<FieldElement> alphas_;
    std::size_t k_;
    std::optional<EvaluationDomain> domain_;
};

/// Codeword of an information vector (FFT path when the code has a domain).
std::vector<FieldElement> encode(const CodeParams& params, std::span<const FieldElement> info);
/// Horner evaluation at every α_i; the reference path.
std::vector<FieldElement> encode_naive(const CodeParams& params, std::span<const FieldElement> info);

struct Share {
    std::size_t index;  // 1-based
    FieldElement symbol;
};

/// G̃^-1 where G̃ = [g_{i_1} … g_{i_k}]; factored out so one inversion serves
/// every row of a coded matrix.
FieldMatrix invert_submatrix(const CodeParams& params, std::span<const std::size_t> indices);

/// u = c̃ · G̃^-1 for k shares with distinct indices in [1, n].
std::vector<FieldElement> decode(const CodeParams& params, std::span<const Share> shares);

/// Row vector times matrix, used with a precomputed invert_submatrix result.
std::vector<FieldElement> apply_inverse(const FieldMatrix& inverse, std::span<const FieldElement> symbols);

}  // namespace savid

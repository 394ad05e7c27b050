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

#include "savid/rs_code.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace savid {

FieldMatrix FieldMatrix::identity(std::size_t n) {
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one();
    return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product: dimension mismatch");
    FieldMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const FieldElement& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(l, j);
        }
    return out;
}

FieldMatrix invert(const FieldMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InvalidArgument("invert: matrix not square");
    FieldMatrix a = m;
    FieldMatrix inv = FieldMatrix::identity(n);
    auto swap_rows = [n](FieldMatrix& x, std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < n; ++c) std::swap(x(r1, c), x(r2, c));
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw InvalidArgument("invert: singular matrix");
        if (pivot != col) {
            swap_rows(a, pivot, col);
            swap_rows(inv, pivot, col);
        }
        const FieldElement scale = a(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const FieldElement factor = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

CodeParams::CodeParams(std::size_t n, std::size_t k) : k_(k) {
    if (k < 1 || k > n) throw InvalidArgument("code parameters require 1 <= k <= n");
    domain_.emplace(n);
    alphas_.reserve(n);
    FieldElement w = FieldElement::one();
    for (std::size_t i = 0; i < n; ++i) {
        alphas_.push_back(w);
        w *= domain_->generator();
    }
}

CodeParams::CodeParams(std::vector<FieldElement> alphas, std::size_t k) : alphas_(std::move(alphas)), k_(k) {
    if (k < 1 || k > alphas_.size()) throw InvalidArgument("code parameters require 1 <= k <= n");
    for (std::size_t i = 0; i < alphas_.size(); ++i)
        for (std::size_t j = i + 1; j < alphas_.size(); ++j)
            if (alphas_[i] == alphas_[j]) throw InvalidArgument("evaluation points must be distinct");
}

const FieldElement& CodeParams::alpha(std::size_t index) const {
    if (index < 1 || index > alphas_.size())
        throw InvalidArgument("node index " + std::to_string(index) + " out of range");
    return alphas_[index - 1];
}

std::vector<FieldElement> CodeParams::generator_column(std::size_t index) const {
    const FieldElement& a = alpha(index);
    std::vector<FieldElement> g(k_);
    g[0] = FieldElement::one();
    for (std::size_t j = 1; j < k_; ++j) g[j] = g[j - 1] * a;
    return g;
}

std::vector<FieldElement> encode_naive(const CodeParams& params, std::span<const FieldElement> info) {
    if (info.size() != params.k()) throw InvalidArgument("encode: info length must equal k");
    std::vector<FieldElement> out;
    out.reserve(params.n());
    for (const auto& a : params.alphas()) out.push_back(evaluate_polynomial(info, a));
    return out;
}

std::vector<FieldElement> encode(const CodeParams& params, std::span<const FieldElement> info) {
    if (info.size() != params.k()) throw InvalidArgument("encode: info length must equal k");
    if (!params.domain()) return encode_naive(params, info);
    std::vector<FieldElement> values(info.begin(), info.end());
    params.domain()->fft(values);
    values.resize(params.n());
    return values;
}

FieldMatrix invert_submatrix(const CodeParams& params, std::span<const std::size_t> indices) {
    const std::size_t k = params.k();
    if (indices.size() != k) throw InvalidArgument("invert_submatrix: need exactly k indices");
    std::set<std::size_t> seen;
    for (auto i : indices) {
        params.alpha(i);  // range check
        if (!seen.insert(i).second) throw InvalidArgument("duplicate share index " + std::to_string(i));
    }
    FieldMatrix g(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        auto column = params.generator_column(indices[c]);
        for (std::size_t r = 0; r < k; ++r) g(r, c) = column[r];
    }
    return invert(g);
}

std::vector<FieldElement> apply_inverse(const FieldMatrix& inverse, std::span<const FieldElement> symbols) {
    if (symbols.size() != inverse.rows()) throw InvalidArgument("apply_inverse: dimension mismatch");
    std::vector<FieldElement> out(inverse.cols());
    for (std::size_t r = 0; r < inverse.rows(); ++r) {
        const FieldElement& s = symbols[r];
        if (s.is_zero()) continue;
        for (std::size_t c = 0; c < inverse.cols(); ++c) out[c] += s * inverse(r, c);
    }
    return out;
}

std::vector<FieldElement> decode(const CodeParams& params, std::span<const Share> shares) {
    if (shares.size() != params.k()) throw InvalidArgument("decode: need exactly k shares");
    std::vector<std::size_t> indices;
    std::vector<FieldElement> symbols;
    for (const auto& s : shares) {
        indices.push_back(s.index);
        symbols.push_back(s.symbol);
    }
    return apply_inverse(invert_submatrix(params, indices), symbols);
}

}  // namespace savid

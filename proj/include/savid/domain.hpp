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
#include <span>
#include <vector>

#include "savid/field.hpp"

namespace savid {

/// Multiplicative subgroup {ω^0, …, ω^(size-1)} of Z_p with size a power of two.
class EvaluationDomain {
public:
    /// Smallest power-of-two domain holding at least min_size points.
    explicit EvaluationDomain(std::size_t min_size);

    std::size_t size() const noexcept { return size_; }
    unsigned log_size() const noexcept { return log_size_; }
    const FieldElement& generator() const noexcept { return omega_; }
    const FieldElement& generator_inverse() const noexcept { return omega_inv_; }
    const FieldElement& size_inverse() const noexcept { return size_inv_; }

    /// ω^i, 0-based.
    FieldElement element(std::size_t i) const noexcept { return omega_.pow(i % size_); }

    /// Coefficients (length <= size, zero-padded) -> evaluations at every domain point.
    void fft(std::vector<FieldElement>& values) const;
    /// Evaluations at every domain point -> coefficients.
    void ifft(std::vector<FieldElement>& values) const;

    /// L_i(x) for all i, where L_i is the Lagrange basis polynomial of the domain.
    std::vector<FieldElement> lagrange_at(const FieldElement& x) const;

private:
    std::size_t size_;
    unsigned log_size_;
    FieldElement omega_;
    FieldElement omega_inv_;
    FieldElement size_inv_;
};

/// Radix-2 in-place transform: values[j] <- Σ_i values[i]·root^(i·j).
/// values.size() must be a power of two and root a primitive root of that order.
template <class T, class Mul>
void radix2_transform(std::vector<T>& values, const FieldElement& root, Mul&& mul_scalar) {
    const std::size_t n = values.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(values[i], values[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const FieldElement step = root.pow(n / len);
        std::vector<FieldElement> twiddles(len / 2);
        FieldElement w = FieldElement::one();
        for (auto& tw : twiddles) {
            tw = w;
            w *= step;
        }
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                T u = values[start + k];
                T v = mul_scalar(values[start + k + len / 2], twiddles[k]);
                values[start + k] = u + v;
                values[start + k + len / 2] = u - v;
            }
        }
    }
}

/// Horner evaluation of Σ coeffs[j]·x^j.
FieldElement evaluate_polynomial(std::span<const FieldElement> coeffs, const FieldElement& x) noexcept;

}  // namespace savid

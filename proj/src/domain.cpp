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

#include "savid/domain.hpp"

namespace savid {

EvaluationDomain::EvaluationDomain(std::size_t min_size) {
    if (min_size == 0) throw InvalidArgument("domain size must be positive");
    size_ = next_pow2(min_size);
    log_size_ = 0;
    while ((std::size_t{1} << log_size_) < size_) ++log_size_;
    omega_ = FieldElement::root_of_unity(log_size_);
    omega_inv_ = omega_.inverse();
    size_inv_ = FieldElement(size_).inverse();
}

void EvaluationDomain::fft(std::vector<FieldElement>& values) const {
    if (values.size() > size_) throw InvalidArgument("fft input longer than domain");
    values.resize(size_);
    radix2_transform(values, omega_, [](const FieldElement& a, const FieldElement& w) { return a * w; });
}

void EvaluationDomain::ifft(std::vector<FieldElement>& values) const {
    if (values.size() > size_) throw InvalidArgument("ifft input longer than domain");
    values.resize(size_);
    radix2_transform(values, omega_inv_, [](const FieldElement& a, const FieldElement& w) { return a * w; });
    for (auto& v : values) v *= size_inv_;
}

std::vector<FieldElement> EvaluationDomain::lagrange_at(const FieldElement& x) const {
    // L_i(x) = ω^i (x^N - 1) / (N (x - ω^i)).
    std::vector<FieldElement> out(size_);
    FieldElement w = FieldElement::one();
    const FieldElement vanishing = x.pow(size_) - FieldElement::one();
    if (vanishing.is_zero()) {
        for (std::size_t i = 0; i < size_; ++i) {
            out[i] = (x == w) ? FieldElement::one() : FieldElement::zero();
            w *= omega_;
        }
        return out;
    }
    std::vector<FieldElement> denominators(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        denominators[i] = x - w;
        out[i] = w;
        w *= omega_;
    }
    batch_invert(denominators);
    const FieldElement scale = vanishing * size_inv_;
    for (std::size_t i = 0; i < size_; ++i) out[i] *= denominators[i] * scale;
    return out;
}

FieldElement evaluate_polynomial(std::span<const FieldElement> coeffs, const FieldElement& x) noexcept {
    FieldElement acc;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
    return acc;
}

}  // namespace savid

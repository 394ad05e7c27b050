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

#include "savid/field.hpp"

#include <cstring>

namespace savid {

namespace {

constexpr std::array<std::uint64_t, 4> kModulus = {
    0xffffffff00000001ULL, 0x53bda402fffe5bfeULL,
    0x3339d80809a1d805ULL, 0x73eda753299d7d48ULL};

}  // namespace

FieldElement::FieldElement(std::uint64_t small) noexcept {
    const std::uint64_t limbs[4] = {small, 0, 0, 0};
    blst_fr_from_uint64(&v_, limbs);
}

FieldElement FieldElement::from_limbs(const std::array<std::uint64_t, 4>& limbs) {
    for (int i = 3; i >= 0; --i) {
        if (limbs[i] < kModulus[i]) break;
        if (limbs[i] > kModulus[i] || i == 0)
            throw DecodeError("field element not canonical");
    }
    FieldElement out;
    blst_fr_from_uint64(&out.v_, limbs.data());
    return out;
}

std::array<std::uint64_t, 4> FieldElement::to_limbs() const noexcept {
    std::array<std::uint64_t, 4> out{};
    blst_uint64_from_fr(out.data(), &v_);
    return out;
}

FieldElement FieldElement::from_bytes(ByteSpan bytes) {
    if (bytes.size() != kBytes) throw DecodeError("field element must be 32 bytes");
    blst_scalar s;
    blst_scalar_from_lendian(&s, bytes.data());
    if (!blst_scalar_fr_check(&s)) throw DecodeError("field element not canonical");
    FieldElement out;
    blst_fr_from_scalar(&out.v_, &s);
    return out;
}

std::array<std::uint8_t, FieldElement::kBytes> FieldElement::to_bytes() const noexcept {
    blst_scalar s = to_scalar();
    std::array<std::uint8_t, kBytes> out{};
    blst_lendian_from_scalar(out.data(), &s);
    return out;
}

FieldElement FieldElement::from_bytes_wide(ByteSpan bytes) noexcept {
    blst_scalar s;
    blst_scalar_from_le_bytes(&s, bytes.data(), bytes.size());
    FieldElement out;
    blst_fr_from_scalar(&out.v_, &s);
    return out;
}

bool FieldElement::is_zero() const noexcept {
    static const blst_fr kZero{};
    return std::memcmp(&v_, &kZero, sizeof(v_)) == 0;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) noexcept {
    blst_fr_add(&v_, &v_, &o.v_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) noexcept {
    blst_fr_sub(&v_, &v_, &o.v_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) noexcept {
    blst_fr_mul(&v_, &v_, &o.v_);
    return *this;
}

FieldElement FieldElement::operator-() const noexcept {
    FieldElement out;
    blst_fr_cneg(&out.v_, &v_, true);
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero");
    FieldElement out;
    blst_fr_eucl_inverse(&out.v_, &v_);
    return out;
}

FieldElement FieldElement::pow(std::uint64_t e) const noexcept {
    return pow(std::array<std::uint64_t, 4>{e, 0, 0, 0});
}

FieldElement FieldElement::pow(const std::array<std::uint64_t, 4>& e) const noexcept {
    FieldElement result = one();
    for (int limb = 3; limb >= 0; --limb) {
        for (int bit = 63; bit >= 0; --bit) {
            result *= result;
            if ((e[limb] >> bit) & 1) result *= *this;
        }
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return std::memcmp(&a.v_, &b.v_, sizeof(a.v_)) == 0;
}

blst_scalar FieldElement::to_scalar() const noexcept {
    blst_scalar s;
    blst_scalar_from_fr(&s, &v_);
    return s;
}

FieldElement FieldElement::root_of_unity(unsigned log_order) {
    if (log_order > kTwoAdicity) throw InvalidArgument("root of unity order exceeds 2^32");
    static const FieldElement kMaxRoot = [] {
        // (p - 1) >> 32; the low limb of p - 1 is 0xffffffff00000000.
        std::array<std::uint64_t, 4> e{};
        for (int i = 0; i < 4; ++i) {
            std::uint64_t lo = (i == 0) ? kModulus[0] - 1 : kModulus[i];
            std::uint64_t hi = (i < 3) ? kModulus[i + 1] : 0;
            e[i] = (lo >> 32) | (hi << 32);
        }
        return FieldElement(7).pow(e);
    }();
    FieldElement w = kMaxRoot;
    for (unsigned i = log_order; i < kTwoAdicity; ++i) w *= w;
    return w;
}

void batch_invert(std::span<FieldElement> values) {
    if (values.empty()) return;
    std::vector<FieldElement> prefix(values.size());
    FieldElement acc = FieldElement::one();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero()) throw InvalidArgument("batch_invert: zero entry");
        prefix[i] = acc;
        acc *= values[i];
    }
    FieldElement inv = acc.inverse();
    for (std::size_t i = values.size(); i-- > 0;) {
        FieldElement next = inv * values[i];
        values[i] = inv * prefix[i];
        inv = next;
    }
}

}  // namespace savid

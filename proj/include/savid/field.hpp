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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <blst.h>

#include "savid/common.hpp"

namespace savid {

/// Element of the BLS12-381 scalar field Z_p,
/// p = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001.
///
/// Stored in Montgomery form (blst_fr), always fully reduced, so equality is
/// a plain limb comparison. The external encoding is the 32-byte
/// little-endian canonical integer.
class FieldElement {
public:
    static constexpr std::size_t kBytes = 32;
    /// 2-adicity of p - 1: the multiplicative group has a subgroup of order 2^32.
    static constexpr unsigned kTwoAdicity = 32;

    FieldElement() noexcept : v_{} {}
    explicit FieldElement(std::uint64_t small) noexcept;

    static FieldElement zero() noexcept { return FieldElement(); }
    static FieldElement one() noexcept { return FieldElement(1); }

    /// Little-endian 256-bit integer, limb 0 least significant. Throws
    /// DecodeError when the value is not < p.
    static FieldElement from_limbs(const std::array<std::uint64_t, 4>& limbs);
    std::array<std::uint64_t, 4> to_limbs() const noexcept;

    /// Canonical 32-byte little-endian encoding; rejects values >= p.
    static FieldElement from_bytes(ByteSpan bytes);
    std::array<std::uint8_t, kBytes> to_bytes() const noexcept;

    /// Reduces an arbitrary-length little-endian integer mod p. With 64
    /// uniform input bytes the result is statistically uniform.
    static FieldElement from_bytes_wide(ByteSpan bytes) noexcept;

    bool is_zero() const noexcept;

    FieldElement& operator+=(const FieldElement& o) noexcept;
    FieldElement& operator-=(const FieldElement& o) noexcept;
    FieldElement& operator*=(const FieldElement& o) noexcept;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) noexcept { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) noexcept { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) noexcept { return a *= b; }
    FieldElement operator-() const noexcept;

    /// Throws InvalidArgument for zero.
    FieldElement inverse() const;
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    FieldElement pow(std::uint64_t e) const noexcept;
    FieldElement pow(const std::array<std::uint64_t, 4>& e) const noexcept;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;

    /// blst scalar (canonical little-endian bytes) for group multiplication.
    blst_scalar to_scalar() const noexcept;

    const blst_fr& raw() const noexcept { return v_; }

    /// Primitive 2^log_order-th root of unity, log_order <= 32. Derived from
    /// the multiplicative generator 7.
    static FieldElement root_of_unity(unsigned log_order);

private:
    blst_fr v_;
};

/// In-place batch inversion (Montgomery's trick). Zero entries are rejected.
void batch_invert(std::span<FieldElement> values);

}  // namespace savid

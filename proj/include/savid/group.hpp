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
#include <span>
#include <vector>

#include <blst.h>

#include "savid/field.hpp"

namespace savid {

/// Point of the BLS12-381 G1 subgroup (additive notation).
class G1 {
public:
    static constexpr std::size_t kCompressedBytes = 48;
    using Compressed = std::array<std::uint8_t, kCompressedBytes>;

    G1() noexcept : p_{} {}  // identity
    explicit G1(const blst_p1& p) noexcept : p_(p) {}
    explicit G1(const blst_p1_affine& a) noexcept { blst_p1_from_affine(&p_, &a); }

    static G1 identity() noexcept { return G1(); }
    static G1 generator() noexcept { return G1(*blst_p1_generator()); }

    bool is_identity() const noexcept { return blst_p1_is_inf(&p_); }

    G1& operator+=(const G1& o) noexcept {
        blst_p1_add_or_double(&p_, &p_, &o.p_);
        return *this;
    }
    G1& operator-=(const G1& o) noexcept { return *this += -o; }
    friend G1 operator+(G1 a, const G1& b) noexcept { return a += b; }
    friend G1 operator-(G1 a, const G1& b) noexcept { return a -= b; }
    G1 operator-() const noexcept {
        G1 out = *this;
        blst_p1_cneg(&out.p_, true);
        return out;
    }
    friend G1 operator*(const G1& p, const FieldElement& s) noexcept;
    friend G1 operator*(const FieldElement& s, const G1& p) noexcept { return p * s; }

    friend bool operator==(const G1& a, const G1& b) noexcept { return blst_p1_is_equal(&a.p_, &b.p_); }

    Compressed compress() const noexcept;
    /// Rejects encodings that are off-curve or outside the prime-order subgroup.
    static G1 decompress(ByteSpan bytes);

    blst_p1_affine to_affine() const noexcept;
    const blst_p1& raw() const noexcept { return p_; }

private:
    blst_p1 p_;
};

/// Point of the BLS12-381 G2 subgroup; only what pairing checks need.
class G2 {
public:
    static constexpr std::size_t kCompressedBytes = 96;
    using Compressed = std::array<std::uint8_t, kCompressedBytes>;

    G2() noexcept : p_{} {}
    explicit G2(const blst_p2& p) noexcept : p_(p) {}

    static G2 generator() noexcept { return G2(*blst_p2_generator()); }
    bool is_identity() const noexcept { return blst_p2_is_inf(&p_); }

    friend G2 operator+(G2 a, const G2& b) noexcept {
        blst_p2_add_or_double(&a.p_, &a.p_, &b.p_);
        return a;
    }
    G2 operator-() const noexcept {
        G2 out = *this;
        blst_p2_cneg(&out.p_, true);
        return out;
    }
    friend G2 operator-(const G2& a, const G2& b) noexcept { return a + (-b); }
    friend G2 operator*(const G2& p, const FieldElement& s) noexcept;
    friend bool operator==(const G2& a, const G2& b) noexcept { return blst_p2_is_equal(&a.p_, &b.p_); }

    Compressed compress() const noexcept;
    static G2 decompress(ByteSpan bytes);

    blst_p2_affine to_affine() const noexcept;

private:
    blst_p2 p_;
};

/// Affine copy of a G1 vector, the layout multi-exponentiation wants.
std::vector<blst_p1_affine> to_affine(std::span<const G1> points);

/// Σ scalars[i]·bases[i]. Uses Pippenger for large inputs.
G1 msm(std::span<const blst_p1_affine> bases, std::span<const FieldElement> scalars);
G1 msm(std::span<const G1> bases, std::span<const FieldElement> scalars);

/// e(a1, b1) == e(a2, b2).
bool pairing_equal(const G1& a1, const G2& b1, const G1& a2, const G2& b2);

}  // namespace savid

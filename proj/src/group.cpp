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

#include "savid/group.hpp"

#include <memory>

namespace savid {

namespace {

// Below this size a plain double-and-add sum beats Pippenger's setup cost.
constexpr std::size_t kPippengerThreshold = 16;

}  // namespace

G1 operator*(const G1& p, const FieldElement& s) noexcept {
    const blst_scalar k = s.to_scalar();
    G1 out;
    blst_p1_mult(&out.p_, &p.p_, k.b, 255);
    return out;
}

G1::Compressed G1::compress() const noexcept {
    Compressed out{};
    blst_p1_compress(out.data(), &p_);
    return out;
}

G1 G1::decompress(ByteSpan bytes) {
    if (bytes.size() != kCompressedBytes) throw DecodeError("G1 point must be 48 bytes");
    blst_p1_affine a;
    if (blst_p1_uncompress(&a, bytes.data()) != BLST_SUCCESS) throw DecodeError("invalid G1 encoding");
    if (!blst_p1_affine_in_g1(&a)) throw DecodeError("G1 point not in prime-order subgroup");
    return G1(a);
}

blst_p1_affine G1::to_affine() const noexcept {
    blst_p1_affine a;
    blst_p1_to_affine(&a, &p_);
    return a;
}

G2 operator*(const G2& p, const FieldElement& s) noexcept {
    const blst_scalar k = s.to_scalar();
    G2 out;
    blst_p2_mult(&out.p_, &p.p_, k.b, 255);
    return out;
}

G2::Compressed G2::compress() const noexcept {
    Compressed out{};
    blst_p2_compress(out.data(), &p_);
    return out;
}

G2 G2::decompress(ByteSpan bytes) {
    if (bytes.size() != kCompressedBytes) throw DecodeError("G2 point must be 96 bytes");
    blst_p2_affine a;
    if (blst_p2_uncompress(&a, bytes.data()) != BLST_SUCCESS) throw DecodeError("invalid G2 encoding");
    if (!blst_p2_affine_in_g2(&a)) throw DecodeError("G2 point not in prime-order subgroup");
    blst_p2 p;
    blst_p2_from_affine(&p, &a);
    return G2(p);
}

blst_p2_affine G2::to_affine() const noexcept {
    blst_p2_affine a;
    blst_p2_to_affine(&a, &p_);
    return a;
}

std::vector<blst_p1_affine> to_affine(std::span<const G1> points) {
    std::vector<blst_p1_affine> out(points.size());
    if (points.empty()) return out;
    std::vector<const blst_p1*> ptrs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) ptrs[i] = &points[i].raw();
    // blst batch conversion does not cope with points at infinity.
    bool any_identity = false;
    for (const auto& p : points) any_identity |= p.is_identity();
    if (any_identity) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = points[i].to_affine();
        return out;
    }
    const blst_p1* const* list = ptrs.data();
    blst_p1s_to_affine(out.data(), list, points.size());
    return out;
}

G1 msm(std::span<const blst_p1_affine> bases, std::span<const FieldElement> scalars) {
    if (bases.size() < scalars.size()) throw InvalidArgument("msm: more scalars than bases");
    const std::size_t n = scalars.size();
    if (n == 0) return G1::identity();
    if (n < kPippengerThreshold) {
        G1 acc;
        for (std::size_t i = 0; i < n; ++i) {
            if (scalars[i].is_zero()) continue;
            acc += G1(bases[i]) * scalars[i];
        }
        return acc;
    }
    std::vector<blst_scalar> ks;
    std::vector<const std::uint8_t*> kptrs;
    std::vector<const blst_p1_affine*> pptrs;
    ks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (scalars[i].is_zero() || blst_p1_affine_is_inf(&bases[i])) continue;
        ks.push_back(scalars[i].to_scalar());
        pptrs.push_back(&bases[i]);
    }
    for (const auto& k : ks) kptrs.push_back(k.b);
    if (pptrs.empty()) return G1::identity();
    const std::size_t scratch_bytes = blst_p1s_mult_pippenger_scratch_sizeof(pptrs.size());
    auto scratch = std::make_unique<limb_t[]>(scratch_bytes / sizeof(limb_t) + 1);
    blst_p1 out;
    blst_p1s_mult_pippenger(&out, pptrs.data(), pptrs.size(), kptrs.data(), 255, scratch.get());
    return G1(out);
}

G1 msm(std::span<const G1> bases, std::span<const FieldElement> scalars) {
    if (bases.size() < scalars.size()) throw InvalidArgument("msm: more scalars than bases");
    auto affine = to_affine(bases.first(scalars.size()));
    return msm(std::span<const blst_p1_affine>(affine), scalars);
}

bool pairing_equal(const G1& a1, const G2& b1, const G1& a2, const G2& b2) {
    // e(a1, b1) · e(-a2, b2) == 1; identity arguments contribute 1.
    blst_fp12 acc = *blst_fp12_one();
    auto accumulate = [&acc](const G1& p, const G2& q) {
        if (p.is_identity() || q.is_identity()) return;
        const blst_p1_affine pa = p.to_affine();
        const blst_p2_affine qa = q.to_affine();
        blst_fp12 ml;
        blst_miller_loop(&ml, &qa, &pa);
        blst_fp12_mul(&acc, &acc, &ml);
    };
    accumulate(a1, b1);
    accumulate(-a2, b2);
    blst_fp12 result;
    blst_final_exp(&result, &acc);
    return blst_fp12_is_one(&result);
}

}  // namespace savid

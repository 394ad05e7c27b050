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

#include "savid/commitments.hpp"

#include <string>

#include <sodium.h>

#include "savid/crypto.hpp"
#include "savid/parallel.hpp"
#include "savid/rng.hpp"

namespace savid {

namespace {

constexpr std::string_view kSetupTag = "semi-avid-pr/v1/dev-setup";

FieldElement trapdoor_from_seed(ByteSpan seed, std::uint64_t attempt) {
    ensure_sodium();
    ByteWriter w;
    w.raw(kSetupTag);
    w.u64(attempt);
    w.raw(seed);
    std::array<std::uint8_t, crypto_hash_sha512_BYTES> wide{};
    crypto_hash_sha512(wide.data(), w.bytes().data(), w.bytes().size());
    return FieldElement::from_bytes_wide(wide);
}

std::vector<FieldElement> interpolate(const CommitParams& params, std::span<const FieldElement> v) {
    if (v.empty() || v.size() > params.max_len())
        throw InvalidArgument("vector length " + std::to_string(v.size()) + " outside [1, " +
                              std::to_string(params.max_len()) + "]");
    std::vector<FieldElement> coeffs(v.begin(), v.end());
    params.domain().ifft(coeffs);
    return coeffs;
}

}  // namespace

CommitParams::CommitParams(std::size_t max_len, std::vector<G1> powers, std::vector<G1> lagrange, G2 verifier_key,
                           std::uint8_t flag)
    : max_len_(max_len),
      domain_(max_len),
      powers_(std::move(powers)),
      lagrange_(std::move(lagrange)),
      verifier_key_(verifier_key),
      flag_(flag) {
    if (max_len == 0) throw InvalidArgument("max_len must be at least 1");
    if (powers_.size() != domain_.size() || lagrange_.size() != domain_.size())
        throw InvalidArgument("parameter vectors must match the domain size");
    powers_affine_ = to_affine(powers_);
    lagrange_affine_ = to_affine(lagrange_);
}

Bytes CommitParams::serialize() const {
    ByteWriter w;
    w.raw(kMagic);
    w.u8(flag_);
    w.u64(max_len_);
    w.raw(verifier_key_.compress());
    for (const auto& p : powers_) w.raw(p.compress());
    for (const auto& p : lagrange_) w.raw(p.compress());
    return std::move(w).take();
}

CommitParams CommitParams::deserialize(ByteSpan bytes) {
    ByteReader r(bytes);
    r.expect_magic(kMagic);
    const std::uint8_t flag = r.u8();
    if (flag != kFlagInsecureDev && flag != kFlagCeremony) throw DecodeError("unknown parameter flag");
    const std::uint64_t max_len = r.u64();
    if (max_len == 0 || max_len > (std::uint64_t{1} << FieldElement::kTwoAdicity))
        throw DecodeError("max_len out of range");
    const std::size_t n = next_pow2(max_len);
    if (r.remaining() != G2::kCompressedBytes + 2 * n * G1::kCompressedBytes)
        throw DecodeError("parameter file size does not match max_len");
    G2 vk = G2::decompress(r.raw(G2::kCompressedBytes));
    std::vector<ByteSpan> raw(2 * n);
    for (auto& s : raw) s = r.raw(G1::kCompressedBytes);
    std::vector<G1> points(2 * n);
    parallel_for(points.size(), std::thread::hardware_concurrency(),
                 [&](std::size_t i) { points[i] = G1::decompress(raw[i]); });
    std::vector<G1> powers(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<G1> lagrange(points.begin() + static_cast<std::ptrdiff_t>(n), points.end());
    return CommitParams(max_len, std::move(powers), std::move(lagrange), vk, flag);
}

CommitParams setup(std::size_t max_len, ByteSpan seed, unsigned threads) {
    if (max_len == 0) throw InvalidArgument("setup: max_len must be at least 1");
    const EvaluationDomain domain(max_len);
    const std::size_t n = domain.size();

    // A trapdoor inside the domain would make the Lagrange formula degenerate.
    FieldElement r;
    for (std::uint64_t attempt = 0;; ++attempt) {
        r = trapdoor_from_seed(seed, attempt);
        if (!r.is_zero() && !(r.pow(n) == FieldElement::one())) break;
    }

    std::vector<FieldElement> power_scalars(n);
    power_scalars[0] = FieldElement::one();
    for (std::size_t j = 1; j < n; ++j) power_scalars[j] = power_scalars[j - 1] * r;
    const std::vector<FieldElement> lagrange_scalars = domain.lagrange_at(r);

    const G1 g = G1::generator();
    std::vector<G1> powers(n), lagrange(n);
    parallel_for(n, threads, [&](std::size_t j) {
        powers[j] = g * power_scalars[j];
        lagrange[j] = g * lagrange_scalars[j];
    });
    const G2 vk = G2::generator() * r;
    r = FieldElement::zero();

    CommitParams params(max_len, std::move(powers), std::move(lagrange), vk, CommitParams::kFlagInsecureDev);
    if (!verify_setup(params)) throw Error("setup produced inconsistent parameters");
    return params;
}

bool verify_setup(const CommitParams& params) {
    const auto powers = params.powers_affine();
    const std::size_t n = powers.size();
    if (!(G1(powers[0]) == G1::generator())) return false;
    if (params.verifier_key().is_identity()) return false;

    // Fresh challenges: a parameter producer must not be able to predict them.
    Csprng rng(Csprng::random_seed());
    if (n > 1) {
        std::vector<FieldElement> rho(n - 1);
        for (auto& x : rho) x = rng.field_element();
        const G1 shifted = msm(powers.subspan(1), rho);
        const G1 base = msm(powers.first(n - 1), rho);
        if (!pairing_equal(shifted, G2::generator(), base, params.verifier_key())) return false;
    }

    std::vector<FieldElement> v(n);
    for (auto& x : v) x = rng.field_element();
    const G1 via_lagrange = msm(params.lagrange_affine(), v);
    params.domain().ifft(v);
    const G1 via_powers = msm(powers, v);
    return via_lagrange == via_powers;
}

VectorCommitment commit(const CommitParams& params, std::span<const FieldElement> v) {
    if (v.empty() || v.size() > params.max_len())
        throw InvalidArgument("vector length " + std::to_string(v.size()) + " outside [1, " +
                              std::to_string(params.max_len()) + "]");
    return VectorCommitment(msm(params.lagrange_affine(), v));
}

VectorCommitment commit_via_coefficients(const CommitParams& params, std::span<const FieldElement> v) {
    const auto coeffs = interpolate(params, v);
    return VectorCommitment(msm(params.powers_affine(), coeffs));
}

VectorCommitment combine(std::span<const FieldElement> coeffs, std::span<const VectorCommitment> comms) {
    if (coeffs.size() != comms.size() || coeffs.empty())
        throw InvalidArgument("combine: need equal, nonzero numbers of coefficients and commitments");
    std::vector<G1> points;
    points.reserve(comms.size());
    for (const auto& c : comms) points.push_back(c.point());
    return VectorCommitment(msm(std::span<const G1>(points), coeffs));
}

VectorCommitment encode_commitment_at(const CodeParams& code, std::span<const VectorCommitment> comms,
                                      std::size_t index) {
    if (comms.size() != code.k()) throw InvalidArgument("encode_commitments: need exactly k commitments");
    return combine(code.generator_column(index), comms);
}

std::vector<VectorCommitment> encode_commitments(const CodeParams& code, std::span<const VectorCommitment> comms,
                                                 unsigned threads) {
    if (comms.size() != code.k()) throw InvalidArgument("encode_commitments: need exactly k commitments");
    std::vector<G1> points;
    points.reserve(comms.size());
    for (const auto& c : comms) points.push_back(c.point());
    const auto affine = to_affine(points);
    std::vector<VectorCommitment> out(code.n());
    parallel_for(code.n(), threads, [&](std::size_t i) {
        out[i] = VectorCommitment(msm(std::span<const blst_p1_affine>(affine), code.generator_column(i + 1)));
    });
    return out;
}

std::vector<VectorCommitment> encode_commitments_fft(const CodeParams& code, std::span<const VectorCommitment> comms) {
    if (comms.size() != code.k()) throw InvalidArgument("encode_commitments: need exactly k commitments");
    if (!code.domain()) throw InvalidArgument("encode_commitments_fft: code has no FFT domain");
    std::vector<G1> values(code.domain()->size());
    for (std::size_t j = 0; j < comms.size(); ++j) values[j] = comms[j].point();
    radix2_transform(values, code.domain()->generator(),
                     [](const G1& p, const FieldElement& w) { return w == FieldElement::one() ? p : p * w; });
    std::vector<VectorCommitment> out;
    out.reserve(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) out.emplace_back(values[i]);
    return out;
}

EntryOpeningProof open_entry(const CommitParams& params, std::span<const FieldElement> v, std::size_t i) {
    if (i < 1 || i > v.size()) throw InvalidArgument("open_entry: index out of range");
    const auto coeffs = interpolate(params, v);
    const FieldElement z = params.domain().element(i - 1);
    // Synthetic division by (X - z); the remainder is V(z) = v[i-1].
    const std::size_t n = coeffs.size();
    std::vector<FieldElement> quotient(n > 1 ? n - 1 : 0);
    FieldElement carry;
    for (std::size_t j = n; j-- > 1;) {
        carry = coeffs[j] + carry * z;
        quotient[j - 1] = carry;
    }
    return {v[i - 1], EntryWitness(msm(params.powers_affine(), quotient))};
}

bool verify_entry(const CommitParams& params, const VectorCommitment& comm, std::size_t i, const FieldElement& value,
                  const EntryWitness& witness) {
    if (i < 1 || i > params.domain().size()) return false;
    const FieldElement z = params.domain().element(i - 1);
    const G1 lhs = comm.point() - G1::generator() * value;
    const G2 shifted_key = params.verifier_key() - G2::generator() * z;
    return pairing_equal(lhs, G2::generator(), witness.point(), shifted_key);
}

VerifyStatus verify_entry_bytes(const CommitParams& params, ByteSpan comm, std::size_t i, ByteSpan value,
                                ByteSpan witness) {
    try {
        const auto c = VectorCommitment::from_bytes(comm);
        const auto y = FieldElement::from_bytes(value);
        const auto w = EntryWitness::from_bytes(witness);
        return verify_entry(params, c, i, y, w) ? VerifyStatus::Valid : VerifyStatus::Invalid;
    } catch (const DecodeError&) {
        return VerifyStatus::Malformed;
    }
}

}  // namespace savid

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

// Linearly homomorphic vector commitments built from KZG polynomial
// commitments over BLS12-381.
//
// A vector v of length len <= max_len is identified with the polynomial
// V(X) of degree < N interpolating (v_0, …, v_{len-1}, 0, …, 0) on the
// power-of-two domain {ω^0, …, ω^(N-1)}, N = next_pow2(max_len). The
// commitment is g^V(r) for the trapdoor r erased after setup. Because the
// map v ↦ V is linear, Commit(αv + βw) = α·Commit(v) + β·Commit(w), which
// is what lets storage nodes check coded chunks against uncoded
// commitments.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "savid/domain.hpp"
#include "savid/group.hpp"
#include "savid/rs_code.hpp"

namespace savid {

class VectorCommitment {
public:
    static constexpr std::size_t kBytes = G1::kCompressedBytes;

    VectorCommitment() = default;
    explicit VectorCommitment(const G1& point) : point_(point) {}

    const G1& point() const noexcept { return point_; }
    G1::Compressed to_bytes() const noexcept { return point_.compress(); }
    /// Throws DecodeError for off-curve or non-subgroup encodings.
    static VectorCommitment from_bytes(ByteSpan bytes) { return VectorCommitment(G1::decompress(bytes)); }

    friend bool operator==(const VectorCommitment&, const VectorCommitment&) = default;

private:
    G1 point_;
};

/// Commitment to the quotient (V(X) - V(z)) / (X - z).
class EntryWitness {
public:
    static constexpr std::size_t kBytes = G1::kCompressedBytes;

    EntryWitness() = default;
    explicit EntryWitness(const G1& point) : point_(point) {}

    const G1& point() const noexcept { return point_; }
    G1::Compressed to_bytes() const noexcept { return point_.compress(); }
    static EntryWitness from_bytes(ByteSpan bytes) { return EntryWitness(G1::decompress(bytes)); }

    friend bool operator==(const EntryWitness&, const EntryWitness&) = default;

private:
    G1 point_;
};

/// Public parameters: coefficient-basis powers g^(r^j), Lagrange-basis
/// powers g^(L_i(r)), and the verifier key g2^r. Immutable after setup.
class CommitParams {
public:
    static constexpr std::string_view kMagic = "SAVIDPP1";
    static constexpr std::uint8_t kFlagInsecureDev = 1;
    static constexpr std::uint8_t kFlagCeremony = 0;

    CommitParams(std::size_t max_len, std::vector<G1> powers, std::vector<G1> lagrange, G2 verifier_key,
                 std::uint8_t flag);

    std::size_t max_len() const noexcept { return max_len_; }
    const EvaluationDomain& domain() const noexcept { return domain_; }
    std::span<const G1> powers() const noexcept { return powers_; }
    std::span<const G1> lagrange_powers() const noexcept { return lagrange_; }
    std::span<const blst_p1_affine> powers_affine() const noexcept { return powers_affine_; }
    std::span<const blst_p1_affine> lagrange_affine() const noexcept { return lagrange_affine_; }
    const G2& verifier_key() const noexcept { return verifier_key_; }
    std::uint8_t flag() const noexcept { return flag_; }
    bool insecure_dev() const noexcept { return flag_ == kFlagInsecureDev; }

    /// magic ‖ flag ‖ max_len (8B BE) ‖ verifier key (96B) ‖ N powers ‖ N Lagrange powers.
    Bytes serialize() const;
    static CommitParams deserialize(ByteSpan bytes);

private:
    std::size_t max_len_;
    EvaluationDomain domain_;
    std::vector<G1> powers_;
    std::vector<G1> lagrange_;
    std::vector<blst_p1_affine> powers_affine_;
    std::vector<blst_p1_affine> lagrange_affine_;
    G2 verifier_key_;
    std::uint8_t flag_;
};

/// Development trusted setup. The trapdoor is hashed from a domain-separated
/// seed and dropped before returning, but anyone holding the seed can
/// recompute it: the result is flagged INSECURE-DEV. Throws InvalidArgument
/// for max_len == 0, and Error if the generated parameters fail verify_setup.
CommitParams setup(std::size_t max_len, ByteSpan seed, unsigned threads = 1);

/// Publicly checks that the parameters are powers of a single trapdoor and
/// that the two bases describe the same polynomials (randomized batch test:
/// e(Σρ_j P_{j+1}, g2) = e(Σρ_j P_j, g2^r), Σρ_i Λ_i = Σ ifft(ρ)_j P_j).
bool verify_setup(const CommitParams& params);

/// Σ v_i · g^(L_i(r)).
VectorCommitment commit(const CommitParams& params, std::span<const FieldElement> v);
/// Interpolates coefficients with an inverse FFT, then Σ γ_j · g^(r^j).
VectorCommitment commit_via_coefficients(const CommitParams& params, std::span<const FieldElement> v);

/// Σ coeffs_i · comms_i.
VectorCommitment combine(std::span<const FieldElement> coeffs, std::span<const VectorCommitment> comms);

/// Reed-Solomon encoding in the exponent: output_i = combine(g_{i+1}, comms).
std::vector<VectorCommitment> encode_commitments(const CodeParams& code, std::span<const VectorCommitment> comms,
                                                 unsigned threads = 1);
/// Same result through a group-element FFT; requires a root-of-unity code.
std::vector<VectorCommitment> encode_commitments_fft(const CodeParams& code, std::span<const VectorCommitment> comms);
/// Single coded commitment for 1-based node index.
VectorCommitment encode_commitment_at(const CodeParams& code, std::span<const VectorCommitment> comms,
                                      std::size_t index);

struct EntryOpeningProof {
    FieldElement value;
    EntryWitness witness;
};

/// Opens v at 1-based position i.
EntryOpeningProof open_entry(const CommitParams& params, std::span<const FieldElement> v, std::size_t i);

/// e(C - value·g1, g2) == e(W, g2^r - ω^(i-1)·g2).
bool verify_entry(const CommitParams& params, const VectorCommitment& comm, std::size_t i, const FieldElement& value,
                  const EntryWitness& witness);

enum class VerifyStatus { Valid, Invalid, Malformed };

/// Byte-level entry: Malformed when a point or the value does not decode.
VerifyStatus verify_entry_bytes(const CommitParams& params, ByteSpan comm, std::size_t i, ByteSpan value,
                                ByteSpan witness);

}  // namespace savid

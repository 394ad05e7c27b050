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
#include <string>
#include <string_view>

#include "savid/common.hpp"

namespace savid {

class VectorCommitment;

/// Initializes libsodium once; safe to call from any thread.
void ensure_sodium();

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteSpan data);

inline constexpr std::string_view kCommitTag = "semi-avid-pr/v1/commit";
inline constexpr std::string_view kStoredTag = "semi-avid-pr/v1/stored";

/// C = SHA-256(tag ‖ h_1 ‖ … ‖ h_k): content address of a dispersed block.
struct BlockCommitment {
    Digest bytes{};

    std::string hex() const { return to_hex(bytes); }
    static BlockCommitment from_hex(std::string_view hex);

    friend auto operator<=>(const BlockCommitment&, const BlockCommitment&) = default;
};

BlockCommitment hash_commitments(std::span<const VectorCommitment> comms);

struct NodePublicKey {
    static constexpr std::size_t kBytes = 32;
    std::array<std::uint8_t, kBytes> bytes{};
    friend bool operator==(const NodePublicKey&, const NodePublicKey&) = default;
};

/// Ed25519 signing key of one storage node.
class NodeKeypair {
public:
    static constexpr std::size_t kSeedBytes = 32;

    static NodeKeypair from_seed(std::span<const std::uint8_t, kSeedBytes> seed);
    /// Deterministic key for node `index` derived from a deployment seed.
    static NodeKeypair derive(ByteSpan deployment_seed, std::size_t index);

    const NodePublicKey& public_key() const noexcept { return pk_; }
    const std::array<std::uint8_t, kSeedBytes>& seed() const noexcept { return seed_; }

    std::array<std::uint8_t, 64> sign(ByteSpan message) const;

private:
    std::array<std::uint8_t, kSeedBytes> seed_{};
    std::array<std::uint8_t, 64> sk_{};
    NodePublicKey pk_;
};

bool verify_signature(const NodePublicKey& pk, ByteSpan message, ByteSpan signature);

/// σ_i over (stored, C) from node i.
struct StorageReceipt {
    static constexpr std::size_t kSignatureBytes = 64;
    static constexpr std::size_t kBytes = 2 + kSignatureBytes;

    std::uint16_t node_index = 0;  // 1-based
    std::array<std::uint8_t, kSignatureBytes> signature{};

    /// node_index (2B BE) ‖ signature.
    Bytes serialize() const;
    static StorageReceipt deserialize(ByteSpan bytes);

    friend bool operator==(const StorageReceipt&, const StorageReceipt&) = default;
};

Bytes stored_message(const BlockCommitment& c);

StorageReceipt sign_receipt(const NodeKeypair& key, std::uint16_t node_index, const BlockCommitment& c);
bool verify_receipt(const NodePublicKey& pk, const BlockCommitment& c, const StorageReceipt& receipt);

}  // namespace savid

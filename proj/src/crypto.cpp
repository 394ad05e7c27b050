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

#include "savid/crypto.hpp"

#include <mutex>

#include <sodium.h>

#include "savid/commitments.hpp"

namespace savid {

void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) throw Error("libsodium initialization failed");
    });
}

std::string to_hex(ByteSpan bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xf]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw DecodeError("hex string has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw DecodeError("invalid hex digit");
    };
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    return out;
}

Digest sha256(ByteSpan data) {
    ensure_sodium();
    Digest d{};
    crypto_hash_sha256(d.data(), data.data(), data.size());
    return d;
}

BlockCommitment BlockCommitment::from_hex(std::string_view hex) {
    Bytes raw = savid::from_hex(hex);
    if (raw.size() != 32) throw DecodeError("block commitment must be 32 bytes");
    BlockCommitment c;
    std::copy(raw.begin(), raw.end(), c.bytes.begin());
    return c;
}

BlockCommitment hash_commitments(std::span<const VectorCommitment> comms) {
    if (comms.empty()) throw InvalidArgument("hash_commitments: need at least one commitment");
    ensure_sodium();
    crypto_hash_sha256_state st;
    crypto_hash_sha256_init(&st);
    crypto_hash_sha256_update(&st, reinterpret_cast<const unsigned char*>(kCommitTag.data()), kCommitTag.size());
    for (const auto& h : comms) {
        const auto bytes = h.to_bytes();
        crypto_hash_sha256_update(&st, bytes.data(), bytes.size());
    }
    BlockCommitment c;
    crypto_hash_sha256_final(&st, c.bytes.data());
    return c;
}

NodeKeypair NodeKeypair::from_seed(std::span<const std::uint8_t, kSeedBytes> seed) {
    ensure_sodium();
    NodeKeypair kp;
    std::copy(seed.begin(), seed.end(), kp.seed_.begin());
    crypto_sign_seed_keypair(kp.pk_.bytes.data(), kp.sk_.data(), kp.seed_.data());
    return kp;
}

NodeKeypair NodeKeypair::derive(ByteSpan deployment_seed, std::size_t index) {
    ByteWriter w;
    w.raw(std::string_view("semi-avid-pr/v1/node-key"));
    w.u64(index);
    w.raw(deployment_seed);
    const Digest seed = sha256(w.bytes());
    return from_seed(seed);
}

std::array<std::uint8_t, 64> NodeKeypair::sign(ByteSpan message) const {
    std::array<std::uint8_t, 64> sig{};
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), sk_.data());
    return sig;
}

bool verify_signature(const NodePublicKey& pk, ByteSpan message, ByteSpan signature) {
    ensure_sodium();
    if (signature.size() != crypto_sign_BYTES) return false;
    return crypto_sign_verify_detached(signature.data(), message.data(), message.size(), pk.bytes.data()) == 0;
}

Bytes StorageReceipt::serialize() const {
    ByteWriter w;
    w.u16(node_index);
    w.raw(signature);
    return std::move(w).take();
}

StorageReceipt StorageReceipt::deserialize(ByteSpan bytes) {
    ByteReader r(bytes);
    StorageReceipt out;
    out.node_index = r.u16();
    auto sig = r.raw(kSignatureBytes);
    std::copy(sig.begin(), sig.end(), out.signature.begin());
    r.expect_end();
    return out;
}

Bytes stored_message(const BlockCommitment& c) {
    ByteWriter w;
    w.raw(kStoredTag);
    w.raw(c.bytes);
    return std::move(w).take();
}

StorageReceipt sign_receipt(const NodeKeypair& key, std::uint16_t node_index, const BlockCommitment& c) {
    StorageReceipt r;
    r.node_index = node_index;
    r.signature = key.sign(stored_message(c));
    return r;
}

bool verify_receipt(const NodePublicKey& pk, const BlockCommitment& c, const StorageReceipt& receipt) {
    return verify_signature(pk, stored_message(c), receipt.signature);
}

}  // namespace savid

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

#include <doctest.h>

#include <openssl/sha.h>

#include "oracle_vectors.hpp"
#include "savid/commitments.hpp"
#include "savid/crypto.hpp"
#include "test_util.hpp"

using namespace savid;
using testutil::as_bytes;

namespace {

Digest openssl_sha256(ByteSpan data) {
    Digest d{};
    SHA256(data.data(), data.size(), d.data());
    return d;
}

BlockCommitment c_of(std::uint8_t fill) {
    BlockCommitment c;
    c.bytes.fill(fill);
    return c;
}

}  // namespace

TEST_CASE("sha256 agrees with a second implementation") {
    Csprng rng(40);
    for (int i = 0; i < 100; ++i) {
        const Bytes data = testutil::random_bytes(rng, rng.uniform(300));
        CHECK(sha256(data) == openssl_sha256(data));
    }
}

TEST_CASE("hash_commitments is the tagged digest of compressed points") {
    Csprng rng(41);
    for (int i = 0; i < 100; ++i) {
        std::vector<VectorCommitment> comms;
        Bytes preimage(kCommitTag.begin(), kCommitTag.end());
        for (std::size_t j = 0, k = 1 + rng.uniform(5); j < k; ++j) {
            comms.emplace_back(G1::generator() * rng.field_element());
            const auto b = comms.back().to_bytes();
            preimage.insert(preimage.end(), b.begin(), b.end());
        }
        CHECK(hash_commitments(comms).bytes == openssl_sha256(preimage));
    }
    CHECK_THROWS_AS(hash_commitments(std::vector<VectorCommitment>{}), InvalidArgument);
}

TEST_CASE("hash_commitments matches the frozen vector and is order sensitive") {
    const auto h1 = VectorCommitment::from_bytes(from_hex(oracle::kCommit5_7_11));
    const VectorCommitment h2(G1::generator());
    CHECK(hash_commitments(std::vector{h1, h2}).hex() == oracle::kHashCommitments);
    CHECK(hash_commitments(std::vector{h1, h2}) == hash_commitments(std::vector{h1, h2}));
    CHECK_FALSE(hash_commitments(std::vector{h1, h2}) == hash_commitments(std::vector{h2, h1}));
}

TEST_CASE("block commitment hex roundtrip") {
    const auto c = c_of(0xab);
    CHECK(c.hex().size() == 64);
    std::string expected;
    for (int i = 0; i < 32; ++i) expected += "ab";
    CHECK(c.hex() == expected);
    CHECK(BlockCommitment::from_hex(c.hex()) == c);
    CHECK_THROWS_AS(BlockCommitment::from_hex("abcd"), DecodeError);
    CHECK_THROWS_AS(BlockCommitment::from_hex(std::string(64, 'g')), DecodeError);
}

TEST_CASE("node keys and receipts match Ed25519 oracle") {
    const auto key = NodeKeypair::derive(as_bytes("deploy"), 3);
    CHECK(to_hex(key.public_key().bytes) == oracle::kNode3PublicKey);
    const auto receipt = sign_receipt(key, 3, c_of(0x11));
    CHECK(to_hex(receipt.signature) == oracle::kNode3Receipt);
    CHECK(verify_receipt(key.public_key(), c_of(0x11), receipt));
}

TEST_CASE("receipts are bound to commitment and key") {
    const auto k1 = NodeKeypair::derive(as_bytes("deploy"), 1);
    const auto k2 = NodeKeypair::derive(as_bytes("deploy"), 2);
    const auto r = sign_receipt(k1, 1, c_of(1));
    CHECK(verify_receipt(k1.public_key(), c_of(1), r));
    CHECK_FALSE(verify_receipt(k1.public_key(), c_of(2), r));
    CHECK_FALSE(verify_receipt(k2.public_key(), c_of(1), r));
    CHECK(sign_receipt(k1, 1, c_of(1)) == r);

    Csprng rng(42);
    int cross = 0;
    for (int i = 0; i < 1000; ++i) {
        BlockCommitment a, b;
        rng.fill(a.bytes);
        rng.fill(b.bytes);
        if (a == b) continue;
        if (verify_receipt(k1.public_key(), b, sign_receipt(k1, 1, a))) ++cross;
    }
    CHECK(cross == 0);
}

TEST_CASE("receipt serialization") {
    const auto k = NodeKeypair::derive(as_bytes("deploy"), 7);
    const auto r = sign_receipt(k, 0x0102, c_of(3));
    const Bytes b = r.serialize();
    REQUIRE(b.size() == 66);
    CHECK(b[0] == 0x01);
    CHECK(b[1] == 0x02);
    CHECK(StorageReceipt::deserialize(b) == r);
    CHECK_THROWS_AS(StorageReceipt::deserialize(Bytes(b.begin(), b.end() - 1)), DecodeError);
    CHECK_FALSE(verify_signature(k.public_key(), stored_message(c_of(3)), Bytes(63)));
}

TEST_CASE("stored message layout") {
    const Bytes m = stored_message(c_of(9));
    CHECK(std::string(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(kStoredTag.size())) == kStoredTag);
    CHECK(m.size() == kStoredTag.size() + 32);
}

TEST_CASE("csprng keystream matches ChaCha20 oracle") {
    Csprng rng(as_bytes(oracle::kKeystreamSeed));
    Bytes out(1100);
    rng.fill(std::span<std::uint8_t>(out).first(10));
    rng.fill(std::span<std::uint8_t>(out).subspan(10));
    CHECK(to_hex(out) == oracle::kKeystream1100);
}

TEST_CASE("csprng uniform stays in range and covers it") {
    Csprng rng(43);
    std::vector<int> hits(7);
    for (int i = 0; i < 7000; ++i) ++hits[rng.uniform(7)];
    for (int h : hits) CHECK(h > 800);
    CHECK_THROWS_AS(rng.uniform(0), InvalidArgument);
    Csprng a("label", 5), b("label", 5), c("label", 6);
    CHECK(a() == b());
    CHECK_FALSE(Csprng("label", 5)() == c());
}

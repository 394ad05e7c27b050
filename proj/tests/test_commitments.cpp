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

#include <set>

#include "oracle_vectors.hpp"
#include "savid/commitments.hpp"
#include "savid/scheme.hpp"
#include "test_util.hpp"

using namespace savid;
using testutil::as_bytes;

namespace {

const CommitParams& params16() {
    static const CommitParams p = setup(16, as_bytes("commit-tests"), 4);
    return p;
}

}  // namespace

TEST_CASE("group encodings match oracle") {
    CHECK(to_hex(G1::generator().compress()) == oracle::kG1Gen);
    CHECK(to_hex((G1::generator() * FieldElement(5)).compress()) == oracle::kG1Times5);
    CHECK(to_hex(G2::generator().compress()) == oracle::kG2Gen);
    const auto p = G1::decompress(from_hex(oracle::kG1Times5));
    CHECK(p == G1::generator() * FieldElement(5));
    CHECK(G1::decompress(G1::identity().compress()).is_identity());
}

TEST_CASE("invalid point encodings are rejected") {
    Bytes bad = from_hex(oracle::kG1Gen);
    bad[47] ^= 1;  // almost surely off the curve
    CHECK_THROWS_AS(G1::decompress(bad), DecodeError);
    CHECK_THROWS_AS(G1::decompress(Bytes(47)), DecodeError);
    Bytes no_flag = from_hex(oracle::kG1Gen);
    no_flag[0] &= 0x7f;  // clears the compression flag
    CHECK_THROWS_AS(G1::decompress(no_flag), DecodeError);
    CHECK_THROWS_AS(G2::decompress(Bytes(96, 0xff)), DecodeError);
}

TEST_CASE("msm agrees with naive sum") {
    Csprng rng(20);
    for (std::size_t len : {1u, 5u, 17u, 64u}) {
        std::vector<G1> bases;
        for (std::size_t i = 0; i < len; ++i) bases.push_back(G1::generator() * rng.field_element());
        auto scalars = testutil::random_vector(rng, len);
        if (len > 3) {
            scalars[1] = FieldElement::zero();
            bases[2] = G1::identity();
        }
        G1 naive;
        for (std::size_t i = 0; i < len; ++i) naive += bases[i] * scalars[i];
        CHECK(msm(std::span<const G1>(bases), scalars) == naive);
    }
}

TEST_CASE("pairing check is bilinear") {
    Csprng rng(21);
    const auto a = rng.field_element(), b = rng.field_element();
    CHECK(pairing_equal(G1::generator() * (a * b), G2::generator(), G1::generator() * a, G2::generator() * b));
    CHECK_FALSE(pairing_equal(G1::generator() * (a * b + FieldElement::one()), G2::generator(),
                              G1::generator() * a, G2::generator() * b));
}

TEST_CASE("development setup matches the trapdoor oracle") {
    const CommitParams p = setup(4, as_bytes(oracle::kSetupSeed));
    CHECK(p.insecure_dev());
    CHECK(to_hex(p.verifier_key().compress()) == oracle::kSetupVk);
    CHECK(to_hex(p.powers()[0].compress()) == oracle::kG1Gen);
    CHECK(to_hex(p.powers()[1].compress()) == oracle::kSetupPower1);
    CHECK(to_hex(p.powers()[3].compress()) == oracle::kSetupPower3);
    CHECK(to_hex(p.lagrange_powers()[2].compress()) == oracle::kSetupLagrange2);

    const std::vector<FieldElement> v{FieldElement(5), FieldElement(7), FieldElement(11)};
    const auto c = commit(p, v);
    CHECK(to_hex(c.to_bytes()) == oracle::kCommit5_7_11);
    const auto proof = open_entry(p, v, 2);
    CHECK(proof.value == FieldElement(7));
    CHECK(to_hex(proof.witness.to_bytes()) == oracle::kWitness5_7_11_at2);
}

TEST_CASE("setup edge cases and determinism") {
    const CommitParams one = setup(1, as_bytes("s"));
    REQUIRE(one.powers().size() == 1);
    CHECK(one.powers()[0] == G1::generator());
    CHECK_THROWS_AS(setup(0, as_bytes("s")), InvalidArgument);

    const CommitParams a = setup(8, as_bytes("same"));
    const CommitParams b = setup(8, as_bytes("same"), 3);
    CHECK(a.serialize() == b.serialize());
    CHECK_FALSE(a.serialize() == setup(8, as_bytes("other")).serialize());
    CHECK(verify_setup(a));
}

TEST_CASE("consecutive powers share one trapdoor") {
    const CommitParams p = setup(8, as_bytes("pairs"));
    for (std::size_t j = 0; j + 1 < p.powers().size(); ++j)
        CHECK(pairing_equal(p.powers()[j + 1], G2::generator(), p.powers()[j], p.verifier_key()));
}

TEST_CASE("verify_setup rejects tampered parameters") {
    const CommitParams p = setup(8, as_bytes("tamper"));
    std::vector<G1> powers(p.powers().begin(), p.powers().end());
    std::vector<G1> lagrange(p.lagrange_powers().begin(), p.lagrange_powers().end());
    powers[5] = powers[5] + G1::generator();
    CHECK_FALSE(verify_setup(CommitParams(8, powers, lagrange, p.verifier_key(), p.flag())));

    std::vector<G1> powers_ok(p.powers().begin(), p.powers().end());
    lagrange[3] = lagrange[3] + G1::generator();
    CHECK_FALSE(verify_setup(CommitParams(8, powers_ok, lagrange, p.verifier_key(), p.flag())));
}

TEST_CASE("parameter file roundtrip") {
    const CommitParams p = setup(5, as_bytes("file"));
    const Bytes bytes = p.serialize();
    CHECK(std::string(bytes.begin(), bytes.begin() + 8) == "SAVIDPP1");
    CHECK(bytes[8] == CommitParams::kFlagInsecureDev);
    CHECK(bytes.size() == 8 + 1 + 8 + 96 + 2 * 8 * 48);
    const CommitParams q = CommitParams::deserialize(bytes);
    CHECK(q.serialize() == bytes);
    CHECK(q.max_len() == 5);

    Bytes truncated(bytes.begin(), bytes.end() - 1);
    CHECK_THROWS_AS(CommitParams::deserialize(truncated), DecodeError);
    Bytes bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(CommitParams::deserialize(bad_magic), DecodeError);
}

TEST_CASE("commit basics") {
    const auto& p = params16();
    CHECK(commit(p, std::vector<FieldElement>(16)).point().is_identity());
    CHECK_THROWS_AS(commit(p, std::vector<FieldElement>{}), InvalidArgument);
    CHECK_THROWS_AS(commit(p, std::vector<FieldElement>(17)), InvalidArgument);

    Csprng rng(22);
    const auto v = testutil::random_vector(rng, 9);
    auto doubled = v;
    for (auto& x : doubled) x += x;
    CHECK(commit(p, doubled).point() == commit(p, v).point() * FieldElement(2));
}

TEST_CASE("lagrange and coefficient paths agree") {
    const auto& p = params16();
    Csprng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = testutil::random_vector(rng, trial % 7 == 0 ? 1 + rng.uniform(16) : 16);
        REQUIRE(commit(p, v) == commit_via_coefficients(p, v));
    }
}

TEST_CASE("commitments are linearly homomorphic") {
    const auto& p = params16();
    Csprng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = testutil::random_vector(rng, 16), w = testutil::random_vector(rng, 16);
        const auto a = rng.field_element(), b = rng.field_element();
        std::vector<FieldElement> mix(16);
        for (std::size_t i = 0; i < 16; ++i) mix[i] = a * v[i] + b * w[i];
        const std::vector<VectorCommitment> comms{commit(p, v), commit(p, w)};
        CHECK(commit(p, mix) == combine(std::vector{a, b}, comms));
    }
}

TEST_CASE("combine edge cases") {
    const auto& p = params16();
    Csprng rng(25);
    const auto h = commit(p, testutil::random_vector(rng, 4));
    CHECK(combine(std::vector{FieldElement::one()}, std::vector{h}) == h);
    CHECK(combine(std::vector<FieldElement>(3), std::vector{h, h, h}).point().is_identity());
    CHECK_THROWS_AS(combine(std::vector{FieldElement::one()}, std::vector{h, h}), InvalidArgument);
}

TEST_CASE("commitments encode like codewords") {
    const auto& p = params16();
    Csprng rng(26);
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{8, 3}, {32, 11}, {12, 1}}) {
        const CodeParams code(n, k);
        for (int trial = 0; trial < 3; ++trial) {
            const auto u = testutil::random_matrix(rng, 4, k);
            const auto h = commit_columns(p, u);
            const auto coded = encode_rows(code, u);
            const auto naive = encode_commitments(code, h, 2);
            CHECK(naive == encode_commitments_fft(code, h));
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(naive[i] == commit(p, coded[i]));
                CHECK(naive[i] == encode_commitment_at(code, h, i + 1));
                if (k == 1) CHECK(naive[i] == h[0]);
            }
        }
    }
    const CodeParams code(8, 3);
    const std::vector<VectorCommitment> ids(3);
    for (const auto& c : encode_commitments(code, ids)) CHECK(c.point().is_identity());
    CHECK_THROWS_AS(encode_commitments(code, std::vector<VectorCommitment>(2)), InvalidArgument);
}

TEST_CASE("entry openings verify and bind") {
    const auto& p = params16();
    Csprng rng(27);
    for (int trial = 0; trial < 3; ++trial) {
        const auto v = testutil::random_vector(rng, 11);
        const auto c = commit(p, v);
        for (std::size_t i = 1; i <= v.size(); ++i) {
            const auto proof = open_entry(p, v, i);
            CHECK(proof.value == v[i - 1]);
            CHECK(verify_entry(p, c, i, proof.value, proof.witness));
            CHECK_FALSE(verify_entry(p, c, i, proof.value + FieldElement::one(), proof.witness));
        }
        auto v2 = v;
        v2[4] += FieldElement::one();
        const auto proof = open_entry(p, v, 5);
        CHECK_FALSE(verify_entry(p, commit(p, v2), 5, proof.value, proof.witness));
    }
    // Positions beyond the vector length still open to zero.
    const auto v = testutil::random_vector(rng, 5);
    auto padded = v;
    padded.resize(16);
    CHECK(commit(p, padded) == commit(p, v));
    CHECK(verify_entry(p, commit(p, v), 12, FieldElement::zero(), open_entry(p, padded, 12).witness));
    CHECK_THROWS_AS(open_entry(p, v, 0), InvalidArgument);
    CHECK_THROWS_AS(open_entry(p, v, 6), InvalidArgument);
}

TEST_CASE("constant vector has identity witness") {
    const auto& p = params16();
    const std::vector<FieldElement> v(16, FieldElement(42));
    const auto proof = open_entry(p, v, 7);
    CHECK(proof.witness.point().is_identity());
    CHECK(verify_entry(p, commit(p, v), 7, FieldElement(42), proof.witness));
}

TEST_CASE("random witnesses never verify") {
    const auto& p = params16();
    Csprng rng(28);
    const auto v = testutil::random_vector(rng, 16);
    const auto c = commit(p, v);
    int accepted = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const EntryWitness w(G1::generator() * rng.field_element());
        if (verify_entry(p, c, 1 + rng.uniform(16), v[0], w)) ++accepted;
    }
    CHECK(accepted == 0);
}

TEST_CASE("byte-level entry verification distinguishes malformed input") {
    const auto& p = params16();
    Csprng rng(29);
    const auto v = testutil::random_vector(rng, 16);
    const auto c = commit(p, v).to_bytes();
    const auto proof = open_entry(p, v, 3);
    const auto y = proof.value.to_bytes();
    const auto w = proof.witness.to_bytes();
    CHECK(verify_entry_bytes(p, c, 3, y, w) == VerifyStatus::Valid);
    CHECK(verify_entry_bytes(p, c, 4, y, w) == VerifyStatus::Invalid);
    Bytes bad = Bytes(w.begin(), w.end());
    bad[47] ^= 1;
    CHECK(verify_entry_bytes(p, c, 3, y, bad) == VerifyStatus::Malformed);
    CHECK(verify_entry_bytes(p, c, 3, Bytes(32, 0xff), w) == VerifyStatus::Malformed);
}

TEST_CASE("distinct vectors give distinct commitments") {
    const auto& p = params16();
    Csprng rng(30);
    std::set<Bytes> seen;
    for (int i = 0; i < 10000; ++i) {
        const auto b = commit(p, std::vector{rng.field_element(), rng.field_element()}).to_bytes();
        seen.insert(Bytes(b.begin(), b.end()));
    }
    CHECK(seen.size() == 10000);
}

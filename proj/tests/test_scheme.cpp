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

#include <algorithm>

#include "savid/protocol.hpp"
#include "savid/scheme.hpp"
#include "test_util.hpp"

using namespace savid;

namespace {

struct Cluster {
    const SchemeParams& params;
    std::vector<NodeState> nodes;

    explicit Cluster(const netsim::Deployment& d) : params(*d.params) {
        for (std::size_t i = 0; i < d.keys.size(); ++i) nodes.emplace_back(static_cast<std::uint16_t>(i + 1), d.keys[i]);
    }

    LoopbackTransport transport(const std::vector<std::size_t>& offline = {}) {
        std::vector<NodeState*> ptrs;
        for (auto& n : nodes) ptrs.push_back(std::ranges::count(offline, n.index) ? nullptr : &n);
        return LoopbackTransport(params, ptrs);
    }
};

const netsim::Deployment& small() { return testutil::deployment(10, 3, 16); }

}  // namespace

TEST_CASE("quorum sizes") {
    CHECK(choose_params(4, 1).q == 3);
    CHECK(choose_params(4, 1).k == 2);
    CHECK(choose_params(4, 0).q == 4);
    CHECK(choose_params(4, 0).k == 4);
    CHECK(choose_params(1024, 338).k == 348);
    CHECK(choose_params(1024, 511).k == 2);
    CHECK_THROWS_AS(choose_params(4, 2), InvalidArgument);
    CHECK_THROWS_AS(choose_params(1024, 512), InvalidArgument);
    CHECK_THROWS_AS(choose_params(0, 0), InvalidArgument);
}

TEST_CASE("scheme parameter validation") {
    const auto& d = small();
    CHECK(d.params->k() == 4);
    CHECK(d.params->q() == 7);
    CHECK(d.params->max_rows() == 16);
    std::vector<NodePublicKey> pks(d.params->node_pks().begin(), d.params->node_pks().end());
    CHECK_THROWS_AS(SchemeParams(11, 3, d.params->commit_ptr(), pks), InvalidArgument);
    CHECK_THROWS_AS(d.params->node_pk(0), InvalidArgument);
    CHECK_THROWS_AS(d.params->node_pk(11), InvalidArgument);
}

TEST_CASE("block commitment is deterministic and sensitive to every byte") {
    const auto& p = *small().params;
    Csprng rng(50);
    const Bytes block = testutil::random_bytes(rng, 500);
    const auto c = commit_block(p, block);
    CHECK(commit_block(p, block, 4) == c);
    for (int i = 0; i < 20; ++i) {
        Bytes other = block;
        other[rng.uniform(other.size())] ^= static_cast<std::uint8_t>(1 + rng.uniform(255));
        CHECK_FALSE(commit_block(p, other) == c);
    }
    Bytes longer = block;
    longer.push_back(0);
    CHECK_FALSE(commit_block(p, longer) == c);
    CHECK_THROWS_AS(commit_block(p, Bytes(4 * 16 * 31)), InvalidArgument);
}

TEST_CASE("encoded chunks pass the homomorphic check") {
    const auto& p = *small().params;
    Csprng rng(51);
    const auto enc = client_encode(p, testutil::random_bytes(rng, 700), 2);
    REQUIRE(enc.chunks.size() == 10);
    CHECK(enc.block == hash_commitments(enc.commitments));
    const auto coded = encode_commitments(p.code(), enc.commitments);
    for (const auto& ch : enc.chunks) {
        CHECK(chunk_consistent(p, enc.commitments, ch));
        CHECK(chunk_matches(p, coded[ch.node_index - 1], ch));
    }
    auto flipped = enc.chunks[2];
    flipped.column.back() += FieldElement::one();
    CHECK_FALSE(chunk_consistent(p, enc.commitments, flipped));
    auto wrong_index = enc.chunks[2];
    wrong_index.node_index = 4;
    CHECK_FALSE(chunk_consistent(p, enc.commitments, wrong_index));
    wrong_index.node_index = 11;
    CHECK_FALSE(chunk_consistent(p, enc.commitments, wrong_index));
    CHECK_FALSE(chunk_consistent(p, std::span(enc.commitments).first(3), enc.chunks[0]));
}

TEST_CASE("single-column code") {
    const auto& d = testutil::deployment(3, 1, 8);
    const auto& p = *d.params;
    REQUIRE(p.k() == 1);
    const Bytes block{9, 8, 7};
    const auto enc = client_encode(p, block);
    for (const auto& ch : enc.chunks) {
        CHECK(ch.column == enc.chunks[0].column);
        CHECK(chunk_consistent(p, enc.commitments, ch));
    }
    Cluster cl(d);
    auto tr = cl.transport();
    const auto cert = disperse(p, block, tr);
    REQUIRE(cert);
    auto tr2 = cl.transport({1});
    const auto got = retrieve(p, *cert, enc.block, tr2);
    REQUIRE(got);
    CHECK(*got == block);
}

TEST_CASE("node stores and signs only consistent chunks") {
    const auto& d = small();
    const auto& p = *d.params;
    Csprng rng(52);
    const auto a = client_encode(p, testutil::random_bytes(rng, 300));
    const auto b = client_encode(p, testutil::random_bytes(rng, 300));
    NodeState node(3, d.keys[2]);

    auto bad = a.chunks[2];
    bad.column[0] += FieldElement::one();
    CHECK_FALSE(node_verify_chunk(p, node, a.commitments, bad));
    CHECK_FALSE(node_verify_chunk(p, node, b.commitments, a.chunks[2]));
    CHECK_FALSE(node_verify_chunk(p, node, a.commitments, a.chunks[3]));
    CHECK(node.store.empty());

    const auto r = node_verify_chunk(p, node, a.commitments, a.chunks[2]);
    REQUIRE(r);
    CHECK(r->node_index == 3);
    CHECK(verify_receipt(p.node_pk(3), a.block, *r));
    CHECK(node.store.at(a.block).chunk == a.chunks[2]);
}

TEST_CASE("certificate verification counts distinct valid signers") {
    const auto& d = small();
    const auto& p = *d.params;
    BlockCommitment c;
    c.bytes.fill(0x42);
    RetrievabilityCertificate cert;
    for (std::uint16_t i = 1; i <= 6; ++i) cert.receipts.push_back(sign_receipt(d.keys[i - 1], i, c));
    CHECK_FALSE(verify_certificate(p, cert, c));

    auto dup = cert;
    dup.receipts.push_back(cert.receipts[0]);
    CHECK_FALSE(verify_certificate(p, dup, c));

    auto forged = cert;
    forged.receipts.push_back(sign_receipt(d.keys[0], 7, c));
    CHECK_FALSE(verify_certificate(p, forged, c));

    auto out_of_range = cert;
    out_of_range.receipts.push_back(sign_receipt(d.keys[0], 11, c));
    CHECK_FALSE(verify_certificate(p, out_of_range, c));

    cert.receipts.push_back(sign_receipt(d.keys[6], 7, c));
    CHECK(verify_certificate(p, cert, c));
    BlockCommitment other = c;
    other.bytes[0] ^= 1;
    CHECK_FALSE(verify_certificate(p, cert, other));

    std::ranges::reverse(cert.receipts);
    cert.receipts.push_back(cert.receipts[0]);
    cert.canonicalize();
    CHECK(cert.receipts.size() == 7);
    CHECK(std::ranges::is_sorted(cert.receipts, {}, &StorageReceipt::node_index));
}

TEST_CASE("decode_chunks recovers the matrix from any k chunks") {
    const auto& p = *small().params;
    Csprng rng(53);
    const auto u = testutil::random_matrix(rng, 5, 4);
    const auto cols = encode_rows(p.code(), u, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Chunk> picked;
        std::vector<std::uint16_t> idx(10);
        for (std::uint16_t i = 0; i < 10; ++i) idx[i] = i + 1;
        for (std::size_t i = 10; i > 1; --i) std::swap(idx[i - 1], idx[rng.uniform(i)]);
        for (std::size_t j = 0; j < 4; ++j) picked.push_back({idx[j], cols[idx[j] - 1]});
        CHECK(decode_chunks(p.code(), picked, trial % 2 ? 3 : 1) == u);
    }
    std::vector<Chunk> three{{1, cols[0]}, {2, cols[1]}, {3, cols[2]}};
    CHECK_THROWS_AS(decode_chunks(p.code(), three), InvalidArgument);
}

TEST_CASE("loopback dispersal and retrieval") {
    const auto& d = small();
    const auto& p = *d.params;
    Csprng rng(54);
    for (std::size_t size : {1u, 31u, 124u, 1000u, 1900u}) {
        Cluster cl(d);
        const Bytes block = testutil::random_bytes(rng, size);
        auto tr = cl.transport({2, 5, 9});
        const auto cert = disperse(p, block, tr);
        REQUIRE(cert);
        const auto c = commit_block(p, block);
        CHECK(cert->receipts.size() == p.q());
        CHECK(verify_certificate(p, *cert, c));

        // Three signers go offline again; exactly k = 4 honest chunks remain.
        auto tr2 = cl.transport({1, 3, 4});
        const auto got = retrieve_matrix(p, *cert, c, tr2);
        REQUIRE(got);
        CHECK(got->used_nodes.size() == 4);
        CHECK(from_matrix(got->matrix) == block);
    }
}

TEST_CASE("dispersal fails without a quorum") {
    const auto& d = small();
    Cluster cl(d);
    auto tr = cl.transport({1, 2, 3, 4});
    const auto r = disperse(*d.params, Bytes{1, 2, 3}, tr);
    REQUIRE_FALSE(r);
    CHECK(r.error() == DisperseError::QuorumUnreachable);
}

TEST_CASE("retrieval errors") {
    const auto& d = small();
    const auto& p = *d.params;
    Cluster cl(d);
    const Bytes block{4, 5, 6, 7};
    auto tr = cl.transport();
    const auto cert = disperse(p, block, tr).value();
    const auto c = commit_block(p, block);

    auto empty = cert;
    empty.receipts.pop_back();
    auto tr_all = cl.transport();
    CHECK(retrieve(p, empty, c, tr_all).error() == RetrieveError::InvalidCertificate);

    auto tr_few = cl.transport({1, 2, 3, 4});
    CHECK(retrieve(p, cert, c, tr_few).error() == RetrieveError::InsufficientValidChunks);

    // Corrupted stored chunks are rejected by the homomorphic check.
    for (std::uint16_t i : {1, 2}) cl.nodes[i - 1].store.at(c).chunk.column[0] += FieldElement::one();
    auto tr_bad = cl.transport();
    const auto got = retrieve_matrix(p, cert, c, tr_bad);
    REQUIRE(got);
    CHECK(got->rejected_nodes == std::vector<std::uint16_t>{1, 2});
    CHECK(from_matrix(got->matrix) == block);
    CHECK(std::string(to_string(RetrieveError::CommitmentMismatch)).size() > 0);
}

TEST_CASE("committed matrix that does not unpack is reported") {
    const auto& d = small();
    const auto& p = *d.params;
    Cluster cl(d);
    Csprng rng(55);
    const auto u = testutil::random_matrix(rng, 2, 4);
    auto tr = cl.transport();
    const auto cert = disperse_matrix(p, u, tr).value();
    const auto c = commit_matrix(p, u);
    auto tr2 = cl.transport();
    CHECK(retrieve(p, cert, c, tr2).error() == RetrieveError::MalformedBlock);
    auto tr3 = cl.transport();
    CHECK(retrieve_matrix(p, cert, c, tr3)->matrix == u);
}

TEST_CASE("chunk file format") {
    const auto& p = *small().params;
    const auto enc = client_encode(p, Bytes(200, 0x5a));
    const auto& ch = enc.chunks[6];
    const Bytes f = serialize_chunk_file(ch, enc.commitments);
    const std::size_t L = ch.column.size();
    CHECK(f.size() == 8 + 2 + 8 + 2 + 4 * 48 + L * 32);
    CHECK(std::string(f.begin(), f.begin() + 8) == kChunkFileMagic);
    CHECK(f[8] == 0);
    CHECK(f[9] == 7);
    CHECK(f[17] == L);
    CHECK(f[19] == 4);
    CHECK(std::equal(f.begin() + 20, f.begin() + 68, enc.commitments[0].to_bytes().begin()));
    CHECK(std::equal(f.end() - 32, f.end(), ch.column.back().to_bytes().begin()));

    const auto [ch2, h2] = parse_chunk_file(f);
    CHECK(ch2 == ch);
    CHECK(h2 == enc.commitments);

    Bytes bad = f;
    bad[0] = 'X';
    CHECK_THROWS_AS(parse_chunk_file(bad), DecodeError);
    CHECK_THROWS_AS(parse_chunk_file(Bytes(f.begin(), f.end() - 1)), DecodeError);
    Bytes trailing = f;
    trailing.push_back(0);
    CHECK_THROWS_AS(parse_chunk_file(trailing), DecodeError);
    Bytes noncanonical = f;
    std::fill(noncanonical.end() - 32, noncanonical.end(), 0xff);
    CHECK_THROWS_AS(parse_chunk_file(noncanonical), DecodeError);
}

TEST_CASE("certificate file format") {
    const auto& d = small();
    BlockCommitment c;
    c.bytes.fill(7);
    RetrievabilityCertificate cert;
    for (std::uint16_t i : {5, 2, 9}) cert.receipts.push_back(sign_receipt(d.keys[i - 1], i, c));
    const Bytes f = serialize_certificate_file(c, cert);
    CHECK(f.size() == 8 + 32 + 2 + 3 * 66);
    CHECK(std::string(f.begin(), f.begin() + 8) == kCertificateFileMagic);
    CHECK(f[41] == 3);
    CHECK(f[43] == 2);
    const auto [c2, cert2] = parse_certificate_file(f);
    CHECK(c2 == c);
    auto sorted = cert;
    sorted.canonicalize();
    CHECK(cert2 == sorted);
    CHECK_THROWS_AS(parse_certificate_file(Bytes(f.begin(), f.end() - 3)), DecodeError);
}

TEST_CASE("message codec roundtrip") {
    const auto& d = small();
    const auto& p = *d.params;
    const auto enc = client_encode(p, Bytes{1, 2, 3});
    const NodeBound disperse_msg = DisperseMessage{enc.commitments, enc.chunks[0]};
    const Bytes b = encode_message(disperse_msg);
    CHECK(b[0] == 0x01);
    const auto back = std::get<DisperseMessage>(decode_node_bound(b));
    CHECK(back.chunk == enc.chunks[0]);
    CHECK(back.commitments == enc.commitments);

    const Bytes r = encode_message(NodeBound{RetrieveMessage{enc.block}});
    CHECK(r.size() == 33);
    CHECK(r[0] == 0x03);
    CHECK(std::get<RetrieveMessage>(decode_node_bound(r)).block == enc.block);

    const auto receipt = sign_receipt(d.keys[0], 1, enc.block);
    const Bytes s = encode_message(ClientBound{StoredMessage{enc.block, receipt}});
    CHECK(s[0] == 0x02);
    const auto stored = std::get<StoredMessage>(decode_client_bound(s));
    CHECK(stored.receipt == receipt);
    CHECK(stored.block == enc.block);

    const Bytes reply = encode_message(ClientBound{RetrieveReplyMessage{enc.commitments, enc.chunks[1]}});
    CHECK(reply[0] == 0x04);
    CHECK(std::get<RetrieveReplyMessage>(decode_client_bound(reply)).chunk == enc.chunks[1]);

    CHECK_THROWS_AS(decode_node_bound(s), DecodeError);
    CHECK_THROWS_AS(decode_client_bound(b), DecodeError);
    CHECK_THROWS_AS(decode_node_bound(Bytes{}), DecodeError);
    CHECK_THROWS_AS(decode_node_bound(Bytes{0x03, 1, 2}), DecodeError);
}

TEST_CASE("honest handler") {
    const auto& d = small();
    const auto& p = *d.params;
    const auto enc = client_encode(p, Bytes{1, 2, 3});
    NodeState node(1, d.keys[0]);
    CHECK_FALSE(handle_message(p, node, RetrieveMessage{enc.block}));
    const auto stored = handle_message(p, node, DisperseMessage{enc.commitments, enc.chunks[0]});
    REQUIRE(stored);
    CHECK(std::holds_alternative<StoredMessage>(*stored));
    const auto reply = handle_message(p, node, RetrieveMessage{enc.block});
    REQUIRE(reply);
    CHECK(std::get<RetrieveReplyMessage>(*reply).chunk == enc.chunks[0]);
    // A chunk addressed to another node is not accepted.
    NodeState other(2, d.keys[1]);
    CHECK_FALSE(handle_message(p, other, DisperseMessage{enc.commitments, enc.chunks[0]}));
}

TEST_CASE("retrieval scope") {
    const auto& d = small();
    const auto& p = *d.params;
    Cluster cl(d);
    const Bytes block(150, 0x33);
    auto tr = cl.transport();
    const auto cert = disperse(p, block, tr).value();
    const auto c = commit_block(p, block);
    std::vector<std::size_t> offline;
    for (const auto& r : cert.receipts)
        if (offline.size() + 1 < cert.receipts.size()) offline.push_back(r.node_index);
    // One signer and the three non-signers remain: exactly k nodes.
    auto signers_only = cl.transport(offline);
    CHECK(retrieve(p, cert, c, signers_only).error() == RetrieveError::InsufficientValidChunks);
    auto everyone = cl.transport(offline);
    const auto got = retrieve(p, cert, c, everyone, 1, RetrieveScope::AllNodes);
    REQUIRE(got);
    CHECK(*got == block);
}

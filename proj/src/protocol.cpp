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

#include "savid/protocol.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace savid {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

void write_block(ByteWriter& w, const BlockCommitment& c) { w.raw(c.bytes); }

BlockCommitment read_block(ByteReader& r) {
    BlockCommitment c;
    const auto raw = r.raw(c.bytes.size());
    std::copy(raw.begin(), raw.end(), c.bytes.begin());
    return c;
}

void sort_by_sender(std::vector<Envelope>& batch) {
    std::stable_sort(batch.begin(), batch.end(), [](const Envelope& a, const Envelope& b) { return a.from < b.from; });
}

}  // namespace

Bytes encode_message(const NodeBound& m) {
    ByteWriter w;
    std::visit(Overloaded{
                   [&](const DisperseMessage& d) {
                       w.u8(static_cast<std::uint8_t>(MessageTag::Disperse));
                       write_chunk_body(w, d.chunk, d.commitments);
                   },
                   [&](const RetrieveMessage& r) {
                       w.u8(static_cast<std::uint8_t>(MessageTag::Retrieve));
                       write_block(w, r.block);
                   },
               },
               m);
    return std::move(w).take();
}

Bytes encode_message(const ClientBound& m) {
    ByteWriter w;
    std::visit(Overloaded{
                   [&](const StoredMessage& s) {
                       w.u8(static_cast<std::uint8_t>(MessageTag::Stored));
                       write_block(w, s.block);
                       w.raw(s.receipt.serialize());
                   },
                   [&](const RetrieveReplyMessage& r) {
                       w.u8(static_cast<std::uint8_t>(MessageTag::RetrieveReply));
                       write_chunk_body(w, r.chunk, r.commitments);
                   },
               },
               m);
    return std::move(w).take();
}

NodeBound decode_node_bound(ByteSpan bytes) {
    ByteReader r(bytes);
    const auto tag = static_cast<MessageTag>(r.u8());
    NodeBound out;
    if (tag == MessageTag::Disperse) {
        auto [chunk, h] = read_chunk_body(r);
        out = DisperseMessage{std::move(h), std::move(chunk)};
    } else if (tag == MessageTag::Retrieve) {
        out = RetrieveMessage{read_block(r)};
    } else {
        throw DecodeError("unknown node-bound message tag");
    }
    r.expect_end();
    return out;
}

ClientBound decode_client_bound(ByteSpan bytes) {
    ByteReader r(bytes);
    const auto tag = static_cast<MessageTag>(r.u8());
    ClientBound out;
    if (tag == MessageTag::Stored) {
        StoredMessage s;
        s.block = read_block(r);
        s.receipt = StorageReceipt::deserialize(r.raw(StorageReceipt::kBytes));
        out = s;
    } else if (tag == MessageTag::RetrieveReply) {
        auto [chunk, h] = read_chunk_body(r);
        out = RetrieveReplyMessage{std::move(h), std::move(chunk)};
    } else {
        throw DecodeError("unknown client-bound message tag");
    }
    r.expect_end();
    return out;
}

std::optional<ClientBound> handle_message(const SchemeParams& params, NodeState& state, const NodeBound& m) {
    if (const auto* d = std::get_if<DisperseMessage>(&m)) {
        auto receipt = node_verify_chunk(params, state, d->commitments, d->chunk);
        if (!receipt) return std::nullopt;
        return StoredMessage{hash_commitments(d->commitments), *receipt};
    }
    const auto& r = std::get<RetrieveMessage>(m);
    const auto it = state.store.find(r.block);
    if (it == state.store.end()) return std::nullopt;
    return RetrieveReplyMessage{it->second.commitments, it->second.chunk};
}

LoopbackTransport::LoopbackTransport(const SchemeParams& params, std::vector<NodeState*> nodes)
    : params_(params), nodes_(std::move(nodes)) {
    if (nodes_.size() != params.n()) throw InvalidArgument("loopback transport needs one slot per node");
}

void LoopbackTransport::send(std::uint16_t to, const NodeBound& message) {
    if (to < 1 || to > nodes_.size()) throw InvalidArgument("send: node index out of range");
    NodeState* node = nodes_[to - 1];
    if (!node) return;
    if (auto reply = handle_message(params_, *node, message)) outbox_.push_back({to, std::move(*reply)});
}

std::vector<Envelope> LoopbackTransport::receive() { return std::exchange(outbox_, {}); }

Expected<RetrievabilityCertificate, DisperseError> disperse_matrix(const SchemeParams& params, const DataMatrix& u,
                                                                   Transport& transport, unsigned threads) {
    const EncodedBlock enc = client_encode_matrix(params, u, threads);
    for (const auto& chunk : enc.chunks) transport.send(chunk.node_index, DisperseMessage{enc.commitments, chunk});

    RetrievabilityCertificate cert;
    std::set<std::uint16_t> seen;
    for (auto batch = transport.receive(); !batch.empty(); batch = transport.receive()) {
        sort_by_sender(batch);
        for (const auto& env : batch) {
            const auto* stored = std::get_if<StoredMessage>(&env.message);
            if (!stored || stored->block != enc.block) continue;
            const auto& receipt = stored->receipt;
            if (receipt.node_index < 1 || receipt.node_index > params.n() || seen.contains(receipt.node_index))
                continue;
            if (!verify_receipt(params.node_pk(receipt.node_index), enc.block, receipt)) continue;
            seen.insert(receipt.node_index);
            cert.receipts.push_back(receipt);
            if (cert.receipts.size() == params.q()) {
                cert.canonicalize();
                return cert;
            }
        }
    }
    return DisperseError::QuorumUnreachable;
}

Expected<RetrievabilityCertificate, DisperseError> disperse(const SchemeParams& params, ByteSpan block,
                                                            Transport& transport, unsigned threads) {
    return disperse_matrix(params, pack_block(params, block), transport, threads);
}

const char* to_string(RetrieveError e) noexcept {
    switch (e) {
        case RetrieveError::InvalidCertificate: return "invalid certificate";
        case RetrieveError::InsufficientValidChunks: return "availability violated: fewer than k valid chunks";
        case RetrieveError::CommitmentMismatch: return "decoded block does not match the commitment";
        case RetrieveError::MalformedBlock: return "committed matrix does not unpack to a block";
    }
    return "unknown retrieve error";
}

Expected<RetrievedMatrix, RetrieveError> retrieve_matrix(const SchemeParams& params,
                                                         const RetrievabilityCertificate& cert,
                                                         const BlockCommitment& c, Transport& transport,
                                                         unsigned threads, RetrieveScope scope) {
    if (!verify_certificate(params, cert, c)) return RetrieveError::InvalidCertificate;

    std::set<std::uint16_t> signers;
    for (const auto& r : cert.receipts) {
        if (r.node_index < 1 || r.node_index > params.n() || signers.contains(r.node_index)) continue;
        if (verify_receipt(params.node_pk(r.node_index), c, r)) signers.insert(r.node_index);
    }
    std::set<std::uint16_t> queried;
    if (scope == RetrieveScope::AllNodes) {
        for (std::size_t i = 1; i <= params.n(); ++i) queried.insert(static_cast<std::uint16_t>(i));
    } else {
        for (auto idx : signers) {
            if (queried.size() == params.q()) break;
            queried.insert(idx);
        }
    }
    for (auto idx : queried) transport.send(idx, RetrieveMessage{c});

    std::optional<ColumnCommitments> h;
    std::map<std::uint16_t, VectorCommitment> expected;
    std::vector<RetrieveReplyMessage> pending;
    std::map<std::uint16_t, Chunk> accepted;
    std::set<std::uint16_t> rejected;

    for (auto batch = transport.receive(); !batch.empty(); batch = transport.receive()) {
        sort_by_sender(batch);
        for (auto& env : batch) {
            auto* reply = std::get_if<RetrieveReplyMessage>(&env.message);
            if (!reply || !queried.contains(env.from) || reply->chunk.node_index != env.from) continue;
            if (!h && reply->commitments.size() == params.k() && hash_commitments(reply->commitments) == c) {
                h = reply->commitments;
                for (auto idx : queried) expected.emplace(idx, encode_commitment_at(params.code(), *h, idx));
            }
            pending.push_back(std::move(*reply));
        }
        if (!h) continue;
        for (auto& reply : pending) {
            const auto idx = reply.chunk.node_index;
            if (accepted.contains(idx)) continue;
            if (chunk_matches(params, expected.at(idx), reply.chunk)) {
                accepted.emplace(idx, std::move(reply.chunk));
                rejected.erase(idx);
            } else {
                rejected.insert(idx);
            }
        }
        pending.clear();

        if (accepted.size() >= params.k()) {
            std::vector<Chunk> chosen;
            RetrievedMatrix out;
            for (auto it = accepted.begin(); chosen.size() < params.k(); ++it) {
                chosen.push_back(it->second);
                out.used_nodes.push_back(it->first);
            }
            out.rejected_nodes.assign(rejected.begin(), rejected.end());
            out.matrix = decode_chunks(params.code(), chosen, threads);
            if (hash_commitments(commit_columns(params.commit(), out.matrix, threads)) != c)
                return RetrieveError::CommitmentMismatch;
            return out;
        }
    }
    return RetrieveError::InsufficientValidChunks;
}

Expected<Bytes, RetrieveError> retrieve(const SchemeParams& params, const RetrievabilityCertificate& cert,
                                        const BlockCommitment& c, Transport& transport, unsigned threads,
                                        RetrieveScope scope) {
    auto got = retrieve_matrix(params, cert, c, transport, threads, scope);
    if (!got) return got.error();
    try {
        return from_matrix(got->matrix);
    } catch (const DecodeError&) {
        return RetrieveError::MalformedBlock;
    }
}

}  // namespace savid

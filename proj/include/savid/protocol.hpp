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

// Client/node message flow for dispersal and retrieval over an abstract
// transport. Node handlers are plain functions of NodeState so the same
// logic runs in-process (CLI) and inside the simulator.

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "savid/scheme.hpp"

namespace savid {

enum class MessageTag : std::uint8_t {
    Disperse = 0x01,
    Stored = 0x02,
    Retrieve = 0x03,
    RetrieveReply = 0x04,
};

struct DisperseMessage {
    ColumnCommitments commitments;
    Chunk chunk;
};

struct StoredMessage {
    BlockCommitment block;
    StorageReceipt receipt;
};

struct RetrieveMessage {
    BlockCommitment block;
};

struct RetrieveReplyMessage {
    ColumnCommitments commitments;
    Chunk chunk;
};

using NodeBound = std::variant<DisperseMessage, RetrieveMessage>;
using ClientBound = std::variant<StoredMessage, RetrieveReplyMessage>;

/// 1-byte tag ‖ payload. Disperse and reply payloads use the chunk file body.
Bytes encode_message(const NodeBound& m);
Bytes encode_message(const ClientBound& m);
/// Throw DecodeError on unknown tags or malformed payloads.
NodeBound decode_node_bound(ByteSpan bytes);
ClientBound decode_client_bound(ByteSpan bytes);

struct Envelope {
    std::uint16_t from;  // 1-based node index
    ClientBound message;
};

/// Honest node behaviour: a receipt for a consistent chunk, the stored entry
/// for a known commitment, nothing otherwise.
std::optional<ClientBound> handle_message(const SchemeParams& params, NodeState& state, const NodeBound& m);

class Transport {
public:
    virtual ~Transport() = default;
    /// Queues a message for 1-based node index `to`.
    virtual void send(std::uint16_t to, const NodeBound& message) = 0;
    /// Messages delivered to the client at the next time step. Empty once no
    /// further message can arrive.
    virtual std::vector<Envelope> receive() = 0;
};

/// In-process transport: every node runs the honest handler synchronously and
/// all replies of one send wave are delivered as a single batch.
class LoopbackTransport final : public Transport {
public:
    LoopbackTransport(const SchemeParams& params, std::vector<NodeState*> nodes);

    void send(std::uint16_t to, const NodeBound& message) override;
    std::vector<Envelope> receive() override;

private:
    const SchemeParams& params_;
    std::vector<NodeState*> nodes_;  // nodes_[i] is node i + 1; null for absent nodes
    std::vector<Envelope> outbox_;
};

enum class DisperseError { QuorumUnreachable };

/// Sends every node its chunk and waits for q valid receipts from distinct
/// nodes, taken in arrival order with ties broken by ascending index.
Expected<RetrievabilityCertificate, DisperseError> disperse_matrix(const SchemeParams& params, const DataMatrix& u,
                                                                   Transport& transport, unsigned threads = 1);
Expected<RetrievabilityCertificate, DisperseError> disperse(const SchemeParams& params, ByteSpan block,
                                                            Transport& transport, unsigned threads = 1);

enum class RetrieveError {
    InvalidCertificate,
    InsufficientValidChunks,
    CommitmentMismatch,
    MalformedBlock,
};

const char* to_string(RetrieveError e) noexcept;

/// Who receives the retrieve request. The protocol asks the first q
/// certificate signers; AllNodes lets offline tooling use any k valid chunks.
enum class RetrieveScope { CertificateSigners, AllNodes };

struct RetrievedMatrix {
    DataMatrix matrix;
    std::vector<std::uint16_t> used_nodes;      // decoding set, ascending
    std::vector<std::uint16_t> rejected_nodes;  // replied with a chunk failing the check
};

/// Queries the first q valid certificate signers, adopts the first h-vector
/// that hashes to C, keeps chunks passing the homomorphic check and decodes
/// from the k lowest valid indices. Decoded columns are recommitted and
/// compared with C before returning.
Expected<RetrievedMatrix, RetrieveError> retrieve_matrix(const SchemeParams& params,
                                                         const RetrievabilityCertificate& cert,
                                                         const BlockCommitment& c, Transport& transport,
                                                         unsigned threads = 1,
                                                         RetrieveScope scope = RetrieveScope::CertificateSigners);
/// retrieve_matrix followed by from_matrix. MalformedBlock means the
/// committed matrix itself does not unpack (a dishonest disperser).
Expected<Bytes, RetrieveError> retrieve(const SchemeParams& params, const RetrievabilityCertificate& cert,
                                        const BlockCommitment& c, Transport& transport, unsigned threads = 1,
                                        RetrieveScope scope = RetrieveScope::CertificateSigners);

}  // namespace savid

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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "savid/commitments.hpp"
#include "savid/crypto.hpp"
#include "savid/matrix.hpp"
#include "savid/rs_code.hpp"

namespace savid {

struct QuorumSizes {
    std::size_t q;
    std::size_t k;
};

/// q = n - t, k = n - 2t. Throws InvalidArgument unless 0 <= t < n/2.
QuorumSizes choose_params(std::size_t n, std::size_t t);

/// Public parameters shared by the client, the storage nodes and verifiers.
class SchemeParams {
public:
    static constexpr std::size_t kMaxNodes = 0xffff;

    SchemeParams(std::size_t n, std::size_t t, std::shared_ptr<const CommitParams> commit,
                 std::vector<NodePublicKey> node_pks);

    std::size_t n() const noexcept { return n_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t q() const noexcept { return q_; }
    std::size_t k() const noexcept { return code_.k(); }
    /// Largest number of rows L a dispersed matrix may have.
    std::size_t max_rows() const noexcept { return commit_->max_len(); }
    const CodeParams& code() const noexcept { return code_; }
    const CommitParams& commit() const noexcept { return *commit_; }
    std::shared_ptr<const CommitParams> commit_ptr() const noexcept { return commit_; }
    std::span<const NodePublicKey> node_pks() const noexcept { return node_pks_; }
    /// Public key of 1-based node index.
    const NodePublicKey& node_pk(std::size_t index) const;

private:
    std::size_t n_, t_, q_;
    CodeParams code_;
    std::shared_ptr<const CommitParams> commit_;
    std::vector<NodePublicKey> node_pks_;
};

using ColumnCommitments = std::vector<VectorCommitment>;

/// Column node_index of the row-wise encoded matrix.
struct Chunk {
    std::uint16_t node_index = 0;  // 1-based
    std::vector<FieldElement> column;

    friend bool operator==(const Chunk&, const Chunk&) = default;
};

/// Receipts as carried on the wire. A certificate read from untrusted input
/// may hold duplicates or invalid signatures; verify_certificate counts only
/// distinct valid indices.
struct RetrievabilityCertificate {
    std::vector<StorageReceipt> receipts;

    /// Ascending by node index, one receipt per index.
    void canonicalize();

    friend bool operator==(const RetrievabilityCertificate&, const RetrievabilityCertificate&) = default;
};

/// Per-column vector commitments (h_1, …, h_k).
ColumnCommitments commit_columns(const CommitParams& params, const DataMatrix& u, unsigned threads = 1);
BlockCommitment commit_matrix(const SchemeParams& params, const DataMatrix& u, unsigned threads = 1);
/// Throws InvalidArgument when the block needs more than max_rows rows.
BlockCommitment commit_block(const SchemeParams& params, ByteSpan block, unsigned threads = 1);

/// Packs with the scheme's k and checks the row bound.
DataMatrix pack_block(const SchemeParams& params, ByteSpan block);

/// Row-wise encoding of u: n columns of length L.
std::vector<std::vector<FieldElement>> encode_rows(const CodeParams& code, const DataMatrix& u, unsigned threads = 1);

struct EncodedBlock {
    ColumnCommitments commitments;
    BlockCommitment block;
    std::vector<Chunk> chunks;  // chunks[i] belongs to node i + 1
};

EncodedBlock client_encode_matrix(const SchemeParams& params, const DataMatrix& u, unsigned threads = 1);
EncodedBlock client_encode(const SchemeParams& params, ByteSpan block, unsigned threads = 1);

/// The homomorphic check [Encode(h)]_i == VC(c_i) for i = chunk.node_index.
/// False for wrong-sized inputs instead of throwing.
bool chunk_consistent(const SchemeParams& params, std::span<const VectorCommitment> h, const Chunk& chunk);
/// Same check against a precomputed coded commitment.
bool chunk_matches(const SchemeParams& params, const VectorCommitment& expected, const Chunk& chunk);

/// Storage held by one node.
struct NodeState {
    struct Entry {
        ColumnCommitments commitments;
        Chunk chunk;
    };

    NodeState(std::uint16_t index, NodeKeypair key) : index(index), keypair(std::move(key)) {}

    std::uint16_t index;
    NodeKeypair keypair;
    std::map<BlockCommitment, Entry> store;
};

/// Node-side dispersal step: stores the chunk and signs (stored, C) when the
/// homomorphic check passes; otherwise leaves the state untouched.
std::optional<StorageReceipt> node_verify_chunk(const SchemeParams& params, NodeState& state,
                                                const ColumnCommitments& h, const Chunk& chunk);

/// True iff at least q distinct indices carry a receipt valid under their key.
bool verify_certificate(const SchemeParams& params, const RetrievabilityCertificate& cert, const BlockCommitment& c);

/// Decodes k chunks with distinct indices row-wise using one matrix
/// inversion. Shorter columns are zero-extended to the longest one.
DataMatrix decode_chunks(const CodeParams& code, std::span<const Chunk> chunks, unsigned threads = 1);

/// magic ‖ node_index (2B BE) ‖ L (8B BE) ‖ k (2B BE) ‖ k commitments ‖ L field elements.
inline constexpr std::string_view kChunkFileMagic = "SAVIDCH1";
/// magic ‖ C ‖ count (2B BE) ‖ receipts ascending by index.
inline constexpr std::string_view kCertificateFileMagic = "SAVIDCR1";

/// Chunk file body without the magic; shared with the wire messages.
void write_chunk_body(ByteWriter& w, const Chunk& chunk, std::span<const VectorCommitment> h);
std::pair<Chunk, ColumnCommitments> read_chunk_body(ByteReader& r);

Bytes serialize_chunk_file(const Chunk& chunk, std::span<const VectorCommitment> h);
/// Throws DecodeError for bad magic, truncation, trailing bytes or invalid points.
std::pair<Chunk, ColumnCommitments> parse_chunk_file(ByteSpan bytes);

Bytes serialize_certificate_file(const BlockCommitment& c, const RetrievabilityCertificate& cert);
std::pair<BlockCommitment, RetrievabilityCertificate> parse_certificate_file(ByteSpan bytes);

}  // namespace savid

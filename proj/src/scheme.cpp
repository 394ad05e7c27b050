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

#include "savid/scheme.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "savid/parallel.hpp"

namespace savid {

QuorumSizes choose_params(std::size_t n, std::size_t t) {
    if (n == 0) throw InvalidArgument("n must be positive");
    if (2 * t >= n)
        throw InvalidArgument("resilience bound violated: need t < n/2, got n=" + std::to_string(n) +
                              " t=" + std::to_string(t));
    return {n - t, n - 2 * t};
}

SchemeParams::SchemeParams(std::size_t n, std::size_t t, std::shared_ptr<const CommitParams> commit,
                           std::vector<NodePublicKey> node_pks)
    : n_(n),
      t_(t),
      q_(choose_params(n, t).q),
      code_(n, choose_params(n, t).k),
      commit_(std::move(commit)),
      node_pks_(std::move(node_pks)) {
    if (n > kMaxNodes) throw InvalidArgument("n exceeds the 2-byte node index range");
    if (!commit_) throw InvalidArgument("missing commitment parameters");
    if (node_pks_.size() != n) throw InvalidArgument("need one public key per node");
}

const NodePublicKey& SchemeParams::node_pk(std::size_t index) const {
    if (index < 1 || index > n_) throw InvalidArgument("node index out of range");
    return node_pks_[index - 1];
}

void RetrievabilityCertificate::canonicalize() {
    std::stable_sort(receipts.begin(), receipts.end(),
                     [](const auto& a, const auto& b) { return a.node_index < b.node_index; });
    receipts.erase(std::unique(receipts.begin(), receipts.end(),
                               [](const auto& a, const auto& b) { return a.node_index == b.node_index; }),
                   receipts.end());
}

ColumnCommitments commit_columns(const CommitParams& params, const DataMatrix& u, unsigned threads) {
    ColumnCommitments out(u.cols());
    parallel_for(u.cols(), threads, [&](std::size_t j) { out[j] = commit(params, u.column(j)); });
    return out;
}

BlockCommitment commit_matrix(const SchemeParams& params, const DataMatrix& u, unsigned threads) {
    if (u.cols() != params.k()) throw InvalidArgument("matrix must have k columns");
    return hash_commitments(commit_columns(params.commit(), u, threads));
}

DataMatrix pack_block(const SchemeParams& params, ByteSpan block) {
    const std::size_t rows = packed_rows(block.size(), params.k());
    if (rows > params.max_rows())
        throw InvalidArgument("block of " + std::to_string(block.size()) + " bytes needs " + std::to_string(rows) +
                              " rows, parameters allow " + std::to_string(params.max_rows()));
    return as_matrix(block, params.k());
}

BlockCommitment commit_block(const SchemeParams& params, ByteSpan block, unsigned threads) {
    return commit_matrix(params, pack_block(params, block), threads);
}

std::vector<std::vector<FieldElement>> encode_rows(const CodeParams& code, const DataMatrix& u, unsigned threads) {
    if (u.cols() != code.k()) throw InvalidArgument("matrix must have k columns");
    std::vector<std::vector<FieldElement>> columns(code.n(), std::vector<FieldElement>(u.rows()));
    parallel_for(u.rows(), threads, [&](std::size_t r) {
        const auto coded = encode(code, u.row(r));
        for (std::size_t i = 0; i < code.n(); ++i) columns[i][r] = coded[i];
    });
    return columns;
}

EncodedBlock client_encode_matrix(const SchemeParams& params, const DataMatrix& u, unsigned threads) {
    if (u.rows() > params.max_rows()) throw InvalidArgument("matrix has more rows than the parameters allow");
    EncodedBlock out;
    out.commitments = commit_columns(params.commit(), u, threads);
    out.block = hash_commitments(out.commitments);
    auto columns = encode_rows(params.code(), u, threads);
    out.chunks.reserve(params.n());
    for (std::size_t i = 0; i < params.n(); ++i)
        out.chunks.push_back({static_cast<std::uint16_t>(i + 1), std::move(columns[i])});
    return out;
}

EncodedBlock client_encode(const SchemeParams& params, ByteSpan block, unsigned threads) {
    return client_encode_matrix(params, pack_block(params, block), threads);
}

bool chunk_matches(const SchemeParams& params, const VectorCommitment& expected, const Chunk& chunk) {
    if (chunk.column.empty() || chunk.column.size() > params.max_rows()) return false;
    return commit(params.commit(), chunk.column) == expected;
}

bool chunk_consistent(const SchemeParams& params, std::span<const VectorCommitment> h, const Chunk& chunk) {
    if (h.size() != params.k() || chunk.node_index < 1 || chunk.node_index > params.n()) return false;
    return chunk_matches(params, encode_commitment_at(params.code(), h, chunk.node_index), chunk);
}

std::optional<StorageReceipt> node_verify_chunk(const SchemeParams& params, NodeState& state,
                                                const ColumnCommitments& h, const Chunk& chunk) {
    if (chunk.node_index != state.index) return std::nullopt;
    if (!chunk_consistent(params, h, chunk)) return std::nullopt;
    const BlockCommitment c = hash_commitments(h);
    state.store.insert_or_assign(c, NodeState::Entry{h, chunk});
    return sign_receipt(state.keypair, state.index, c);
}

bool verify_certificate(const SchemeParams& params, const RetrievabilityCertificate& cert, const BlockCommitment& c) {
    std::set<std::uint16_t> valid;
    for (const auto& r : cert.receipts) {
        if (r.node_index < 1 || r.node_index > params.n() || valid.contains(r.node_index)) continue;
        if (verify_receipt(params.node_pk(r.node_index), c, r)) valid.insert(r.node_index);
    }
    return valid.size() >= params.q();
}

DataMatrix decode_chunks(const CodeParams& code, std::span<const Chunk> chunks, unsigned threads) {
    if (chunks.size() != code.k()) throw InvalidArgument("decode_chunks: need exactly k chunks");
    std::vector<std::size_t> indices;
    std::size_t rows = 0;
    for (const auto& c : chunks) {
        indices.push_back(c.node_index);
        rows = std::max(rows, c.column.size());
    }
    if (rows == 0) throw InvalidArgument("decode_chunks: empty chunks");
    const FieldMatrix inverse = invert_submatrix(code, indices);
    std::vector<std::vector<FieldElement>> columns(code.k(), std::vector<FieldElement>(rows));
    parallel_for(rows, threads, [&](std::size_t r) {
        std::vector<FieldElement> symbols(chunks.size());
        for (std::size_t s = 0; s < chunks.size(); ++s)
            if (r < chunks[s].column.size()) symbols[s] = chunks[s].column[r];
        const auto info = apply_inverse(inverse, symbols);
        for (std::size_t j = 0; j < info.size(); ++j) columns[j][r] = info[j];
    });
    return DataMatrix(std::move(columns));
}

void write_chunk_body(ByteWriter& w, const Chunk& chunk, std::span<const VectorCommitment> h) {
    if (h.size() > 0xffff) throw InvalidArgument("too many commitments for a chunk file");
    w.u16(chunk.node_index);
    w.u64(chunk.column.size());
    w.u16(static_cast<std::uint16_t>(h.size()));
    for (const auto& c : h) w.raw(c.to_bytes());
    for (const auto& x : chunk.column) w.raw(x.to_bytes());
}

std::pair<Chunk, ColumnCommitments> read_chunk_body(ByteReader& r) {
    Chunk chunk;
    chunk.node_index = r.u16();
    const std::uint64_t rows = r.u64();
    const std::size_t k = r.u16();
    // Bound allocations by what the input can actually hold.
    if (k * VectorCommitment::kBytes > r.remaining() ||
        rows > (r.remaining() - k * VectorCommitment::kBytes) / FieldElement::kBytes)
        throw DecodeError("chunk header exceeds available bytes");
    ColumnCommitments h;
    h.reserve(k);
    for (std::size_t j = 0; j < k; ++j) h.push_back(VectorCommitment::from_bytes(r.raw(VectorCommitment::kBytes)));
    chunk.column.reserve(rows);
    for (std::uint64_t i = 0; i < rows; ++i) chunk.column.push_back(FieldElement::from_bytes(r.raw(FieldElement::kBytes)));
    return {std::move(chunk), std::move(h)};
}

Bytes serialize_chunk_file(const Chunk& chunk, std::span<const VectorCommitment> h) {
    ByteWriter w;
    w.raw(kChunkFileMagic);
    write_chunk_body(w, chunk, h);
    return std::move(w).take();
}

std::pair<Chunk, ColumnCommitments> parse_chunk_file(ByteSpan bytes) {
    ByteReader r(bytes);
    r.expect_magic(kChunkFileMagic);
    auto out = read_chunk_body(r);
    r.expect_end();
    return out;
}

Bytes serialize_certificate_file(const BlockCommitment& c, const RetrievabilityCertificate& cert) {
    RetrievabilityCertificate sorted = cert;
    std::stable_sort(sorted.receipts.begin(), sorted.receipts.end(),
                     [](const auto& a, const auto& b) { return a.node_index < b.node_index; });
    if (sorted.receipts.size() > 0xffff) throw InvalidArgument("too many receipts");
    ByteWriter w;
    w.raw(kCertificateFileMagic);
    w.raw(c.bytes);
    w.u16(static_cast<std::uint16_t>(sorted.receipts.size()));
    for (const auto& rc : sorted.receipts) w.raw(rc.serialize());
    return std::move(w).take();
}

std::pair<BlockCommitment, RetrievabilityCertificate> parse_certificate_file(ByteSpan bytes) {
    ByteReader r(bytes);
    r.expect_magic(kCertificateFileMagic);
    BlockCommitment c;
    const auto raw = r.raw(c.bytes.size());
    std::copy(raw.begin(), raw.end(), c.bytes.begin());
    const std::size_t count = r.u16();
    RetrievabilityCertificate cert;
    for (std::size_t i = 0; i < count; ++i) cert.receipts.push_back(StorageReceipt::deserialize(r.raw(StorageReceipt::kBytes)));
    r.expect_end();
    return {c, std::move(cert)};
}

}  // namespace savid

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

#include "savid/das.hpp"

#include <numeric>

#include "savid/parallel.hpp"
#include "savid/rng.hpp"

namespace savid {

ChunkOpening open_chunk(const SchemeParams& params, const DataMatrix& u, std::size_t i, unsigned threads) {
    if (i < 1 || i > params.n()) throw InvalidArgument("open_chunk: index out of range");
    if (u.cols() != params.k()) throw InvalidArgument("open_chunk: matrix must have k columns");
    ChunkOpening out;
    out.commitments = commit_columns(params.commit(), u, threads);
    out.chunk.node_index = static_cast<std::uint16_t>(i);
    out.chunk.column.resize(u.rows());
    const FieldElement alpha = params.code().alpha(i);
    parallel_for(u.rows(), threads, [&](std::size_t r) {
        FieldElement acc;
        for (std::size_t j = u.cols(); j-- > 0;) acc = acc * alpha + u(r, j);
        out.chunk.column[r] = acc;
    });
    return out;
}

bool verify_chunk(const SchemeParams& params, const BlockCommitment& c, const ChunkOpening& opening) {
    try {
        if (opening.commitments.size() != params.k() || hash_commitments(opening.commitments) != c) return false;
        return chunk_consistent(params, opening.commitments, opening.chunk);
    } catch (const Error&) {
        return false;
    }
}

EntryOpening open_entry_das(const SchemeParams& params, const DataMatrix& u, std::size_t i, std::size_t j,
                            unsigned threads) {
    if (u.cols() != params.k()) throw InvalidArgument("open_entry: matrix must have k columns");
    if (i < 1 || i > u.rows() || j < 1 || j > u.cols()) throw InvalidArgument("open_entry: position out of range");
    EntryOpening out;
    out.commitments = commit_columns(params.commit(), u, threads);
    const auto proof = open_entry(params.commit(), u.column(j - 1), i);
    out.value = proof.value;
    out.witness = proof.witness;
    out.row = i;
    out.column = static_cast<std::uint16_t>(j);
    return out;
}

bool verify_entry_das(const SchemeParams& params, const BlockCommitment& c, const EntryOpening& opening) {
    try {
        if (opening.commitments.size() != params.k() || hash_commitments(opening.commitments) != c) return false;
        if (opening.column < 1 || opening.column > params.k()) return false;
        if (opening.row < 1 || opening.row > params.max_rows()) return false;
        return verify_entry(params.commit(), opening.commitments[opening.column - 1], opening.row, opening.value,
                            opening.witness);
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t num_queries, ByteSpan seed) {
    if (num_queries < 1 || num_queries > n) throw InvalidArgument("light_sample: need 1 <= num_queries <= n");
    Csprng rng(seed);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{1});
    // Partial Fisher-Yates: the first num_queries slots form the sample.
    for (std::size_t s = 0; s < num_queries; ++s) std::swap(pool[s], pool[s + rng.uniform(n - s)]);
    pool.resize(num_queries);
    return pool;
}

SampleReport light_sample(const SchemeParams& params, const BlockCommitment& c, std::size_t num_queries,
                          const ChunkResponder& responder, ByteSpan seed) {
    SampleReport report;
    report.queried = sample_indices(params.n(), num_queries, seed);
    report.accepted = true;
    for (const std::size_t index : report.queried) {
        const auto response = responder(index);
        if (!response || response->chunk.node_index != index || !verify_chunk(params, c, *response)) {
            report.accepted = false;
            report.failed_index = index;
            break;
        }
    }
    return report;
}

Bytes serialize_entry_opening(const EntryOpening& opening) {
    ByteWriter w;
    w.raw(kEntryOpeningMagic);
    w.u64(opening.row);
    w.u16(opening.column);
    if (opening.commitments.size() > 0xffff) throw InvalidArgument("too many commitments");
    w.u16(static_cast<std::uint16_t>(opening.commitments.size()));
    for (const auto& h : opening.commitments) w.raw(h.to_bytes());
    w.raw(opening.value.to_bytes());
    w.raw(opening.witness.to_bytes());
    return std::move(w).take();
}

EntryOpening parse_entry_opening(ByteSpan bytes) {
    ByteReader r(bytes);
    r.expect_magic(kEntryOpeningMagic);
    EntryOpening out;
    out.row = r.u64();
    out.column = r.u16();
    const std::size_t k = r.u16();
    if (k * VectorCommitment::kBytes > r.remaining()) throw DecodeError("entry opening truncated");
    for (std::size_t j = 0; j < k; ++j)
        out.commitments.push_back(VectorCommitment::from_bytes(r.raw(VectorCommitment::kBytes)));
    out.value = FieldElement::from_bytes(r.raw(FieldElement::kBytes));
    out.witness = EntryWitness::from_bytes(r.raw(EntryWitness::kBytes));
    r.expect_end();
    return out;
}

Bytes serialize_chunk_opening(const ChunkOpening& opening) {
    return serialize_chunk_file(opening.chunk, opening.commitments);
}

ChunkOpening parse_chunk_opening(ByteSpan bytes) {
    auto [chunk, h] = parse_chunk_file(bytes);
    return {std::move(chunk), std::move(h)};
}

}  // namespace savid

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

// Data availability sampling on top of the block commitment. A chunk
// opening verifies only if it is the correct coded column, so a verified
// sample also certifies the encoding.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "savid/scheme.hpp"

namespace savid {

struct ChunkOpening {
    Chunk chunk;
    ColumnCommitments commitments;

    friend bool operator==(const ChunkOpening&, const ChunkOpening&) = default;
};

struct EntryOpening {
    FieldElement value;
    std::uint64_t row = 0;     // 1-based position inside the column
    std::uint16_t column = 0;  // 1-based column index
    ColumnCommitments commitments;
    EntryWitness witness;

    friend bool operator==(const EntryOpening&, const EntryOpening&) = default;
};

/// Chunk i (1-based) of the row-wise encoding of u, with the column commitments.
ChunkOpening open_chunk(const SchemeParams& params, const DataMatrix& u, std::size_t i, unsigned threads = 1);

/// C == H(h) and [Encode(h)]_i == VC(c_i). Never throws.
bool verify_chunk(const SchemeParams& params, const BlockCommitment& c, const ChunkOpening& opening);

/// Opens entry u[i][j] (1-based row i, column j).
EntryOpening open_entry_das(const SchemeParams& params, const DataMatrix& u, std::size_t i, std::size_t j,
                            unsigned threads = 1);

/// C == H(h) and the entry relation against h_j. Never throws.
bool verify_entry_das(const SchemeParams& params, const BlockCommitment& c, const EntryOpening& opening);

/// Returns the opening for a 1-based chunk index, or nothing when withheld.
using ChunkResponder = std::function<std::optional<ChunkOpening>(std::size_t)>;

struct SampleReport {
    bool accepted = false;
    std::vector<std::size_t> queried;  // in query order
    std::optional<std::size_t> failed_index;
};

/// num_queries distinct indices drawn uniformly from [1, n] by a partial
/// Fisher-Yates shuffle seeded with `seed`.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t num_queries, ByteSpan seed);

/// Queries sample_indices(n, num_queries, seed) in order. Accepts
/// iff every response is present and verifies. Throws InvalidArgument unless
/// 1 <= num_queries <= n.
SampleReport light_sample(const SchemeParams& params, const BlockCommitment& c, std::size_t num_queries,
                          const ChunkResponder& responder, ByteSpan seed);

/// magic ‖ row (8B BE) ‖ column (2B BE) ‖ k (2B BE) ‖ k commitments ‖ value ‖ witness.
inline constexpr std::string_view kEntryOpeningMagic = "SAVIDEO1";

Bytes serialize_entry_opening(const EntryOpening& opening);
EntryOpening parse_entry_opening(ByteSpan bytes);

/// Chunk openings use the chunk file format.
Bytes serialize_chunk_opening(const ChunkOpening& opening);
ChunkOpening parse_chunk_opening(ByteSpan bytes);

}  // namespace savid

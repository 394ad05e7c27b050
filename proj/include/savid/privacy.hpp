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

// Blinding: U = [[Ũ, b], [s]] with a uniform column b and a uniform row s, so
// that a single coded chunk is independent of Ũ. Blinded matrices go through
// the ordinary dispersal pipeline unchanged.
//
// The randomness comes from a seedable CSPRNG for reproducible runs.
// Production callers should seed it from Csprng::random_seed().

#pragma once

#include <span>

#include "savid/matrix.hpp"
#include "savid/rng.hpp"
#include "savid/scheme.hpp"

namespace savid {

struct BlindedMatrix {
    DataMatrix inner;  // L × k
    std::size_t original_rows = 0;
    std::size_t original_cols = 0;
};

/// Appends b (L-1 entries) and s (k entries) drawn from rng.
BlindedMatrix blind(const DataMatrix& u_tilde, Csprng& rng);
BlindedMatrix blind(const DataMatrix& u_tilde, ByteSpan seed);
/// Explicit blinding vectors; b.size() must equal the row count and s.size()
/// the column count plus one.
BlindedMatrix blind_with(const DataMatrix& u_tilde, std::span<const FieldElement> b, std::span<const FieldElement> s);

/// Drops the last row and the last column. Throws InvalidArgument for fewer
/// than two rows or columns.
DataMatrix unblind(const DataMatrix& u);

/// Removes trailing all-zero rows (keeps at least one row).
DataMatrix strip_trailing_zero_rows(const DataMatrix& u);

/// Packs a block into k - 1 columns and blinds it to the scheme's k columns.
DataMatrix pack_blinded_block(const SchemeParams& params, ByteSpan block, Csprng& rng);
/// Inverse of pack_blinded_block on a retrieved matrix. Zero rows appended
/// by chunk padding are removed before unblinding. Throws DecodeError.
Bytes unpack_blinded_block(const DataMatrix& retrieved);

}  // namespace savid

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

#include <cstddef>
#include <span>
#include <vector>

#include "savid/field.hpp"

namespace savid {

/// L × k matrix of field elements with column access; the uncoded form of a block.
class DataMatrix {
public:
    DataMatrix() = default;
    DataMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of k columns of equal, nonzero length.
    explicit DataMatrix(std::vector<std::vector<FieldElement>> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    FieldElement& operator()(std::size_t r, std::size_t c) { return columns_[c][r]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return columns_[c][r]; }

    std::span<const FieldElement> column(std::size_t c) const { return columns_.at(c); }
    std::vector<FieldElement> row(std::size_t r) const;

    friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<FieldElement>> columns_;
};

/// Payload bytes carried by each data element; 31 < 32 keeps every packed
/// integer below 2^248 < p.
inline constexpr std::size_t kBytesPerElement = 31;

/// Number of rows as_matrix produces for a block of `size` bytes.
std::size_t packed_rows(std::size_t size, std::size_t k);

/// Packs bytes row-major: element 0 holds |B| as an integer, elements 1.. hold
/// 31-byte little-endian slices, the rest is zero padding up to L·k entries.
/// Throws InvalidArgument for an empty block or k == 0.
DataMatrix as_matrix(ByteSpan block, std::size_t k);

/// Inverse of as_matrix. Throws DecodeError when the header exceeds the
/// matrix capacity or any padding is nonzero.
Bytes from_matrix(const DataMatrix& m);

}  // namespace savid

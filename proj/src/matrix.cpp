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

#include "savid/matrix.hpp"

#include <algorithm>
#include <array>

namespace savid {

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols, std::vector<FieldElement>(rows)) {}

DataMatrix::DataMatrix(std::vector<std::vector<FieldElement>> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw InvalidArgument("DataMatrix needs at least one column");
    rows_ = columns_[0].size();
    if (rows_ == 0) throw InvalidArgument("DataMatrix needs at least one row");
    for (const auto& c : columns_)
        if (c.size() != rows_) throw InvalidArgument("DataMatrix columns must have equal length");
}

std::vector<FieldElement> DataMatrix::row(std::size_t r) const {
    std::vector<FieldElement> out;
    out.reserve(cols());
    for (const auto& c : columns_) out.push_back(c.at(r));
    return out;
}

std::size_t packed_rows(std::size_t size, std::size_t k) {
    if (k == 0) throw InvalidArgument("k must be positive");
    const std::size_t elements = 1 + (size + kBytesPerElement - 1) / kBytesPerElement;
    return (elements + k - 1) / k;
}

DataMatrix as_matrix(ByteSpan block, std::size_t k) {
    if (block.empty()) throw InvalidArgument("as_matrix: block must be nonempty");
    const std::size_t rows = packed_rows(block.size(), k);
    DataMatrix m(rows, k);
    m(0, 0) = FieldElement(static_cast<std::uint64_t>(block.size()));
    std::size_t e = 1;
    for (std::size_t off = 0; off < block.size(); off += kBytesPerElement, ++e) {
        std::array<std::uint8_t, FieldElement::kBytes> buf{};
        const std::size_t n = std::min(kBytesPerElement, block.size() - off);
        std::copy_n(block.begin() + static_cast<std::ptrdiff_t>(off), n, buf.begin());
        m(e / k, e % k) = FieldElement::from_bytes(buf);
    }
    return m;
}

Bytes from_matrix(const DataMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw DecodeError("from_matrix: empty matrix");
    const std::size_t k = m.cols();
    const std::size_t capacity = (m.rows() * k - 1) * kBytesPerElement;
    const auto header = m(0, 0).to_limbs();
    if (header[1] != 0 || header[2] != 0 || header[3] != 0 || header[0] == 0 || header[0] > capacity)
        throw DecodeError("from_matrix: length header inconsistent with matrix capacity");
    const std::size_t size = static_cast<std::size_t>(header[0]);
    const std::size_t data_elements = (size + kBytesPerElement - 1) / kBytesPerElement;

    Bytes out;
    out.reserve(size);
    for (std::size_t e = 1; e < m.rows() * k; ++e) {
        const auto bytes = m(e / k, e % k).to_bytes();
        if (e > data_elements) {
            if (!m(e / k, e % k).is_zero()) throw DecodeError("from_matrix: nonzero padding element");
            continue;
        }
        const std::size_t take = std::min(kBytesPerElement, size - out.size());
        for (std::size_t b = take; b < bytes.size(); ++b)
            if (bytes[b] != 0) throw DecodeError("from_matrix: element exceeds packing width");
        out.insert(out.end(), bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return out;
}

}  // namespace savid

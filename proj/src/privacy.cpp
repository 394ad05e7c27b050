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

#include "savid/privacy.hpp"

#include <string>

namespace savid {

BlindedMatrix blind_with(const DataMatrix& u_tilde, std::span<const FieldElement> b, std::span<const FieldElement> s) {
    if (u_tilde.rows() == 0 || u_tilde.cols() == 0) throw InvalidArgument("blind: empty matrix");
    if (b.size() != u_tilde.rows() || s.size() != u_tilde.cols() + 1)
        throw InvalidArgument("blind: blinding vectors do not match the matrix shape");
    const std::size_t rows = u_tilde.rows() + 1;
    const std::size_t cols = u_tilde.cols() + 1;
    DataMatrix u(rows, cols);
    for (std::size_t c = 0; c + 1 < cols; ++c)
        for (std::size_t r = 0; r + 1 < rows; ++r) u(r, c) = u_tilde(r, c);
    for (std::size_t r = 0; r + 1 < rows; ++r) u(r, cols - 1) = b[r];
    for (std::size_t c = 0; c < cols; ++c) u(rows - 1, c) = s[c];
    return {std::move(u), u_tilde.rows(), u_tilde.cols()};
}

BlindedMatrix blind(const DataMatrix& u_tilde, Csprng& rng) {
    std::vector<FieldElement> b(u_tilde.rows()), s(u_tilde.cols() + 1);
    for (auto& x : b) x = rng.field_element();
    for (auto& x : s) x = rng.field_element();
    return blind_with(u_tilde, b, s);
}

BlindedMatrix blind(const DataMatrix& u_tilde, ByteSpan seed) {
    Csprng rng(seed);
    return blind(u_tilde, rng);
}

DataMatrix unblind(const DataMatrix& u) {
    if (u.rows() < 2 || u.cols() < 2)
        throw InvalidArgument("unblind: need at least 2 rows and 2 columns, got " + std::to_string(u.rows()) + "x" +
                              std::to_string(u.cols()));
    DataMatrix out(u.rows() - 1, u.cols() - 1);
    for (std::size_t c = 0; c < out.cols(); ++c)
        for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = u(r, c);
    return out;
}

DataMatrix strip_trailing_zero_rows(const DataMatrix& u) {
    std::size_t rows = u.rows();
    auto row_zero = [&](std::size_t r) {
        for (std::size_t c = 0; c < u.cols(); ++c)
            if (!u(r, c).is_zero()) return false;
        return true;
    };
    while (rows > 1 && row_zero(rows - 1)) --rows;
    if (rows == u.rows()) return u;
    DataMatrix out(rows, u.cols());
    for (std::size_t c = 0; c < u.cols(); ++c)
        for (std::size_t r = 0; r < rows; ++r) out(r, c) = u(r, c);
    return out;
}

DataMatrix pack_blinded_block(const SchemeParams& params, ByteSpan block, Csprng& rng) {
    if (params.k() < 2) throw InvalidArgument("blinded dispersal needs k >= 2");
    const std::size_t rows = packed_rows(block.size(), params.k() - 1) + 1;
    if (rows > params.max_rows())
        throw InvalidArgument("blinded block needs " + std::to_string(rows) + " rows, parameters allow " +
                              std::to_string(params.max_rows()));
    return blind(as_matrix(block, params.k() - 1), rng).inner;
}

Bytes unpack_blinded_block(const DataMatrix& retrieved) {
    const DataMatrix trimmed = strip_trailing_zero_rows(retrieved);
    if (trimmed.rows() < 2 || trimmed.cols() < 2) throw DecodeError("retrieved matrix too small to be blinded");
    return from_matrix(unblind(trimmed));
}

}  // namespace savid

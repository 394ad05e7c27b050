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

#include <doctest.h>

#include "savid/privacy.hpp"
#include "savid/protocol.hpp"
#include "test_util.hpp"

using namespace savid;

TEST_CASE("blinded matrix layout") {
    Csprng rng(60);
    const auto u = testutil::random_matrix(rng, 3, 2);
    const auto b = testutil::random_vector(rng, 3);
    const auto s = testutil::random_vector(rng, 3);
    const auto bl = blind_with(u, b, s);
    REQUIRE(bl.inner.rows() == 4);
    REQUIRE(bl.inner.cols() == 3);
    CHECK(bl.original_rows == 3);
    CHECK(bl.original_cols == 2);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 2; ++c) CHECK(bl.inner(r, c) == u(r, c));
        CHECK(bl.inner(r, 2) == b[r]);
    }
    CHECK(bl.inner.row(3) == s);
    CHECK(unblind(bl.inner) == u);
    CHECK_THROWS_AS(blind_with(u, std::span(b).first(2), s), InvalidArgument);
    CHECK_THROWS_AS(blind_with(u, b, std::span(s).first(2)), InvalidArgument);
}

TEST_CASE("seeded blinding is reproducible") {
    Csprng rng(61);
    const auto u = testutil::random_matrix(rng, 4, 3);
    CHECK(blind(u, testutil::as_bytes("x")).inner == blind(u, testutil::as_bytes("x")).inner);
    CHECK_FALSE(blind(u, testutil::as_bytes("x")).inner == blind(u, testutil::as_bytes("y")).inner);
    CHECK_THROWS_AS(unblind(DataMatrix(1, 3)), InvalidArgument);
    CHECK_THROWS_AS(unblind(DataMatrix(3, 1)), InvalidArgument);
}

// For every pair of data matrices and every blinding of the first there is
// exactly one blinding of the second giving the same chunk i, so a single
// chunk carries no information about the data.
TEST_CASE("a single chunk is independent of the data") {
    const auto& p = *testutil::deployment(10, 3, 16).params;
    const std::size_t k = p.k();
    Csprng rng(62);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng.uniform(5);
        const auto u1 = testutil::random_matrix(rng, rows, k - 1);
        const auto u2 = testutil::random_matrix(rng, rows, k - 1);
        const auto b = testutil::random_vector(rng, rows);
        const auto s = testutil::random_vector(rng, k);
        const std::size_t i = 1 + rng.uniform(p.n());

        const auto g = p.code().generator_column(i);
        const auto last_inv = g[k - 1].inverse();
        std::vector<FieldElement> b2(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            FieldElement delta;
            for (std::size_t j = 0; j + 1 < k; ++j) delta += (u1(r, j) - u2(r, j)) * g[j];
            b2[r] = b[r] + delta * last_inv;
        }
        const auto c1 = encode_rows(p.code(), blind_with(u1, b, s).inner);
        const auto c2 = encode_rows(p.code(), blind_with(u2, b2, s).inner);
        CHECK(c1[i - 1] == c2[i - 1]);
        if (!(u1 == u2)) CHECK_FALSE(c1 == c2);
    }
}

TEST_CASE("blinded dispersal roundtrip") {
    const auto& d = testutil::deployment(10, 3, 16);
    const auto& p = *d.params;
    Csprng rng(63);
    for (std::size_t size : {1u, 40u, 93u, 94u, 400u}) {
        std::vector<NodeState> nodes;
        for (std::size_t i = 0; i < 10; ++i) nodes.emplace_back(static_cast<std::uint16_t>(i + 1), d.keys[i]);
        std::vector<NodeState*> ptrs;
        for (auto& n : nodes) ptrs.push_back(&n);

        const Bytes block = testutil::random_bytes(rng, size);
        const auto u = pack_blinded_block(p, block, rng);
        CHECK(u.cols() == p.k());
        CHECK(u.rows() == packed_rows(size, p.k() - 1) + 1);
        LoopbackTransport tr(p, ptrs);
        const auto cert = disperse_matrix(p, u, tr).value();
        const auto got = retrieve_matrix(p, cert, commit_matrix(p, u), tr).value();
        CHECK(unpack_blinded_block(got.matrix) == block);
    }
    CHECK_THROWS_AS(pack_blinded_block(p, Bytes(16 * 3 * 31), rng), InvalidArgument);
    CHECK_THROWS_AS(pack_blinded_block(*testutil::deployment(3, 1, 8).params, Bytes{1}, rng), InvalidArgument);
}

TEST_CASE("trailing zero rows are stripped before unblinding") {
    Csprng rng(64);
    const Bytes block{1, 2, 3, 4};
    const auto bl = blind(as_matrix(block, 2), rng).inner;
    DataMatrix padded(bl.rows() + 2, bl.cols());
    for (std::size_t r = 0; r < bl.rows(); ++r)
        for (std::size_t c = 0; c < bl.cols(); ++c) padded(r, c) = bl(r, c);
    CHECK(strip_trailing_zero_rows(padded) == bl);
    CHECK(unpack_blinded_block(padded) == block);
    CHECK(strip_trailing_zero_rows(DataMatrix(3, 2)).rows() == 1);
}

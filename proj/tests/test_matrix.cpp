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

#include "savid/matrix.hpp"
#include "test_util.hpp"

using namespace savid;

TEST_CASE("packed row count") {
    CHECK(packed_rows(31, 1) == 2);
    CHECK(packed_rows(32, 1) == 3);
    CHECK(packed_rows(1, 2) == 1);
    CHECK(packed_rows(22'000'000, 86) == 8253);
    CHECK(as_matrix(testutil::as_bytes(std::string(31, 'x')), 1).rows() == 2);
}

TEST_CASE("pack and unpack roundtrip") {
    Csprng rng(20);
    for (std::size_t k : {1u, 2u, 86u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Bytes block = testutil::random_bytes(rng, 1 + rng.uniform(trial < 90 ? 200 : 5000));
            const auto m = as_matrix(block, k);
            REQUIRE(m.cols() == k);
            REQUIRE(m.rows() == packed_rows(block.size(), k));
            CHECK(m(0, 0) == FieldElement(block.size()));
            CHECK(from_matrix(m) == block);
        }
    }
}

TEST_CASE("row-major element order") {
    Bytes block(31 * 3, 0);
    block[0] = 1;   // element 1
    block[31] = 2;  // element 2
    block[62] = 3;  // element 3
    const auto m = as_matrix(block, 2);
    CHECK(m(0, 1) == FieldElement(1));
    CHECK(m(1, 0) == FieldElement(2));
    CHECK(m(1, 1) == FieldElement(3));
    CHECK(m.row(1) == std::vector{FieldElement(2), FieldElement(3)});
}

TEST_CASE("packing rejects empty input") {
    CHECK_THROWS_AS(as_matrix(Bytes{}, 2), InvalidArgument);
    CHECK_THROWS_AS(as_matrix(Bytes{1}, 0), InvalidArgument);
}

TEST_CASE("unpacking rejects malformed matrices") {
    const Bytes block{1, 2, 3, 4, 5};
    auto m = as_matrix(block, 2);

    auto too_long = m;
    too_long(0, 0) = FieldElement(1000);
    CHECK_THROWS_AS(from_matrix(too_long), DecodeError);

    auto zero_len = m;
    zero_len(0, 0) = FieldElement::zero();
    CHECK_THROWS_AS(from_matrix(zero_len), DecodeError);

    auto dirty_padding = as_matrix(block, 4);
    dirty_padding(0, 3) = FieldElement(7);
    CHECK_THROWS_AS(from_matrix(dirty_padding), DecodeError);

    auto high_byte = m;
    high_byte(0, 1) = FieldElement(2).pow(250);
    CHECK_THROWS_AS(from_matrix(high_byte), DecodeError);

    auto tail = m;
    tail(0, 1) = FieldElement(0x0100'0000'0000);
    CHECK_THROWS_AS(from_matrix(tail), DecodeError);

    auto huge = m;
    huge(0, 0) = FieldElement(2).pow(64);
    CHECK_THROWS_AS(from_matrix(huge), DecodeError);
}

TEST_CASE("matrix from columns validates shape") {
    CHECK_THROWS_AS(DataMatrix(std::vector<std::vector<FieldElement>>{{FieldElement(1)}, {}}), InvalidArgument);
    CHECK_THROWS_AS(DataMatrix(std::vector<std::vector<FieldElement>>{}), InvalidArgument);
    const DataMatrix m(std::vector<std::vector<FieldElement>>{{FieldElement(1), FieldElement(2)}, {FieldElement(3), FieldElement(4)}});
    CHECK(m(1, 0) == FieldElement(2));
    CHECK(m(0, 1) == FieldElement(3));
}

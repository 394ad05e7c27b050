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

#include <numeric>

#include "savid/rs_code.hpp"
#include "test_util.hpp"

using namespace savid;

namespace {

FieldElement fe(std::uint64_t v) { return FieldElement(v); }

// Independent reference: Σ_j info[j] · α^j with explicit powers.
std::vector<FieldElement> oracle_encode(const CodeParams& code, std::span<const FieldElement> info) {
    std::vector<FieldElement> out;
    for (std::size_t i = 1; i <= code.n(); ++i) {
        FieldElement acc, power = FieldElement::one();
        for (const auto& u : info) {
            acc += u * power;
            power *= code.alpha(i);
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace

TEST_CASE("encode at explicit points") {
    const CodeParams code({fe(1), fe(2), fe(3)}, 2);
    CHECK(encode(code, std::vector{fe(3), fe(4)}) == std::vector{fe(7), fe(11), fe(15)});
    CHECK(encode(code, std::vector{fe(0), fe(0)}) == std::vector{fe(0), fe(0), fe(0)});
}

TEST_CASE("decode at explicit points") {
    const CodeParams code({fe(1), fe(2), fe(3)}, 2);
    const std::vector<Share> shares{{2, fe(11)}, {3, fe(15)}};
    CHECK(decode(code, shares) == std::vector{fe(3), fe(4)});
}

TEST_CASE("code parameter validation") {
    CHECK_THROWS_AS(CodeParams({fe(1), fe(1)}, 1), InvalidArgument);
    CHECK_THROWS_AS(CodeParams(4, 5), InvalidArgument);
    CHECK_THROWS_AS(CodeParams(4, 0), InvalidArgument);
    const CodeParams code(8, 3);
    CHECK_THROWS_AS(code.alpha(0), InvalidArgument);
    CHECK_THROWS_AS(code.alpha(9), InvalidArgument);
    CHECK_THROWS_AS(encode(code, std::vector{fe(1)}), InvalidArgument);
    const auto g = code.generator_column(5);
    CHECK(g[0] == FieldElement::one());
    for (std::size_t j = 1; j < g.size(); ++j) CHECK(g[j] == g[j - 1] * code.alpha(5));
    CHECK(code.alpha(1) == FieldElement::one());
    CHECK(code.alpha(2) == FieldElement::root_of_unity(3));
}

TEST_CASE("fft path equals naive evaluation") {
    Csprng rng(10);
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{8, 3}, {64, 22}, {256, 86}, {100, 30}}) {
        const CodeParams code(n, k);
        for (int trial = 0; trial < 100; ++trial) {
            const auto info = testutil::random_vector(rng, k);
            const auto fast = encode(code, info);
            REQUIRE(fast == encode_naive(code, info));
            if (trial < 3) CHECK(fast == oracle_encode(code, info));
        }
    }
}

TEST_CASE("encoding is linear") {
    Csprng rng(11);
    const CodeParams code(16, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = testutil::random_vector(rng, 5), v = testutil::random_vector(rng, 5);
        const auto a = rng.field_element(), b = rng.field_element();
        std::vector<FieldElement> mix(5);
        for (std::size_t j = 0; j < 5; ++j) mix[j] = a * u[j] + b * v[j];
        const auto eu = encode(code, u), ev = encode(code, v), em = encode(code, mix);
        for (std::size_t i = 0; i < 16; ++i) CHECK(em[i] == a * eu[i] + b * ev[i]);
    }
}

TEST_CASE("every 3-subset of an (8,3) codeword decodes") {
    Csprng rng(12);
    const CodeParams code(8, 3);
    int decoded = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto info = testutil::random_vector(rng, 3);
        const auto cw = encode(code, info);
        for (std::size_t a = 1; a <= 8; ++a)
            for (std::size_t b = a + 1; b <= 8; ++b)
                for (std::size_t c = b + 1; c <= 8; ++c) {
                    const std::vector<Share> shares{{c, cw[c - 1]}, {a, cw[a - 1]}, {b, cw[b - 1]}};
                    CHECK(decode(code, shares) == info);
                    ++decoded;
                }
    }
    CHECK(decoded == 20 * 56);
}

TEST_CASE("full codeword decodes when k = n") {
    Csprng rng(13);
    const CodeParams code(8, 8);
    const auto info = testutil::random_vector(rng, 8);
    const auto cw = encode(code, info);
    std::vector<Share> shares;
    for (std::size_t i = 1; i <= 8; ++i) shares.push_back({i, cw[i - 1]});
    CHECK(decode(code, shares) == info);
}

TEST_CASE("decode rejects bad share sets") {
    const CodeParams code(8, 3);
    CHECK_THROWS_AS(decode(code, std::vector<Share>{{1, fe(1)}, {1, fe(2)}, {2, fe(3)}}), InvalidArgument);
    CHECK_THROWS_AS(decode(code, std::vector<Share>{{1, fe(1)}, {2, fe(2)}, {9, fe(3)}}), InvalidArgument);
    CHECK_THROWS_AS(decode(code, std::vector<Share>{{1, fe(1)}, {2, fe(2)}}), InvalidArgument);
}

TEST_CASE("submatrix inversion") {
    const CodeParams code({fe(1), fe(2)}, 2);
    const std::vector<std::size_t> idx{1, 2};
    const auto inv = invert_submatrix(code, idx);
    CHECK(inv(0, 0) == fe(2));
    CHECK(inv(0, 1) == -fe(1));
    CHECK(inv(1, 0) == -fe(1));
    CHECK(inv(1, 1) == fe(1));

    const CodeParams single(8, 1);
    const std::vector<std::size_t> one{6};
    CHECK(invert_submatrix(single, one) == FieldMatrix::identity(1));

    Csprng rng(14);
    const CodeParams code8(8, 4);
    std::vector<std::size_t> all(8);
    std::iota(all.begin(), all.end(), std::size_t{1});
    for (int trial = 0; trial < 10; ++trial) {
        for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.uniform(i)]);
        const std::vector<std::size_t> pick(all.begin(), all.begin() + 4);
        FieldMatrix g(4, 4);
        for (std::size_t c = 0; c < 4; ++c) {
            const auto col = code8.generator_column(pick[c]);
            for (std::size_t r = 0; r < 4; ++r) g(r, c) = col[r];
        }
        CHECK(g * invert_submatrix(code8, pick) == FieldMatrix::identity(4));
    }
}

TEST_CASE("singular matrix is rejected") {
    FieldMatrix m(2, 2);
    m(0, 0) = fe(1);
    m(0, 1) = fe(2);
    m(1, 0) = fe(2);
    m(1, 1) = fe(4);
    CHECK_THROWS_AS(invert(m), InvalidArgument);
}

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

#include "oracle_vectors.hpp"
#include "savid/domain.hpp"
#include "test_util.hpp"

using namespace savid;
using testutil::fe_hex;

TEST_CASE("field arithmetic matches big-integer oracle") {
    const auto a = fe_hex(oracle::kFieldA);
    const auto b = fe_hex(oracle::kFieldB);
    CHECK(a + b == fe_hex(oracle::kFieldSum));
    CHECK(a - b == fe_hex(oracle::kFieldDiff));
    CHECK(a * b == fe_hex(oracle::kFieldProd));
    CHECK(a.inverse() == fe_hex(oracle::kFieldInvA));
    CHECK(a.pow(12345) == fe_hex(oracle::kFieldAPow12345));
    CHECK(to_hex(a.to_bytes()) == oracle::kFieldA);
}

TEST_CASE("wide reduction matches oracle") {
    CHECK(FieldElement::from_bytes_wide(from_hex(oracle::kFieldWideInput)) == fe_hex(oracle::kFieldWideReduced));
}

TEST_CASE("canonical encoding is enforced") {
    const Bytes p = from_hex(oracle::kModulusLe);
    CHECK_THROWS_AS(FieldElement::from_bytes(p), DecodeError);
    Bytes p_minus_one = p;
    p_minus_one[0] -= 1;
    const auto x = FieldElement::from_bytes(p_minus_one);
    CHECK(x + FieldElement::one() == FieldElement::zero());
    CHECK_THROWS_AS(FieldElement::from_bytes(Bytes(31)), DecodeError);
    Bytes all_ff(32, 0xff);
    CHECK_THROWS_AS(FieldElement::from_bytes(all_ff), DecodeError);
}

TEST_CASE("roots of unity") {
    CHECK(FieldElement::root_of_unity(32) == fe_hex(oracle::kRoot32));
    CHECK(FieldElement::root_of_unity(3) == fe_hex(oracle::kRoot3));
    for (unsigned s = 1; s <= 10; ++s) {
        const auto w = FieldElement::root_of_unity(s);
        CHECK(w.pow(std::uint64_t{1} << s) == FieldElement::one());
        CHECK_FALSE(w.pow(std::uint64_t{1} << (s - 1)) == FieldElement::one());
    }
    CHECK(FieldElement::root_of_unity(0) == FieldElement::one());
}

TEST_CASE("field axioms on random elements") {
    Csprng rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto a = rng.field_element(), b = rng.field_element(), c = rng.field_element();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == FieldElement::zero());
        CHECK(-a + a == FieldElement::zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::one());
        CHECK(FieldElement::from_bytes(a.to_bytes()) == a);
        CHECK(FieldElement::from_limbs(a.to_limbs()) == a);
    }
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(FieldElement::zero().inverse(), InvalidArgument); }

TEST_CASE("batch inversion agrees with single inversion") {
    Csprng rng(2);
    auto v = testutil::random_vector(rng, 37);
    auto w = v;
    batch_invert(w);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(w[i] == v[i].inverse());
}

TEST_CASE("fft and ifft are inverse and agree with evaluation") {
    Csprng rng(3);
    for (std::size_t size : {1u, 2u, 8u, 64u}) {
        const EvaluationDomain d(size);
        auto coeffs = testutil::random_vector(rng, size);
        auto evals = coeffs;
        d.fft(evals);
        for (std::size_t i = 0; i < size; ++i) CHECK(evals[i] == evaluate_polynomial(coeffs, d.element(i)));
        d.ifft(evals);
        CHECK(evals == coeffs);
    }
}

TEST_CASE("lagrange basis sums to one and interpolates") {
    Csprng rng(4);
    const EvaluationDomain d(16);
    const auto x = rng.field_element();
    const auto l = d.lagrange_at(x);
    FieldElement sum;
    for (const auto& v : l) sum += v;
    CHECK(sum == FieldElement::one());

    auto values = testutil::random_vector(rng, 16);
    auto coeffs = values;
    d.ifft(coeffs);
    FieldElement via_basis;
    for (std::size_t i = 0; i < 16; ++i) via_basis += values[i] * l[i];
    CHECK(via_basis == evaluate_polynomial(coeffs, x));
}

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

#include <cmath>

#include "savid/common.hpp"
#include "savid/costmodel.hpp"

using namespace savid::costmodel;

namespace {

CostInputs at(std::size_t t, std::size_t n = 1024, long double size = 22e6L) {
    CostInputs in;
    in.n = n;
    in.t = t;
    in.block_size = size;
    return in;
}

// Straight double-precision transcription used as a second opinion.
double aced_reference(double size, double n, double t, double c) {
    const double lambda = (1 - 2 * t / n) / std::log(1 / (1 - 0.875));
    const double tp = 16, r = 0.25, q = 8, lh = 32;
    return n * (tp * lh + size / (n * r * lambda) +
                (2 * q - 1) * size * lh / (n * r * c * lambda) * std::log(size / (c * tp * r)) / std::log(q * r));
}

}  // namespace

TEST_CASE("comparison table reproduces the published figures") {
    const auto rows = comparison_table();
    REQUIRE(rows.size() == 8);
    struct Expect {
        Scheme s;
        std::size_t t;
        const char* comm;
        const char* stor;
    };
    const Expect expected[] = {
        {Scheme::Repetition, 502, "22.5 GB", "22.5 GB"}, {Scheme::Avid, 338, "101 GB", "98.3 MB"},
        {Scheme::AvidFp, 338, "46.1 GB", "110 MB"},      {Scheme::AvidM, 338, "98.7 MB", "65.1 MB"},
        {Scheme::Aced, 338, "585 MB", "585 MB"},         {Scheme::Aced, 502, "10.2 GB", "10.2 GB"},
        {Scheme::SemiAvidPr, 338, "81.8 MB", "81.8 MB"}, {Scheme::SemiAvidPr, 502, "1.13 GB", "1.13 GB"},
    };
    for (std::size_t i = 0; i < 8; ++i) {
        CAPTURE(i);
        CHECK(rows[i].scheme == expected[i].s);
        CHECK(rows[i].t == expected[i].t);
        CHECK(format_bytes(rows[i].cost.communication) == expected[i].comm);
        CHECK(format_bytes(rows[i].cost.storage) == expected[i].stor);
    }
}

TEST_CASE("formulas agree with an independent transcription") {
    const double B = 22e6, n = 1024, t = 338, k = n - 2 * t, h = 32, lc = 48;
    auto close = [](long double got, double want) { return std::fabs(static_cast<double>(got) / want - 1) < 1e-12; };
    CHECK(close(cost(Scheme::Repetition, at(338)).storage, n * B));
    CHECK(close(cost(Scheme::Avid, at(338)).communication, (B / k + n * h) * (n + n * n)));
    CHECK(close(cost(Scheme::Avid, at(338)).storage, n * (B / k + n * h)));
    CHECK(close(cost(Scheme::AvidFp, at(338)).communication, n * (B / k + (n + k) * h) + n * n * (n + k) * h));
    CHECK(close(cost(Scheme::AvidM, at(338)).communication, n * (B / k + 11 * h) + n * n * h));
    CHECK(close(cost(Scheme::AvidM, at(338)).storage, n * (B / k + 11 * h)));
    CHECK(close(cost(Scheme::SemiAvidPr, at(338)).communication, n * (B / k + k * lc)));
    CHECK(close(cost(Scheme::Aced, at(338)).communication, aced_reference(B, n, t, 40e3)));
    CHECK(close(cost(Scheme::Aced, at(502)).storage, aced_reference(B, n, 502, 40e3)));
}

TEST_CASE("smaller deployment communication") {
    const auto c = cost(Scheme::SemiAvidPr, at(85, 256));
    CHECK(static_cast<double>(c.communication) == doctest::Approx(70e6).epsilon(0.10));
    CHECK(format_bytes(c.communication) == "66.5 MB");
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(cost(Scheme::SemiAvidPr, at(512)), savid::InvalidArgument);
    CHECK_THROWS_AS(cost(Scheme::Repetition, at(600)), savid::InvalidArgument);
    auto in = at(338);
    in.aced.eta = 0;
    CHECK_THROWS_AS(cost(Scheme::Aced, in), savid::InvalidArgument);
}

TEST_CASE("tradeoff sweep") {
    std::vector<long double> cs;
    for (long double c = 4e3L; c <= 100e3L; c += 4e3L) cs.push_back(c);
    const auto pts = aced_tradeoff(at(338), cs);
    REQUIRE(pts.size() == cs.size());
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].cost <= pts[i - 1].cost);
    for (const auto& p : pts) CHECK_FALSE(p.fraud_proof_size);

    const long double c40[] = {40e3L, 80e3L};
    const auto two = aced_tradeoff(at(338), c40);
    CHECK(two[0].cost == cost(Scheme::Aced, at(338)).communication);
    const double ratio = aced_reference(22e6, 1024, 338, 80e3) / aced_reference(22e6, 1024, 338, 40e3);
    CHECK(static_cast<double>(two[1].cost / two[0].cost) == doctest::Approx(ratio).epsilon(1e-12));
}

TEST_CASE("formatting and parsing") {
    CHECK(round3(81'834'123.0L) == 81'800'000.0L);
    CHECK(format_bytes(999.6L) == "1.00 kB");
    CHECK(format_bytes(12) == "12.0 B");
    CHECK(format_bytes(1.0e12L) == "1.00 TB");
    CHECK(parse_scheme("avid-fp") == Scheme::AvidFp);
    CHECK(parse_scheme("Semi-AVID-PR") == Scheme::SemiAvidPr);
    CHECK(parse_scheme("semi-avid-pr") == Scheme::SemiAvidPr);
    CHECK_FALSE(parse_scheme("raid5"));
    const auto rows = comparison_table();
    const auto csv = render_csv(rows);
    CHECK(csv.starts_with("scheme,t,communication_bytes,storage_bytes"));
    CHECK(std::ranges::count(csv, '\n') == 9);
    CHECK(render_table(rows).find("81.8 MB") != std::string::npos);
}

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

#include <algorithm>

#include "savid/netsim.hpp"
#include "test_util.hpp"

using namespace savid;
using namespace savid::netsim;

namespace {

const Deployment& d16() { return testutil::deployment(16, 7, 16); }

SimConfig config(std::uint64_t seed, std::initializer_list<std::uint16_t> nodes = {}, Strategy s = Strategy::Honest) {
    SimConfig c;
    c.n = 16;
    c.t = 7;
    c.seed = seed;
    for (auto i : nodes) c.strategies[i] = s;
    return c;
}

Bytes block_of(std::uint64_t seed, std::size_t size = 300) {
    Csprng rng("netsim-test-block", seed);
    return testutil::random_bytes(rng, size);
}

std::size_t count_actions(const SimTrace& t, std::string_view prefix) {
    return static_cast<std::size_t>(
        std::ranges::count_if(t.events, [&](const TraceEvent& e) { return e.action.starts_with(prefix); }));
}

}  // namespace

TEST_CASE("strategy names roundtrip") {
    for (auto s : {Strategy::Honest, Strategy::WithholdReceipt, Strategy::WithholdChunk, Strategy::CorruptChunk,
                   Strategy::WrongCommitments, Strategy::Equivocate})
        CHECK(parse_strategy(name(s)) == s);
    CHECK_FALSE(parse_strategy("sneaky"));
}

TEST_CASE("all honest run yields a q-receipt certificate") {
    const auto r = run_scenario(d16(), config(1), block_of(1));
    REQUIRE(r.dispersal.result);
    CHECK(r.dispersal.result->receipts.size() == 9);
    REQUIRE(r.block);
    CHECK(*r.block == block_of(1));
    CHECK_FALSE(r.retrieval->availability_violated);
}

TEST_CASE("simulation is deterministic") {
    auto cfg = config(7, {2, 9}, Strategy::Equivocate);
    cfg.corruptions.push_back({20, 4, Strategy::CorruptChunk});
    const auto a = run_scenario(d16(), cfg, block_of(2));
    const auto b = run_scenario(d16(), cfg, block_of(2));
    CHECK(a.trace == b.trace);
    CHECK(a.trace.to_text() == b.trace.to_text());
    CHECK(a.trace.digest() == b.trace.digest());
    cfg.seed = 8;
    CHECK_FALSE(run_scenario(d16(), cfg, block_of(2)).trace.digest() == a.trace.digest());
}

TEST_CASE("every message is delivered") {
    const auto r = run_scenario(d16(), config(3), block_of(3));
    // 16 disperse requests, 16 receipts, 9 retrieve requests, 9 replies.
    CHECK(count_actions(r.trace, "deliver disperse") == 16);
    CHECK(std::ranges::count_if(r.trace.events, [](const TraceEvent& e) {
              return e.receiver != 0 && e.action == "deliver retrieve";
          }) == 9);
    CHECK(count_actions(r.trace, "deliver stored") + count_actions(r.trace, "ignored stored") == 16);
    CHECK(count_actions(r.trace, "deliver retrieve-reply") + count_actions(r.trace, "ignored retrieve-reply") == 9);
}

TEST_CASE("withholding receipts at the resilience boundary") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Simulation ok(d16(), config(seed, {1, 3, 5, 7, 9, 11, 13}, Strategy::WithholdReceipt));
        const auto r = ok.disperse(block_of(seed));
        CHECK(r.result);
        CHECK_FALSE(r.correctness_violated);

        Simulation blocked(d16(), config(seed, {1, 3, 5, 7, 9, 11, 13, 15}, Strategy::WithholdReceipt));
        const auto f = blocked.disperse(block_of(seed));
        REQUIRE_FALSE(f.result);
        CHECK(f.result.error() == DisperseError::QuorumUnreachable);
    }
}

TEST_CASE("retrieval survives t faulty responders of each kind") {
    for (auto s : {Strategy::WithholdChunk, Strategy::CorruptChunk, Strategy::WrongCommitments, Strategy::Equivocate}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            CAPTURE(name(s));
            const auto r = run_scenario(d16(), config(seed, {1, 2, 3, 4, 5, 6, 7}, s), block_of(seed));
            REQUIRE(r.dispersal.result);
            REQUIRE(r.retrieval);
            CHECK_FALSE(r.retrieval->availability_violated);
            REQUIRE(r.block);
            CHECK(*r.block == block_of(seed));
            CHECK(commit_block(*d16().params, *r.block) == r.dispersal.block);
        }
    }
}

TEST_CASE("inconsistent chunk gets no receipt") {
    auto cfg = config(5);
    cfg.tampered_chunks = {3};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        cfg.seed = seed;
        Simulation sim(d16(), cfg);
        const auto out = sim.disperse(block_of(seed));
        REQUIRE(out.result);
        for (const auto& rcp : out.result->receipts) CHECK(rcp.node_index != 3);
        CHECK(sim.nodes()[2].store.empty());
        CHECK(out.inconsistent_honest_entries == 0);
        CHECK(count_actions(sim.trace(), "abort inconsistent-chunk") == 1);
        const auto back = sim.retrieve(*out.result, out.block);
        REQUIRE(back.result);
        CHECK(commit_matrix(sim.params(), back.result->matrix) == out.block);
    }
}

TEST_CASE("mid-run corruption is applied and logged") {
    auto cfg = config(9);
    cfg.corruptions = {{0, 2, Strategy::WithholdChunk}, {1000000, 5, Strategy::CorruptChunk}};
    Simulation sim(d16(), cfg);
    CHECK(sim.strategy(2) == Strategy::Honest);
    const auto out = sim.disperse(block_of(9));
    CHECK(sim.strategy(2) == Strategy::WithholdChunk);
    CHECK(sim.strategy(5) == Strategy::Honest);
    CHECK(count_actions(sim.trace(), "corrupt withhold-chunk") == 1);
    CHECK(cfg.faulty_count() == 2);
    REQUIRE(out.result);
    CHECK(sim.retrieve(*out.result, out.block).result);
}

TEST_CASE("configuration validation") {
    auto cfg = config(1);
    cfg.n = 15;
    CHECK_THROWS_AS(Simulation(d16(), cfg), InvalidArgument);
    cfg = config(1);
    cfg.strategies[17] = Strategy::Equivocate;
    CHECK_THROWS_AS(Simulation(d16(), cfg), InvalidArgument);
}

TEST_CASE("binding probe finds no collisions") {
    const auto& p = *testutil::deployment(4, 1, 8).params;
    const auto r = run_binding_probe(p, 1, 1000);
    CHECK(r.random_pairs == 1000);
    CHECK(r.perturbations == 1000);
    CHECK(r.collisions == 0);
    CHECK(r.identical_blocks_agree);
    CHECK_THROWS_AS(run_binding_probe(p, 1, 0), InvalidArgument);
}

TEST_CASE("scenario file parsing") {
    const auto s = parse_scenario(R"(# demo
n = 16
t = 7
seed = 42
max_rows = 32
block_size = 500
setup_seed = abc
node.3 = corrupt-chunk
nodes.10-12 = withhold-receipt
tamper = 4,5
corrupt = 30:6:equivocate
)");
    CHECK(s.config.n == 16);
    CHECK(s.config.t == 7);
    CHECK(s.config.seed == 42);
    CHECK(s.max_rows == 32);
    CHECK(s.block_size == 500);
    CHECK(s.setup_seed == "abc");
    CHECK(s.config.strategies.at(3) == Strategy::CorruptChunk);
    CHECK(s.config.strategies.at(11) == Strategy::WithholdReceipt);
    CHECK(s.config.strategies.size() == 4);
    CHECK(s.config.tampered_chunks == std::set<std::uint16_t>{4, 5});
    REQUIRE(s.config.corruptions.size() == 1);
    CHECK(s.config.corruptions[0].step == 30);
    CHECK(s.config.corruptions[0].node == 6);
    CHECK(s.config.corruptions[0].strategy == Strategy::Equivocate);
    CHECK(s.config.faulty_count() == 5);

    CHECK_THROWS_AS(parse_scenario("n=4\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_scenario("n=4\nt=1\nbogus=1\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_scenario("n=4\nt=1\nnode.2=evil\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_scenario("n=4\nt=x\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_scenario("n=4\nt=1\njunk\n"), InvalidArgument);
}

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

#include "cli_runner.hpp"
#include "savid/files.hpp"
#include "test_util.hpp"

using testutil::run_cli;
using testutil::slurp;
using testutil::spit;
namespace fs = std::filesystem;

namespace {

std::string random_text(std::size_t size, std::uint64_t seed) {
    savid::Csprng rng(seed);
    std::string s(size, '\0');
    for (auto& c : s) c = static_cast<char>(rng.uniform(256));
    return s;
}

std::string first_line(const fs::path& p) {
    auto s = slurp(p);
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("setup writes consistent parameters and keys") {
    testutil::TempDir dir("savid-cli-setup");
    REQUIRE(run_cli("setup --n 16 --t 7 --max-rows 1024 --seed a --out " + (dir / "p.bin") + " --keys-dir " +
                    (dir / "keys")) == 0);
    const std::string bytes = slurp(dir / "p.bin");
    const auto params = savid::parse_params_file(testutil::as_bytes(bytes));
    CHECK(params->q() == 9);
    CHECK(params->k() == 2);
    CHECK(params->max_rows() == 1024);
    CHECK(fs::exists(dir.path() / "keys" / "node-16.key"));

    REQUIRE(run_cli("setup --n 16 --t 7 --max-rows 1024 --seed a --out " + (dir / "p2.bin") + " --keys-dir " +
                    (dir / "keys2")) == 0);
    CHECK(slurp(dir / "p2.bin") == bytes);
    CHECK(slurp(dir.path() / "keys2" / "node-3.key") == slurp(dir.path() / "keys" / "node-3.key"));

    CHECK(run_cli("setup --n 16 --t 8 --seed a --out " + (dir / "bad.bin") + " --keys-dir " + (dir / "k")) == 3);
    CHECK(run_cli("setup --n 16 --seed a --out x --keys-dir y") == 2);

    std::string corrupt = bytes;
    corrupt[100] ^= 1;
    spit(dir.path() / "c.bin", corrupt);
    spit(dir.path() / "blk", "hello");
    CHECK(run_cli("commit --params " + (dir / "c.bin") + " --in " + (dir / "blk")) == 3);
}

TEST_CASE("file roundtrip with erasures and a corrupted chunk") {
    testutil::TempDir dir("savid-cli-roundtrip");
    const std::string p = dir / "p.bin", keys = dir / "keys", out = dir / "out";
    REQUIRE(run_cli("setup --n 64 --t 21 --max-rows 2048 --seed rt --out " + p + " --keys-dir " + keys) == 0);
    const std::string block = random_text(1'000'000, 1);
    spit(dir.path() / "blk", block);
    REQUIRE(run_cli("disperse --params " + p + " --keys-dir " + keys + " --in " + (dir / "blk") + " --out-dir " + out,
                    dir / "c.txt") == 0);
    const std::string c = first_line(dir.path() / "c.txt");
    CHECK(c.size() == 64);
    REQUIRE(run_cli("commit --params " + p + " --in " + (dir / "blk"), dir / "c2.txt") == 0);
    CHECK(first_line(dir.path() / "c2.txt") == c);
    CHECK(run_cli("verify-cert --params " + p + " --cert " + out + "/certificate.bin --commitment " + c) == 0);

    REQUIRE(run_cli("retrieve --params " + p + " --cert " + out + "/certificate.bin --chunks-dir " + out +
                    " --out " + (dir / "back")) == 0);
    CHECK(slurp(dir.path() / "back") == block);

    for (int i = 1; i <= 21; ++i) fs::remove(fs::path(out) / ("chunk-" + std::to_string(2 * i) + ".bin"));
    std::string chunk = slurp(fs::path(out) / "chunk-1.bin");
    chunk[chunk.size() - 100] ^= 0x01;
    spit(fs::path(out) / "chunk-1.bin", chunk);
    REQUIRE(run_cli("retrieve --params " + p + " --cert " + out + "/certificate.bin --commitment " + c +
                    " --chunks-dir " + out + " --out " + (dir / "back2")) == 0);
    CHECK(slurp(dir.path() / "back2") == block);

    // Only k - 1 valid chunks left.
    for (int i = 1; i <= 22; ++i) fs::remove(fs::path(out) / ("chunk-" + std::to_string(2 * i - 1) + ".bin"));
    CHECK(run_cli("retrieve --params " + p + " --cert " + out + "/certificate.bin --chunks-dir " + out + " --out " +
                  (dir / "back3")) == 5);

    std::string cert = slurp(fs::path(out) / "certificate.bin");
    cert[60] ^= 0x01;
    spit(dir.path() / "bad-cert.bin", cert);
    CHECK(run_cli("verify-cert --params " + p + " --cert " + (dir / "bad-cert.bin")) == 4);
    CHECK(run_cli("verify-cert --params " + p + " --cert " + out + "/certificate.bin --commitment " +
                  std::string(64, '0')) == 4);
}

TEST_CASE("blinded dispersal through the CLI") {
    testutil::TempDir dir("savid-cli-blind");
    const std::string p = dir / "p.bin", keys = dir / "keys", out = dir / "out";
    REQUIRE(run_cli("setup --n 10 --t 3 --max-rows 64 --seed bl --out " + p + " --keys-dir " + keys) == 0);
    const std::string block = random_text(3000, 2);
    spit(dir.path() / "blk", block);
    REQUIRE(run_cli("disperse --blind --blind-seed z --params " + p + " --keys-dir " + keys + " --in " + (dir / "blk") +
                    " --out-dir " + out, dir / "c.txt") == 0);
    REQUIRE(run_cli("commit --blind --blind-seed z --params " + p + " --in " + (dir / "blk"), dir / "c2.txt") == 0);
    CHECK(first_line(dir.path() / "c.txt") == first_line(dir.path() / "c2.txt"));
    REQUIRE(run_cli("retrieve --blind --params " + p + " --cert " + out + "/certificate.bin --chunks-dir " + out +
                    " --out " + (dir / "back")) == 0);
    CHECK(slurp(dir.path() / "back") == block);
    CHECK(run_cli("retrieve --params " + p + " --cert " + out + "/certificate.bin --chunks-dir " + out + " --out " +
                  (dir / "back2")) == 6);
}

TEST_CASE("dispersal without enough online nodes") {
    testutil::TempDir dir("savid-cli-quorum");
    const std::string p = dir / "p.bin", keys = dir / "keys";
    REQUIRE(run_cli("setup --n 10 --t 3 --max-rows 16 --seed q --out " + p + " --keys-dir " + keys) == 0);
    for (int i = 1; i <= 4; ++i) fs::remove(fs::path(keys) / ("node-" + std::to_string(i) + ".key"));
    spit(dir.path() / "blk", "data");
    CHECK(run_cli("disperse --params " + p + " --keys-dir " + keys + " --in " + (dir / "blk") + " --out-dir " +
                  (dir / "out")) == 9);
}

TEST_CASE("das commands") {
    testutil::TempDir dir("savid-cli-das");
    const std::string p = dir / "p.bin", keys = dir / "keys", out = dir / "out", blk = dir / "blk";
    REQUIRE(run_cli("setup --n 10 --t 3 --max-rows 64 --seed das --out " + p + " --keys-dir " + keys) == 0);
    spit(blk, random_text(2000, 3));
    REQUIRE(run_cli("disperse --params " + p + " --keys-dir " + keys + " --in " + blk + " --out-dir " + out,
                    dir / "c.txt") == 0);
    const std::string c = first_line(dir.path() / "c.txt");

    REQUIRE(run_cli("das open-chunk --params " + p + " --in " + blk + " --index 4 --out " + (dir / "o4")) == 0);
    CHECK(slurp(dir.path() / "o4") == slurp(fs::path(out) / "chunk-4.bin"));
    CHECK(run_cli("das verify-chunk --params " + p + " --commitment " + c + " --opening " + (dir / "o4")) == 0);
    CHECK(run_cli("das verify-chunk --params " + p + " --commitment " + std::string(64, 'a') + " --opening " +
                  (dir / "o4")) == 7);

    REQUIRE(run_cli("das open-entry --params " + p + " --in " + blk + " --row 2 --col 3 --out " + (dir / "e")) == 0);
    CHECK(run_cli("das verify-entry --params " + p + " --commitment " + c + " --opening " + (dir / "e")) == 0);
    std::string e = slurp(dir.path() / "e");
    e[e.size() - 60] ^= 1;  // inside the value
    spit(dir.path() / "e2", e);
    CHECK(run_cli("das verify-entry --params " + p + " --commitment " + c + " --opening " + (dir / "e2")) == 7);
    CHECK(run_cli("das open-entry --params " + p + " --in " + blk + " --row 99 --col 1 --out " + (dir / "e3")) == 2);

    CHECK(run_cli("das sample --params " + p + " --commitment " + c + " --chunks-dir " + out +
                  " --queries 5 --seed s") == 0);
    for (int i = 1; i <= 10; ++i) fs::remove(fs::path(out) / ("chunk-" + std::to_string(i) + ".bin"));
    CHECK(run_cli("das sample --params " + p + " --commitment " + c + " --chunks-dir " + out +
                  " --queries 5 --seed s") == 7);
}

TEST_CASE("simulate and costmodel commands") {
    testutil::TempDir dir("savid-cli-sim");
    spit(dir.path() / "s.txt", "n=16\nt=7\nseed=4\nnodes.1-7=equivocate\nblock_size=200\n");
    REQUIRE(run_cli("simulate --scenario " + (dir / "s.txt") + " --trace " + (dir / "t1"), dir / "v1") == 0);
    REQUIRE(run_cli("simulate --scenario " + (dir / "s.txt") + " --trace " + (dir / "t2"), dir / "v2") == 0);
    CHECK(slurp(dir.path() / "t1") == slurp(dir.path() / "t2"));
    CHECK(slurp(dir.path() / "v1").find("verdict ok") != std::string::npos);
    spit(dir.path() / "bad.txt", "n=16\n");
    CHECK(run_cli("simulate --scenario " + (dir / "bad.txt")) == 2);

    REQUIRE(run_cli("costmodel --all --format csv", dir / "cm") == 0);
    const std::string csv = slurp(dir.path() / "cm");
    CHECK(csv.find("Semi-AVID-PR,338,") != std::string::npos);
    CHECK(run_cli("costmodel --scheme avid --n 100 --t 50") == 3);
    CHECK(run_cli("costmodel --scheme nope") == 2);
    CHECK(run_cli("costmodel --format xml") == 2);
}

TEST_CASE("bench phases account for the total") {
    testutil::TempDir dir("savid-cli-bench");
    REQUIRE(run_cli("bench --grid 16:5:50000", dir / "b1") == 0);
    REQUIRE(run_cli("bench --grid 16:5:50000 --threads 4", dir / "b4") == 0);
    auto parse = [](const std::string& text) {
        const auto line = text.substr(text.find('\n') + 1);
        std::vector<std::string> f;
        std::size_t pos = 0;
        for (std::size_t next; (next = line.find_first_of(",\n", pos)) != std::string::npos; pos = next + 1)
            f.push_back(line.substr(pos, next - pos));
        return f;
    };
    const auto f1 = parse(slurp(dir.path() / "b1"));
    const auto f4 = parse(slurp(dir.path() / "b4"));
    REQUIRE(f1.size() == 13);
    double sum = 0;
    for (int i = 6; i <= 10; ++i) sum += std::stod(f1[i]);
    CHECK(sum == doctest::Approx(std::stod(f1[11])).epsilon(0.05));
    CHECK(f1[12] == f4[12]);
}

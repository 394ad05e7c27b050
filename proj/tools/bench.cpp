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

#include <chrono>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "cli_support.hpp"
#include "savid/netsim.hpp"
#include "savid/parallel.hpp"
#include "savid/protocol.hpp"

namespace savid::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct GridPoint {
    std::size_t n, t, bytes;
};

GridPoint parse_grid_point(const std::string& s) {
    GridPoint g{};
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> g.n >> c1 >> g.t >> c2 >> g.bytes) || c1 != ':' || c2 != ':' || !in.eof() || g.bytes == 0)
        throw CliError(kUsage, "usage", "grid point '" + s + "' is not n:t:bytes");
    return g;
}

struct Phases {
    double encode = 0, commit = 0, verify = 0, invert = 0, decode = 0, total = 0;
};

}  // namespace

int run_bench(const BenchOptions& options) {
    std::cout << "n,t,k,rows,bytes,threads,encode_s,commit_s,verify_chunks_s,invert_s,decode_s,total_s,commitment\n";
    for (const auto& spec : options.grid) {
        const auto g = parse_grid_point(spec);
        QuorumSizes qs{};
        try {
            qs = choose_params(g.n, g.t);
        } catch (const InvalidArgument& e) {
            throw CliError(kBadParams, "resilience-bound", e.what());
        }
        const std::size_t rows = packed_rows(g.bytes, qs.k);
        const std::string seed = "savid-bench";
        const auto d = netsim::Deployment::create(
            g.n, g.t, rows, {reinterpret_cast<const std::uint8_t*>(seed.data()), seed.size()}, options.threads);
        const auto& p = *d.params;
        Csprng rng("savid/bench-block", g.bytes);
        Bytes block(g.bytes);
        rng.fill(block);

        for (unsigned rep = 0; rep < options.repeats; ++rep) {
            Phases ph;
            const auto start = Clock::now();

            auto t0 = Clock::now();
            const DataMatrix u = pack_block(p, block);
            const auto columns = encode_rows(p.code(), u, options.threads);
            ph.encode = seconds_since(t0);

            t0 = Clock::now();
            const auto h = commit_columns(p.commit(), u, options.threads);
            const BlockCommitment c = hash_commitments(h);
            ph.commit = seconds_since(t0);

            t0 = Clock::now();
            const auto coded = encode_commitments(p.code(), h, options.threads);
            std::vector<char> ok(p.n());
            parallel_for(p.n(), options.threads, [&](std::size_t i) {
                ok[i] = chunk_matches(p, coded[i], Chunk{static_cast<std::uint16_t>(i + 1), columns[i]});
            });
            ph.verify = seconds_since(t0);
            if (std::count(ok.begin(), ok.end(), 0) != 0) throw CliError(kIoError, "internal", "honest chunk rejected");

            // Decode from the last k chunks, the worst case for a systematic view.
            std::vector<std::size_t> picked(p.k());
            std::iota(picked.begin(), picked.end(), p.n() - p.k() + 1);
            t0 = Clock::now();
            const FieldMatrix inverse = invert_submatrix(p.code(), picked);
            ph.invert = seconds_since(t0);

            t0 = Clock::now();
            DataMatrix back(u.rows(), p.k());
            parallel_for(u.rows(), options.threads, [&](std::size_t r) {
                std::vector<FieldElement> symbols(p.k());
                for (std::size_t j = 0; j < p.k(); ++j) symbols[j] = columns[picked[j] - 1][r];
                const auto info = apply_inverse(inverse, symbols);
                for (std::size_t j = 0; j < p.k(); ++j) back(r, j) = info[j];
            });
            const Bytes recovered = from_matrix(back);
            ph.decode = seconds_since(t0);
            ph.total = seconds_since(start);
            if (recovered != block) throw CliError(kIoError, "internal", "decoded block differs");

            std::cout << std::fixed << std::setprecision(6) << g.n << ',' << g.t << ',' << p.k() << ',' << u.rows()
                      << ',' << g.bytes << ',' << options.threads << ',' << ph.encode << ',' << ph.commit << ','
                      << ph.verify << ',' << ph.invert << ',' << ph.decode << ',' << ph.total << ',' << c.hex()
                      << '\n';
        }
    }
    return kOk;
}

}  // namespace savid::cli

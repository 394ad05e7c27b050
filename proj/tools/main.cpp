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

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

#include "cli_support.hpp"
#include "savid/costmodel.hpp"
#include "savid/das.hpp"
#include "savid/netsim.hpp"
#include "savid/privacy.hpp"
#include "savid/protocol.hpp"

namespace fs = std::filesystem;
using namespace savid;
using namespace savid::cli;

namespace {

ByteSpan text_bytes(const std::string& s) { return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()}; }

struct BlockSource {
    std::string in;
    bool blind = false;
    std::string blind_seed;
};

/// The data matrix a block is dispersed as. Blinded matrices need a seed to
/// be reproducible; without one fresh OS randomness is used.
DataMatrix build_matrix(const SchemeParams& params, const BlockSource& src, bool require_seed) {
    const Bytes block = read_file(src.in);
    try {
        if (!src.blind) return pack_block(params, block);
        if (src.blind_seed.empty()) {
            if (require_seed) throw CliError(kUsage, "usage", "--blind needs --blind-seed to reproduce the matrix");
            Csprng rng(Csprng::random_seed());
            return pack_blinded_block(params, block, rng);
        }
        Csprng rng(text_bytes(src.blind_seed));
        return pack_blinded_block(params, block, rng);
    } catch (const InvalidArgument& e) {
        throw CliError(kBadParams, "block-too-large", e.what());
    }
}

std::vector<std::optional<NodeKeypair>> load_keys(const SchemeParams& params, const fs::path& dir) {
    std::vector<std::optional<NodeKeypair>> keys(params.n());
    for (std::size_t i = 1; i <= params.n(); ++i) {
        const auto path = key_path(dir, i);
        if (!fs::exists(path)) continue;
        try {
            auto [index, key] = parse_node_key_file(read_file(path));
            if (index != i || !(key.public_key() == params.node_pk(i)))
                throw CliError(kBadParams, "bad-key", path.string() + ": key does not belong to node " + std::to_string(i));
            keys[i - 1] = std::move(key);
        } catch (const DecodeError& e) {
            throw CliError(kBadParams, "bad-key", path.string() + ": " + e.what());
        }
    }
    return keys;
}

std::pair<BlockCommitment, RetrievabilityCertificate> load_certificate(const fs::path& path) {
    const Bytes bytes = read_file(path);
    try {
        return parse_certificate_file(bytes);
    } catch (const DecodeError& e) {
        throw CliError(kBadCertificate, "bad-certificate", path.string() + ": " + e.what());
    }
}

BlockCommitment resolve_commitment(const std::string& hex, const BlockCommitment& from_cert) {
    if (hex.empty()) return from_cert;
    const auto c = parse_commitment(hex);
    if (!(c == from_cert)) throw CliError(kBadCertificate, "bad-certificate", "certificate is for a different commitment");
    return c;
}

NodeKeypair placeholder_key() {
    const std::array<std::uint8_t, NodeKeypair::kSeedBytes> zero{};
    return NodeKeypair::from_seed(zero);
}

int cmd_setup(std::size_t n, std::size_t t, std::size_t max_rows, const std::string& seed, const fs::path& out,
              const fs::path& keys_dir, unsigned threads) {
    if (n < 1 || n > SchemeParams::kMaxNodes) throw CliError(kBadParams, "bad-params", "n must be in [1, 65535]");
    if (max_rows < 1) throw CliError(kBadParams, "bad-params", "max-rows must be positive");
    try {
        choose_params(n, t);
    } catch (const InvalidArgument& e) {
        throw CliError(kBadParams, "resilience-bound", e.what());
    }
    const auto d = netsim::Deployment::create(n, t, max_rows, text_bytes(seed), threads);
    write_file(out, serialize_params_file(*d.params));
    fs::create_directories(keys_dir);
    for (std::size_t i = 1; i <= n; ++i)
        write_file(key_path(keys_dir, i), serialize_node_key_file(static_cast<std::uint16_t>(i), d.keys[i - 1]));
    warn("parameters are INSECURE-DEV: the trapdoor is derived from the seed");
    std::cout << "n=" << n << " t=" << t << " q=" << d.params->q() << " k=" << d.params->k()
              << " max_rows=" << d.params->max_rows() << '\n';
    return kOk;
}

int cmd_commit(const fs::path& params_path, const BlockSource& src, unsigned threads) {
    const auto params = load_params(params_path);
    const auto u = build_matrix(*params, src, true);
    std::cout << commit_matrix(*params, u, threads).hex() << '\n';
    return kOk;
}

int cmd_disperse(const fs::path& params_path, const fs::path& keys_dir, const BlockSource& src, const fs::path& out_dir,
                 unsigned threads) {
    const auto params = load_params(params_path);
    auto keys = load_keys(*params, keys_dir);
    const auto u = build_matrix(*params, src, false);

    std::vector<NodeState> nodes;
    nodes.reserve(params->n());
    for (std::size_t i = 1; i <= params->n(); ++i)
        nodes.emplace_back(static_cast<std::uint16_t>(i), keys[i - 1] ? *keys[i - 1] : placeholder_key());
    std::vector<NodeState*> live;
    for (std::size_t i = 0; i < nodes.size(); ++i) live.push_back(keys[i] ? &nodes[i] : nullptr);

    LoopbackTransport transport(*params, live);
    const auto cert = disperse_matrix(*params, u, transport, threads);
    if (!cert) throw CliError(kQuorumUnreachable, "quorum-unreachable", "fewer than q nodes returned a valid receipt");

    const auto c = commit_matrix(*params, u, threads);
    fs::create_directories(out_dir);
    for (const auto& node : nodes) {
        const auto it = node.store.find(c);
        if (it == node.store.end()) continue;
        write_file(chunk_path(out_dir, node.index), serialize_chunk_file(it->second.chunk, it->second.commitments));
    }
    write_file(out_dir / "certificate.bin", serialize_certificate_file(c, *cert));
    std::cout << c.hex() << '\n';
    return kOk;
}

int cmd_retrieve(const fs::path& params_path, const fs::path& cert_path, const std::string& commitment,
                 const fs::path& chunks_dir, const fs::path& out, bool blind, unsigned threads) {
    const auto params = load_params(params_path);
    const auto [cert_c, cert] = load_certificate(cert_path);
    const auto c = resolve_commitment(commitment, cert_c);
    if (!verify_certificate(*params, cert, c))
        throw CliError(kBadCertificate, "bad-certificate", "fewer than q valid receipts");

    std::vector<NodeState> nodes;
    nodes.reserve(params->n());
    for (std::size_t i = 1; i <= params->n(); ++i) nodes.emplace_back(static_cast<std::uint16_t>(i), placeholder_key());
    std::vector<NodeState*> live(params->n(), nullptr);

    std::vector<fs::path> files;
    if (fs::is_directory(chunks_dir))
        for (const auto& e : fs::directory_iterator(chunks_dir))
            if (e.is_regular_file() && e.path().filename().string().starts_with("chunk-")) files.push_back(e.path());
    std::ranges::sort(files);
    for (const auto& path : files) {
        try {
            auto [chunk, h] = parse_chunk_file(read_file(path));
            const std::size_t i = chunk.node_index;
            if (i < 1 || i > params->n()) throw DecodeError("node index out of range");
            if (live[i - 1]) throw DecodeError("duplicate chunk for node " + std::to_string(i));
            nodes[i - 1].store.emplace(c, NodeState::Entry{std::move(h), std::move(chunk)});
            live[i - 1] = &nodes[i - 1];
        } catch (const DecodeError& e) {
            warn("chunk file " + path.string() + " discarded: " + e.what());
        }
    }

    LoopbackTransport transport(*params, live);
    auto got = retrieve_matrix(*params, cert, c, transport, threads, RetrieveScope::AllNodes);
    if (got)
        for (auto i : got->rejected_nodes)
            warn("chunk file " + chunk_path(chunks_dir, i).string() + " discarded: fails the commitment check");
    if (!got) {
        const auto e = got.error();
        if (e == RetrieveError::InsufficientValidChunks)
            throw CliError(kInsufficientChunks, "insufficient-chunks", "fewer than k valid chunks available");
        if (e == RetrieveError::InvalidCertificate) throw CliError(kBadCertificate, "bad-certificate", to_string(e));
        throw CliError(kCommitmentMismatch, "commitment-mismatch", to_string(e));
    }
    Bytes block;
    try {
        block = blind ? unpack_blinded_block(got->matrix) : from_matrix(got->matrix);
    } catch (const Error& e) {
        throw CliError(kCommitmentMismatch, "malformed-block", e.what());
    }
    write_file(out, block);
    return kOk;
}

int cmd_verify_cert(const fs::path& params_path, const fs::path& cert_path, const std::string& commitment) {
    const auto params = load_params(params_path);
    const auto [cert_c, cert] = load_certificate(cert_path);
    const auto c = resolve_commitment(commitment, cert_c);
    if (!verify_certificate(*params, cert, c))
        throw CliError(kBadCertificate, "bad-certificate", "fewer than q valid receipts");
    std::cout << "valid " << c.hex() << '\n';
    return kOk;
}

int cmd_open_chunk(const fs::path& params_path, const BlockSource& src, std::size_t index, const fs::path& out,
                   unsigned threads) {
    const auto params = load_params(params_path);
    if (index < 1 || index > params->n()) throw CliError(kUsage, "usage", "--index must be in [1, n]");
    const auto u = build_matrix(*params, src, true);
    write_file(out, serialize_chunk_opening(open_chunk(*params, u, index, threads)));
    return kOk;
}

int cmd_verify_chunk(const fs::path& params_path, const std::string& commitment, const fs::path& opening_path) {
    const auto params = load_params(params_path);
    const auto c = parse_commitment(commitment);
    ChunkOpening o;
    try {
        o = parse_chunk_opening(read_file(opening_path));
    } catch (const DecodeError& e) {
        throw CliError(kOpeningRejected, "opening-rejected", e.what());
    }
    if (!verify_chunk(*params, c, o)) throw CliError(kOpeningRejected, "opening-rejected", "chunk does not match C");
    std::cout << "valid chunk " << o.chunk.node_index << '\n';
    return kOk;
}

int cmd_open_entry(const fs::path& params_path, const BlockSource& src, std::size_t row, std::size_t col,
                   const fs::path& out, unsigned threads) {
    const auto params = load_params(params_path);
    const auto u = build_matrix(*params, src, true);
    if (row < 1 || row > u.rows() || col < 1 || col > u.cols())
        throw CliError(kUsage, "usage", "entry position outside the " + std::to_string(u.rows()) + "x" +
                                            std::to_string(u.cols()) + " matrix");
    write_file(out, serialize_entry_opening(open_entry_das(*params, u, row, col, threads)));
    return kOk;
}

int cmd_verify_entry(const fs::path& params_path, const std::string& commitment, const fs::path& opening_path) {
    const auto params = load_params(params_path);
    const auto c = parse_commitment(commitment);
    EntryOpening o;
    try {
        o = parse_entry_opening(read_file(opening_path));
    } catch (const DecodeError& e) {
        throw CliError(kOpeningRejected, "opening-rejected", e.what());
    }
    if (!verify_entry_das(*params, c, o)) throw CliError(kOpeningRejected, "opening-rejected", "entry does not match C");
    std::cout << "valid row=" << o.row << " col=" << o.column << " value=" << to_hex(o.value.to_bytes()) << '\n';
    return kOk;
}

int cmd_sample(const fs::path& params_path, const std::string& commitment, const fs::path& chunks_dir,
               std::size_t queries, const std::string& seed) {
    const auto params = load_params(params_path);
    const auto c = parse_commitment(commitment);
    if (queries < 1 || queries > params->n()) throw CliError(kUsage, "usage", "--queries must be in [1, n]");
    const ChunkResponder responder = [&](std::size_t i) -> std::optional<ChunkOpening> {
        const auto path = chunk_path(chunks_dir, i);
        if (!fs::exists(path)) return std::nullopt;
        try {
            return parse_chunk_opening(read_file(path));
        } catch (const DecodeError&) {
            return std::nullopt;
        }
    };
    const auto report = light_sample(*params, c, queries, responder, text_bytes(seed));
    std::cout << "queried";
    for (auto i : report.queried) std::cout << ' ' << i;
    std::cout << '\n';
    if (!report.accepted)
        throw CliError(kOpeningRejected, "sample-rejected",
                       "chunk " + std::to_string(*report.failed_index) + " missing or invalid");
    std::cout << "accepted\n";
    return kOk;
}

int cmd_simulate(const fs::path& scenario_path, const std::string& trace_out, unsigned threads) {
    const Bytes text = read_file(scenario_path);
    netsim::ScenarioFile sc;
    try {
        sc = netsim::parse_scenario({reinterpret_cast<const char*>(text.data()), text.size()});
    } catch (const InvalidArgument& e) {
        throw CliError(kUsage, "bad-scenario", e.what());
    }
    std::unique_ptr<netsim::Deployment> d;
    try {
        d = std::make_unique<netsim::Deployment>(
            netsim::Deployment::create(sc.config.n, sc.config.t, sc.max_rows, text_bytes(sc.setup_seed), threads));
    } catch (const InvalidArgument& e) {
        throw CliError(kBadParams, "bad-params", e.what());
    }
    Csprng rng("savid/simulate-block", sc.config.seed);
    Bytes block(sc.block_size);
    rng.fill(block);

    const auto r = netsim::run_scenario(*d, sc.config, block);
    const std::string text_trace = r.trace.to_text();
    if (trace_out.empty())
        std::cout << text_trace;
    else
        write_file(trace_out, text_bytes(text_trace));

    const std::size_t f = sc.config.faulty_count();
    std::cout << "faulty " << f << " of t=" << sc.config.t << '\n';
    if (r.dispersal.result)
        std::cout << "dispersal certificate " << r.dispersal.result->receipts.size() << " receipts\n";
    else
        std::cout << "dispersal quorum-unreachable\n";
    bool violated = r.dispersal.correctness_violated || r.dispersal.inconsistent_honest_entries > 0;
    if (r.retrieval) {
        const bool ok = r.block && commit_block(*d->params, *r.block) == r.dispersal.block;
        std::cout << "retrieval " << (r.retrieval->result ? (ok ? "matches" : "mismatch") : to_string(r.retrieval->result.error()))
                  << '\n';
        violated = violated || r.retrieval->availability_violated;
    }
    std::cout << "trace-digest " << to_hex(r.trace.digest()) << '\n';
    std::cout << "verdict " << (violated ? "violation" : "ok") << '\n';
    if (violated) throw CliError(kPropertyViolated, "property-violated", "correctness or availability failed with f <= t");
    return kOk;
}

int cmd_costmodel(const std::string& scheme, long double block_size, std::size_t n, std::optional<std::size_t> t,
                  const std::string& format, bool all) {
    std::vector<costmodel::TableRow> rows;
    try {
        if (all || scheme.empty()) {
            rows = costmodel::comparison_table(block_size, n);
        } else {
            const auto s = costmodel::parse_scheme(scheme);
            if (!s) throw CliError(kUsage, "usage", "unknown scheme '" + scheme + "'");
            costmodel::CostInputs in;
            in.block_size = block_size;
            in.n = n;
            in.t = t.value_or(static_cast<std::size_t>(std::llround(0.33L * static_cast<long double>(n))));
            rows.push_back({*s, in.t, costmodel::cost(*s, in)});
        }
    } catch (const InvalidArgument& e) {
        throw CliError(kBadParams, "bad-params", e.what());
    }
    std::cout << (format == "csv" ? costmodel::render_csv(rows) : costmodel::render_table(rows));
    return kOk;
}

unsigned default_threads() {
    const char* env = std::getenv("SAVID_THREADS");
    if (!env) return 1;
    try {
        return static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"savid: verifiable information dispersal with retrievability certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default: $SAVID_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));

    std::function<int()> action;

    // setup
    std::size_t n = 0, t = 0, max_rows = 1024;
    std::string seed;
    std::string out, keys_dir;
    auto* setup = app.add_subcommand("setup", "generate public parameters and node keys");
    setup->add_option("--n", n, "number of storage nodes")->required();
    setup->add_option("--t", t, "resilience")->required();
    setup->add_option("--max-rows", max_rows, "largest number of rows L of a dispersed matrix");
    setup->add_option("--seed", seed, "seed for the development setup and the node keys")->required();
    setup->add_option("--out", out, "params file to write")->required();
    setup->add_option("--keys-dir", keys_dir, "directory for node key files")->required();
    setup->callback([&] { action = [&] { return cmd_setup(n, t, max_rows, seed, out, keys_dir, threads); }; });

    std::string params;
    BlockSource src;

    auto* commit = app.add_subcommand("commit", "print the block commitment C");
    commit->add_option("--params", params)->required();
    commit->add_option("--in", src.in, "block file")->required();
    commit->add_flag("--blind", src.blind, "commit to the blinded matrix");
    commit->add_option("--blind-seed", src.blind_seed);
    commit->callback([&] { action = [&] { return cmd_commit(params, src, threads); }; });

    std::string out_dir;
    auto* disperse = app.add_subcommand("disperse", "disperse a block to in-process nodes");
    disperse->add_option("--params", params)->required();
    disperse->add_option("--keys-dir", keys_dir, "node key files; nodes without a key are offline")->required();
    disperse->add_option("--in", src.in, "block file")->required();
    disperse->add_option("--out-dir", out_dir, "chunk and certificate output directory")->required();
    disperse->add_flag("--blind", src.blind, "blind the data matrix before dispersal");
    disperse->add_option("--blind-seed", src.blind_seed, "seed for the blinding randomness (default: OS entropy)");
    disperse->callback([&] { action = [&] { return cmd_disperse(params, keys_dir, src, out_dir, threads); }; });

    std::string cert, commitment, chunks_dir;
    bool blind = false;
    auto* retrieve = app.add_subcommand("retrieve", "reconstruct a block from chunk files");
    retrieve->add_option("--params", params)->required();
    retrieve->add_option("--cert", cert)->required();
    retrieve->add_option("--commitment", commitment, "expected C in hex (default: the certificate's)");
    retrieve->add_option("--chunks-dir", chunks_dir)->required();
    retrieve->add_option("--out", out)->required();
    retrieve->add_flag("--blind", blind, "strip the blinding row and column");
    retrieve->callback(
        [&] { action = [&] { return cmd_retrieve(params, cert, commitment, chunks_dir, out, blind, threads); }; });

    auto* verify_cert = app.add_subcommand("verify-cert", "check a retrievability certificate");
    verify_cert->add_option("--params", params)->required();
    verify_cert->add_option("--cert", cert)->required();
    verify_cert->add_option("--commitment", commitment);
    verify_cert->callback([&] { action = [&] { return cmd_verify_cert(params, cert, commitment); }; });

    auto* das = app.add_subcommand("das", "data availability sampling");
    das->require_subcommand(1);
    das->fallthrough();
    std::size_t index = 0, row = 0, col = 0, queries = 0;
    std::string opening;

    auto* open_chunk_cmd = das->add_subcommand("open-chunk", "write the opening of chunk i");
    open_chunk_cmd->add_option("--params", params)->required();
    open_chunk_cmd->add_option("--in", src.in)->required();
    open_chunk_cmd->add_option("--index", index)->required();
    open_chunk_cmd->add_option("--out", out)->required();
    open_chunk_cmd->add_flag("--blind", src.blind);
    open_chunk_cmd->add_option("--blind-seed", src.blind_seed);
    open_chunk_cmd->callback([&] { action = [&] { return cmd_open_chunk(params, src, index, out, threads); }; });

    auto* verify_chunk_cmd = das->add_subcommand("verify-chunk", "verify a chunk opening against C");
    verify_chunk_cmd->add_option("--params", params)->required();
    verify_chunk_cmd->add_option("--commitment", commitment)->required();
    verify_chunk_cmd->add_option("--opening", opening)->required();
    verify_chunk_cmd->callback([&] { action = [&] { return cmd_verify_chunk(params, commitment, opening); }; });

    auto* open_entry_cmd = das->add_subcommand("open-entry", "write the opening of matrix entry (row, col)");
    open_entry_cmd->add_option("--params", params)->required();
    open_entry_cmd->add_option("--in", src.in)->required();
    open_entry_cmd->add_option("--row", row, "1-based row")->required();
    open_entry_cmd->add_option("--col", col, "1-based column")->required();
    open_entry_cmd->add_option("--out", out)->required();
    open_entry_cmd->add_flag("--blind", src.blind);
    open_entry_cmd->add_option("--blind-seed", src.blind_seed);
    open_entry_cmd->callback([&] { action = [&] { return cmd_open_entry(params, src, row, col, out, threads); }; });

    auto* verify_entry_cmd = das->add_subcommand("verify-entry", "verify an entry opening against C");
    verify_entry_cmd->add_option("--params", params)->required();
    verify_entry_cmd->add_option("--commitment", commitment)->required();
    verify_entry_cmd->add_option("--opening", opening)->required();
    verify_entry_cmd->callback([&] { action = [&] { return cmd_verify_entry(params, commitment, opening); }; });

    auto* sample_cmd = das->add_subcommand("sample", "light-client sampling over a chunk directory");
    sample_cmd->add_option("--params", params)->required();
    sample_cmd->add_option("--commitment", commitment)->required();
    sample_cmd->add_option("--chunks-dir", chunks_dir)->required();
    sample_cmd->add_option("--queries", queries)->required();
    sample_cmd->add_option("--seed", seed)->required();
    sample_cmd->callback(
        [&] { action = [&] { return cmd_sample(params, commitment, chunks_dir, queries, seed); }; });

    std::string scenario, trace_out;
    auto* simulate = app.add_subcommand("simulate", "run an adversarial scenario file");
    simulate->add_option("--scenario", scenario)->required();
    simulate->add_option("--trace", trace_out, "write the trace here instead of stdout");
    simulate->callback([&] { action = [&] { return cmd_simulate(scenario, trace_out, threads); }; });

    std::string scheme, format = "table";
    long double block_size = 22e6L;
    std::size_t cost_n = 1024;
    std::optional<std::size_t> cost_t;
    bool all = false;
    auto* cost = app.add_subcommand("costmodel", "communication and storage cost of dispersal schemes");
    cost->add_option("--scheme", scheme, "repetition, avid, avid-fp, avid-m, aced or semi-avid-pr");
    cost->add_option("--block-size", block_size, "block size in bytes");
    cost->add_option("--n", cost_n);
    cost->add_option("--t", cost_t, "resilience (default: round(0.33 n))");
    cost->add_option("--format", format)->check(CLI::IsMember({"table", "csv"}));
    cost->add_flag("--all", all, "the full comparison table");
    cost->callback([&] { action = [&] { return cmd_costmodel(scheme, block_size, cost_n, cost_t, format, all); }; });

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "time the dispersal pipeline phases");
    bench->add_option("--grid", bench_opts.grid, "n:t:bytes triples")->default_str("64:21:1000000");
    bench->add_option("--repeats", bench_opts.repeats)->check(CLI::Range(1u, 1000u));
    bench->callback([&] {
        action = [&] {
            if (bench_opts.grid.empty()) bench_opts.grid = {"64:21:1000000"};
            bench_opts.threads = threads;
            return run_bench(bench_opts);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return kUsage;
    }

    try {
        return action();
    } catch (const CliError& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return kIoError;
    }
}

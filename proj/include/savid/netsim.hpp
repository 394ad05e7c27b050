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

// Deterministic discrete-event simulation of one client and n storage nodes.
//
// Each round delivers every queued node-bound message in a seed-derived
// order, then hands the replies to the client in seed-derived batches.
// Nothing is dropped: the queues drain only once every message has been
// delivered. Byzantine behaviour is a fixed per-node strategy, optionally
// switched at a given step to model adaptive corruption.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "savid/protocol.hpp"
#include "savid/rng.hpp"

namespace savid::netsim {

enum class Strategy {
    Honest,
    WithholdReceipt,   // stores the chunk but never answers
    WithholdChunk,     // signs, then ignores retrieval requests
    CorruptChunk,      // signs, then serves a modified column
    WrongCommitments,  // signs, then serves a forged h-vector and a modified column
    Equivocate,        // signs, then serves two conflicting replies
};

std::string_view name(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view s);

struct CorruptionEvent {
    std::uint64_t step;  // applied before the first delivery at or after this step
    std::uint16_t node;  // 1-based
    Strategy strategy;
};

struct SimConfig {
    std::size_t n = 0;
    std::size_t t = 0;
    std::uint64_t seed = 0;
    std::map<std::uint16_t, Strategy> strategies;  // absent nodes are honest
    std::set<std::uint16_t> tampered_chunks;       // disperser sends these nodes an inconsistent chunk
    std::vector<CorruptionEvent> corruptions;

    Strategy initial_strategy(std::uint16_t node) const;
    /// Number of distinct nodes that are ever non-honest.
    std::size_t faulty_count() const;
};

struct TraceEvent {
    std::uint64_t step;
    std::uint16_t sender;    // 0 is the client
    std::uint16_t receiver;  // 0 is the client
    Digest digest;           // SHA-256 of the encoded message, zero for local actions
    std::string action;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct SimTrace {
    std::vector<TraceEvent> events;

    /// One line per event: "step sender receiver digest action".
    std::string to_text() const;
    Digest digest() const;

    friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

/// Node keys and parameters of a simulated deployment.
struct Deployment {
    std::shared_ptr<const SchemeParams> params;
    std::vector<NodeKeypair> keys;

    /// Development setup and derived node keys, both from `seed`.
    static Deployment create(std::size_t n, std::size_t t, std::size_t max_rows, ByteSpan seed,
                             unsigned threads = 1);
};

struct DisperseOutcome {
    Expected<RetrievabilityCertificate, DisperseError> result = DisperseError::QuorumUnreachable;
    BlockCommitment block;
    /// Quorum missed although f <= t and the disperser was honest.
    bool correctness_violated = false;
    /// Stored entries of honest nodes that fail the homomorphic check.
    std::size_t inconsistent_honest_entries = 0;
};

struct RetrieveOutcome {
    Expected<RetrievedMatrix, RetrieveError> result = RetrieveError::InsufficientValidChunks;
    /// Retrieval failed, or returned data not matching C, with f <= t.
    bool availability_violated = false;
};

/// One simulated world. Node state persists across dispersal and retrieval
/// so both phases can be run against the same nodes.
class Simulation {
public:
    Simulation(const Deployment& deployment, SimConfig config);

    DisperseOutcome disperse(ByteSpan block);
    DisperseOutcome disperse_matrix(const DataMatrix& u);
    RetrieveOutcome retrieve(const RetrievabilityCertificate& cert, const BlockCommitment& c);

    const SimTrace& trace() const noexcept { return trace_; }
    const SimConfig& config() const noexcept { return config_; }
    const SchemeParams& params() const noexcept { return *deployment_.params; }
    std::vector<NodeState>& nodes() noexcept { return nodes_; }
    Strategy strategy(std::uint16_t node) const { return strategies_.at(node - 1); }

private:
    class SimTransport;
    friend class SimTransport;

    void log(std::uint16_t sender, std::uint16_t receiver, const Digest& digest, std::string action);
    void apply_corruptions();
    std::vector<ClientBound> node_handle(std::uint16_t index, const NodeBound& m);

    const Deployment& deployment_;
    SimConfig config_;
    std::vector<NodeState> nodes_;
    std::vector<Strategy> strategies_;
    Csprng rng_;
    SimTrace trace_;
    std::uint64_t step_ = 0;
    std::size_t next_corruption_ = 0;
};

struct ScenarioResult {
    DisperseOutcome dispersal;
    std::optional<RetrieveOutcome> retrieval;
    std::optional<Bytes> block;
    SimTrace trace;
};

/// Runs dispersal; on success retrieves with the produced certificate.
ScenarioResult run_scenario(const Deployment& deployment, const SimConfig& config, ByteSpan block);

DisperseOutcome run_disperse_scenario(Simulation& sim, ByteSpan block);
RetrieveOutcome run_retrieve_scenario(Simulation& sim, const RetrievabilityCertificate& cert,
                                      const BlockCommitment& c);

struct BindingReport {
    std::size_t random_pairs = 0;
    std::size_t perturbations = 0;
    std::size_t collisions = 0;
    bool identical_blocks_agree = false;
};

/// Commits random distinct block pairs and single-bit perturbations of one
/// block, counting equal commitments for unequal blocks.
BindingReport run_binding_probe(const SchemeParams& params, std::uint64_t seed, std::size_t trials,
                                std::size_t block_size = 128);

/// Parses the key=value scenario format read by the simulate command:
///   n, t, seed, max_rows, block_size, setup_seed
///   node.<i> = <strategy>, nodes.<a>-<b> = <strategy>
///   tamper = <i>[,<j>…], corrupt = <step>:<node>:<strategy>
struct ScenarioFile {
    SimConfig config;
    std::size_t max_rows = 64;
    std::size_t block_size = 1024;
    std::string setup_seed = "savid-sim";
};

ScenarioFile parse_scenario(std::string_view text);

}  // namespace savid::netsim

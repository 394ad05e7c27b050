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

#include "savid/netsim.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace savid::netsim {

namespace {

constexpr std::uint16_t kClient = 0;

template <class T>
void permute(std::vector<T>& v, Csprng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform(i)]);
}

std::string_view message_name(const NodeBound& m) {
    return std::holds_alternative<DisperseMessage>(m) ? "disperse" : "retrieve";
}

std::string_view message_name(const ClientBound& m) {
    return std::holds_alternative<StoredMessage>(m) ? "stored" : "retrieve-reply";
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidArgument("scenario: bad number for " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

std::uint16_t parse_node(std::string_view s) {
    const auto v = parse_u64(s, "node index");
    if (v < 1 || v > SchemeParams::kMaxNodes) throw InvalidArgument("scenario: node index out of range");
    return static_cast<std::uint16_t>(v);
}

Strategy require_strategy(std::string_view s) {
    const auto st = parse_strategy(s);
    if (!st) throw InvalidArgument("scenario: unknown strategy '" + std::string(s) + "'");
    return *st;
}

}  // namespace

std::string_view name(Strategy s) noexcept {
    switch (s) {
        case Strategy::Honest: return "honest";
        case Strategy::WithholdReceipt: return "withhold-receipt";
        case Strategy::WithholdChunk: return "withhold-chunk";
        case Strategy::CorruptChunk: return "corrupt-chunk";
        case Strategy::WrongCommitments: return "wrong-commitments";
        case Strategy::Equivocate: return "equivocate";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
    for (auto st : {Strategy::Honest, Strategy::WithholdReceipt, Strategy::WithholdChunk, Strategy::CorruptChunk,
                    Strategy::WrongCommitments, Strategy::Equivocate})
        if (name(st) == s) return st;
    return std::nullopt;
}

Strategy SimConfig::initial_strategy(std::uint16_t node) const {
    const auto it = strategies.find(node);
    return it == strategies.end() ? Strategy::Honest : it->second;
}

std::size_t SimConfig::faulty_count() const {
    std::set<std::uint16_t> faulty;
    for (const auto& [node, s] : strategies)
        if (s != Strategy::Honest) faulty.insert(node);
    for (const auto& e : corruptions)
        if (e.strategy != Strategy::Honest) faulty.insert(e.node);
    return faulty.size();
}

std::string SimTrace::to_text() const {
    std::ostringstream out;
    for (const auto& e : events)
        out << e.step << ' ' << e.sender << ' ' << e.receiver << ' ' << to_hex(e.digest) << ' ' << e.action << '\n';
    return out.str();
}

Digest SimTrace::digest() const {
    const std::string text = to_text();
    return sha256({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

Deployment Deployment::create(std::size_t n, std::size_t t, std::size_t max_rows, ByteSpan seed, unsigned threads) {
    Deployment d;
    auto commit = std::make_shared<const CommitParams>(setup(max_rows, seed, threads));
    std::vector<NodePublicKey> pks;
    for (std::size_t i = 1; i <= n; ++i) {
        d.keys.push_back(NodeKeypair::derive(seed, i));
        pks.push_back(d.keys.back().public_key());
    }
    d.params = std::make_shared<const SchemeParams>(n, t, std::move(commit), std::move(pks));
    return d;
}

class Simulation::SimTransport final : public Transport {
public:
    explicit SimTransport(Simulation& sim) : sim_(sim) {}

    void send(std::uint16_t to, const NodeBound& message) override {
        NodeBound m = message;
        auto* d = std::get_if<DisperseMessage>(&m);
        if (d && sim_.config_.tampered_chunks.contains(to) && !d->chunk.column.empty()) {
            d->chunk.column[0] += FieldElement::one();
            sim_.log(kClient, to, {}, "tamper-chunk");
        }
        node_queue_.push_back({to, encode_message(m)});
    }

    std::vector<Envelope> receive() override {
        while (client_batches_.empty()) {
            if (node_queue_.empty()) return {};
            deliver_round();
        }
        auto batch = std::move(client_batches_.front());
        client_batches_.pop_front();
        std::vector<Envelope> out;
        for (auto& [env, digest] : batch) {
            ++sim_.step_;
            sim_.log(env.from, kClient, digest, "deliver " + std::string(message_name(env.message)));
            out.push_back(std::move(env));
        }
        return out;
    }

    /// Delivers everything still queued; client-bound leftovers reach a
    /// client that no longer listens.
    void drain() {
        while (!node_queue_.empty() || !client_batches_.empty()) {
            if (client_batches_.empty()) deliver_round();
            for (auto& [env, digest] : client_batches_.front()) {
                ++sim_.step_;
                sim_.log(env.from, kClient, digest, "ignored " + std::string(message_name(env.message)));
            }
            client_batches_.pop_front();
        }
    }

private:
    void deliver_round() {
        auto queue = std::exchange(node_queue_, {});
        permute(queue, sim_.rng_);
        std::vector<std::pair<Envelope, Digest>> replies;
        for (const auto& [to, bytes] : queue) {
            ++sim_.step_;
            sim_.apply_corruptions();
            const NodeBound m = decode_node_bound(bytes);
            sim_.log(kClient, to, sha256(bytes), "deliver " + std::string(message_name(m)));
            for (auto& reply : sim_.node_handle(to, m)) {
                // Replies travel in wire form so the client sees exactly what was logged.
                const Bytes wire = encode_message(reply);
                replies.push_back({Envelope{to, decode_client_bound(wire)}, sha256(wire)});
            }
        }
        permute(replies, sim_.rng_);
        for (std::size_t pos = 0; pos < replies.size();) {
            const std::size_t size = std::min<std::size_t>(1 + sim_.rng_.uniform(3), replies.size() - pos);
            client_batches_.emplace_back(std::make_move_iterator(replies.begin() + static_cast<std::ptrdiff_t>(pos)),
                                         std::make_move_iterator(replies.begin() +
                                                                 static_cast<std::ptrdiff_t>(pos + size)));
            pos += size;
        }
    }

    Simulation& sim_;
    std::vector<std::pair<std::uint16_t, Bytes>> node_queue_;
    std::deque<std::vector<std::pair<Envelope, Digest>>> client_batches_;
};

Simulation::Simulation(const Deployment& deployment, SimConfig config)
    : deployment_(deployment), config_(std::move(config)), rng_("savid/netsim", config_.seed) {
    const auto& p = *deployment_.params;
    if (config_.n != p.n() || config_.t != p.t()) throw InvalidArgument("scenario (n, t) does not match deployment");
    if (deployment_.keys.size() != p.n()) throw InvalidArgument("deployment needs n keys");
    for (std::size_t i = 1; i <= p.n(); ++i) {
        nodes_.emplace_back(static_cast<std::uint16_t>(i), deployment_.keys[i - 1]);
        strategies_.push_back(config_.initial_strategy(static_cast<std::uint16_t>(i)));
    }
    for (const auto& [node, s] : config_.strategies)
        if (node < 1 || node > p.n()) throw InvalidArgument("strategy assigned to unknown node");
    for (const auto& e : config_.corruptions)
        if (e.node < 1 || e.node > p.n()) throw InvalidArgument("corruption event for unknown node");
    std::stable_sort(config_.corruptions.begin(), config_.corruptions.end(),
                     [](const auto& a, const auto& b) { return a.step < b.step; });
}

void Simulation::log(std::uint16_t sender, std::uint16_t receiver, const Digest& digest, std::string action) {
    trace_.events.push_back({step_, sender, receiver, digest, std::move(action)});
}

void Simulation::apply_corruptions() {
    while (next_corruption_ < config_.corruptions.size() && config_.corruptions[next_corruption_].step <= step_) {
        const auto& e = config_.corruptions[next_corruption_++];
        strategies_[e.node - 1] = e.strategy;
        log(e.node, e.node, {}, "corrupt " + std::string(name(e.strategy)));
    }
}

std::vector<ClientBound> Simulation::node_handle(std::uint16_t index, const NodeBound& m) {
    NodeState& state = nodes_[index - 1];
    const Strategy s = strategies_[index - 1];
    const auto& params = *deployment_.params;

    if (std::holds_alternative<DisperseMessage>(m)) {
        auto reply = handle_message(params, state, m);
        if (!reply) {
            log(index, index, {}, "abort inconsistent-chunk");
            return {};
        }
        if (s == Strategy::WithholdReceipt) {
            log(index, index, {}, "withhold receipt");
            return {};
        }
        return {std::move(*reply)};
    }

    const auto& request = std::get<RetrieveMessage>(m);
    const auto it = state.store.find(request.block);
    if (it == state.store.end()) return {};
    const auto& entry = it->second;

    auto corrupted = [&] {
        Chunk c = entry.chunk;
        c.column[rng_.uniform(c.column.size())] += FieldElement::one();
        return c;
    };
    auto forged = [&] {
        ColumnCommitments h = entry.commitments;
        h[0] = VectorCommitment(h[0].point() + G1::generator());
        return h;
    };

    switch (s) {
        case Strategy::Honest: return {RetrieveReplyMessage{entry.commitments, entry.chunk}};
        case Strategy::WithholdReceipt:
        case Strategy::WithholdChunk: log(index, index, {}, "withhold chunk"); return {};
        case Strategy::CorruptChunk: return {RetrieveReplyMessage{entry.commitments, corrupted()}};
        case Strategy::WrongCommitments: return {RetrieveReplyMessage{forged(), corrupted()}};
        case Strategy::Equivocate:
            return {RetrieveReplyMessage{forged(), entry.chunk}, RetrieveReplyMessage{entry.commitments, corrupted()}};
    }
    return {};
}

DisperseOutcome Simulation::disperse(ByteSpan block) { return disperse_matrix(pack_block(params(), block)); }

DisperseOutcome Simulation::disperse_matrix(const DataMatrix& u) {
    const auto& p = params();
    DisperseOutcome out;
    out.block = commit_matrix(p, u);
    log(kClient, kClient, out.block.bytes, "begin disperse");
    {
        SimTransport transport(*this);
        out.result = savid::disperse_matrix(p, u, transport);
        transport.drain();
    }
    log(kClient, kClient, {}, out.result ? "certificate" : "quorum-unreachable");

    const bool honest_world = config_.faulty_count() <= config_.t && config_.tampered_chunks.empty();
    out.correctness_violated = honest_world && !out.result;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (strategies_[i] != Strategy::Honest) continue;
        for (const auto& [c, entry] : nodes_[i].store)
            if (!chunk_consistent(p, entry.commitments, entry.chunk)) ++out.inconsistent_honest_entries;
    }
    return out;
}

RetrieveOutcome Simulation::retrieve(const RetrievabilityCertificate& cert, const BlockCommitment& c) {
    const auto& p = params();
    RetrieveOutcome out;
    log(kClient, kClient, c.bytes, "begin retrieve");
    {
        SimTransport transport(*this);
        out.result = retrieve_matrix(p, cert, c, transport);
        transport.drain();
    }
    const bool certificate_ok = verify_certificate(p, cert, c);
    bool matches = false;
    if (out.result) matches = commit_matrix(p, out.result->matrix) == c;
    log(kClient, kClient, {}, out.result ? (matches ? "retrieved" : "mismatch") : to_string(out.result.error()));
    out.availability_violated = certificate_ok && config_.faulty_count() <= config_.t && !matches;
    return out;
}

DisperseOutcome run_disperse_scenario(Simulation& sim, ByteSpan block) { return sim.disperse(block); }

RetrieveOutcome run_retrieve_scenario(Simulation& sim, const RetrievabilityCertificate& cert,
                                      const BlockCommitment& c) {
    return sim.retrieve(cert, c);
}

ScenarioResult run_scenario(const Deployment& deployment, const SimConfig& config, ByteSpan block) {
    Simulation sim(deployment, config);
    ScenarioResult out;
    out.dispersal = sim.disperse(block);
    if (out.dispersal.result) {
        out.retrieval = sim.retrieve(*out.dispersal.result, out.dispersal.block);
        if (out.retrieval->result) {
            try {
                out.block = from_matrix(out.retrieval->result->matrix);
            } catch (const DecodeError&) {
            }
        }
    }
    out.trace = sim.trace();
    return out;
}

BindingReport run_binding_probe(const SchemeParams& params, std::uint64_t seed, std::size_t trials,
                                std::size_t block_size) {
    if (trials < 1) throw InvalidArgument("binding probe needs at least one trial");
    if (block_size < 1) throw InvalidArgument("binding probe needs nonempty blocks");
    Csprng rng("savid/binding-probe", seed);
    BindingReport report;

    Bytes a(block_size), b(block_size);
    for (std::size_t i = 0; i < trials; ++i) {
        rng.fill(a);
        do rng.fill(b);
        while (a == b);
        if (commit_block(params, a) == commit_block(params, b)) ++report.collisions;
        ++report.random_pairs;
    }

    Bytes base(block_size);
    rng.fill(base);
    const BlockCommitment base_c = commit_block(params, base);
    report.identical_blocks_agree = commit_block(params, Bytes(base)) == base_c;

    const std::size_t variants = std::min(trials, 8 * block_size);
    std::set<BlockCommitment> seen{base_c};
    for (std::size_t bit = 0; bit < variants; ++bit) {
        Bytes v = base;
        v[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        if (!seen.insert(commit_block(params, v)).second) ++report.collisions;
        ++report.perturbations;
    }
    return report;
}

ScenarioFile parse_scenario(std::string_view text) {
    ScenarioFile out;
    bool have_n = false, have_t = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::string l = trim(line);
        if (l.empty()) continue;
        const auto eq = l.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("scenario line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(std::string_view(l).substr(0, eq));
        const std::string value = trim(std::string_view(l).substr(eq + 1));

        if (key == "n") {
            out.config.n = parse_u64(value, key);
            have_n = true;
        } else if (key == "t") {
            out.config.t = parse_u64(value, key);
            have_t = true;
        } else if (key == "seed") {
            out.config.seed = parse_u64(value, key);
        } else if (key == "max_rows") {
            out.max_rows = parse_u64(value, key);
        } else if (key == "block_size") {
            out.block_size = parse_u64(value, key);
        } else if (key == "setup_seed") {
            out.setup_seed = value;
        } else if (key.starts_with("node.")) {
            out.config.strategies[parse_node(std::string_view(key).substr(5))] = require_strategy(value);
        } else if (key.starts_with("nodes.")) {
            const std::string_view range = std::string_view(key).substr(6);
            const auto dash = range.find('-');
            if (dash == std::string_view::npos) throw InvalidArgument("scenario: nodes.<a>-<b> expected");
            const auto lo = parse_node(range.substr(0, dash));
            const auto hi = parse_node(range.substr(dash + 1));
            for (std::uint32_t i = lo; i <= hi; ++i)
                out.config.strategies[static_cast<std::uint16_t>(i)] = require_strategy(value);
        } else if (key == "tamper") {
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                out.config.tampered_chunks.insert(parse_node(trim(rest.substr(0, comma))));
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        } else if (key == "corrupt") {
            const auto c1 = value.find(':');
            const auto c2 = value.find(':', c1 == std::string::npos ? c1 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw InvalidArgument("scenario: corrupt = <step>:<node>:<strategy>");
            out.config.corruptions.push_back({parse_u64(std::string_view(value).substr(0, c1), "step"),
                                              parse_node(std::string_view(value).substr(c1 + 1, c2 - c1 - 1)),
                                              require_strategy(std::string_view(value).substr(c2 + 1))});
        } else {
            throw InvalidArgument("scenario line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    if (!have_n || !have_t) throw InvalidArgument("scenario must set n and t");
    return out;
}

}  // namespace savid::netsim

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

#include "savid/files.hpp"

#include <algorithm>

namespace savid {

Bytes serialize_params_file(const SchemeParams& params) {
    ByteWriter w;
    w.raw(kParamsFileMagic);
    w.u16(static_cast<std::uint16_t>(params.n()));
    w.u16(static_cast<std::uint16_t>(params.t()));
    w.u16(static_cast<std::uint16_t>(params.q()));
    w.u16(static_cast<std::uint16_t>(params.k()));
    w.u64(params.max_rows());
    const Bytes commit = params.commit().serialize();
    w.u64(commit.size());
    w.raw(commit);
    for (const auto& pk : params.node_pks()) w.raw(pk.bytes);
    w.u8(params.commit().flag());
    Bytes out = std::move(w).take();
    const Digest d = sha256(out);
    out.insert(out.end(), d.begin(), d.end());
    return out;
}

std::shared_ptr<const SchemeParams> parse_params_file(ByteSpan bytes) {
    if (bytes.size() < kParamsFileMagic.size() + 32) throw DecodeError("params file: truncated");
    const ByteSpan body = bytes.first(bytes.size() - 32);
    const Digest d = sha256(body);
    if (!std::equal(d.begin(), d.end(), bytes.end() - 32)) throw DecodeError("params file: checksum mismatch");

    ByteReader r(body);
    r.expect_magic(kParamsFileMagic);
    const std::size_t n = r.u16(), t = r.u16(), q = r.u16(), k = r.u16();
    const std::uint64_t max_rows = r.u64();
    const std::uint64_t commit_len = r.u64();
    if (commit_len > r.remaining()) throw DecodeError("params file: truncated commit parameters");
    auto commit = std::make_shared<const CommitParams>(CommitParams::deserialize(r.raw(commit_len)));
    std::vector<NodePublicKey> pks(n);
    for (auto& pk : pks) std::ranges::copy(r.raw(NodePublicKey::kBytes), pk.bytes.begin());
    const std::uint8_t flag = r.u8();
    r.expect_end();

    if (flag != commit->flag()) throw DecodeError("params file: setup flag mismatch");
    if (commit->max_len() != max_rows) throw InvalidArgument("params file: L_max does not match commit parameters");
    auto params = std::make_shared<const SchemeParams>(n, t, std::move(commit), std::move(pks));
    if (params->q() != q || params->k() != k) throw InvalidArgument("params file: q or k inconsistent with n and t");
    return params;
}

Bytes serialize_node_key_file(std::uint16_t index, const NodeKeypair& key) {
    ByteWriter w;
    w.raw(kNodeKeyFileMagic);
    w.u16(index);
    w.raw(key.seed());
    return std::move(w).take();
}

std::pair<std::uint16_t, NodeKeypair> parse_node_key_file(ByteSpan bytes) {
    ByteReader r(bytes);
    r.expect_magic(kNodeKeyFileMagic);
    const std::uint16_t index = r.u16();
    std::array<std::uint8_t, NodeKeypair::kSeedBytes> seed;
    std::ranges::copy(r.raw(seed.size()), seed.begin());
    r.expect_end();
    if (index == 0) throw DecodeError("node key file: index must be positive");
    return {index, NodeKeypair::from_seed(seed)};
}

}  // namespace savid

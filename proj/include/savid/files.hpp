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

// On-disk forms of a deployment: the public parameters file and one secret
// key file per storage node.

#pragma once

#include <memory>
#include <string_view>

#include "savid/crypto.hpp"
#include "savid/scheme.hpp"

namespace savid {

/// magic ‖ n, t, q, k (2B BE each) ‖ L_max (8B BE) ‖ commit params length
/// (8B BE) ‖ commit params ‖ n public keys ‖ dev flag ‖ SHA-256 of all
/// preceding bytes.
inline constexpr std::string_view kParamsFileMagic = "SAVIDPM1";
/// magic ‖ node index (2B BE) ‖ 32-byte key seed.
inline constexpr std::string_view kNodeKeyFileMagic = "SAVIDSK1";

Bytes serialize_params_file(const SchemeParams& params);
/// Throws DecodeError for a bad checksum or layout and InvalidArgument when
/// the recorded sizes contradict each other.
std::shared_ptr<const SchemeParams> parse_params_file(ByteSpan bytes);

Bytes serialize_node_key_file(std::uint16_t index, const NodeKeypair& key);
std::pair<std::uint16_t, NodeKeypair> parse_node_key_file(ByteSpan bytes);

}  // namespace savid

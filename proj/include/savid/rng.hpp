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

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

#include "savid/field.hpp"

namespace savid {

/// Seedable ChaCha20 keystream generator. Identical seeds give identical
/// streams on every platform, which keeps simulations and dev setups
/// reproducible. Production blinding should seed it from the OS entropy
/// source (random_seed()).
class Csprng {
public:
    using result_type = std::uint64_t;

    explicit Csprng(ByteSpan seed);
    explicit Csprng(std::uint64_t seed);
    /// Seed derived from a label and an integer, for independent substreams.
    Csprng(std::string_view label, std::uint64_t seed);

    static std::array<std::uint8_t, 32> random_seed();

    void fill(std::span<std::uint8_t> out);
    std::uint64_t operator()();
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t uniform(std::uint64_t bound);
    FieldElement field_element();

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    void refill();

    std::array<std::uint8_t, 32> key_{};
    std::uint64_t block_counter_ = 0;
    std::array<std::uint8_t, 1024> buffer_{};
    std::size_t pos_ = buffer_.size();
};

}  // namespace savid

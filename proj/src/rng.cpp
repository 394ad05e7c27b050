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

#include "savid/rng.hpp"

#include <cstring>

#include <sodium.h>

#include "savid/crypto.hpp"

namespace savid {

Csprng::Csprng(ByteSpan seed) {
    ensure_sodium();
    crypto_hash_sha256(key_.data(), seed.data(), seed.size());
}

Csprng::Csprng(std::uint64_t seed) {
    ByteWriter w;
    w.raw(std::string_view("savid/csprng/u64"));
    w.u64(seed);
    *this = Csprng(ByteSpan(w.bytes()));
}

Csprng::Csprng(std::string_view label, std::uint64_t seed) {
    ByteWriter w;
    w.raw(label);
    w.u8(0);
    w.u64(seed);
    *this = Csprng(ByteSpan(w.bytes()));
}

std::array<std::uint8_t, 32> Csprng::random_seed() {
    ensure_sodium();
    std::array<std::uint8_t, 32> seed{};
    randombytes_buf(seed.data(), seed.size());
    return seed;
}

void Csprng::refill() {
    std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
    const std::uint64_t counter = block_counter_++;
    for (std::size_t i = 0; i < sizeof(counter); ++i) nonce[i] = static_cast<std::uint8_t>(counter >> (8 * i));
    crypto_stream_chacha20_ietf(buffer_.data(), buffer_.size(), nonce.data(), key_.data());
    pos_ = 0;
}

void Csprng::fill(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    while (done < out.size()) {
        if (pos_ == buffer_.size()) refill();
        const std::size_t n = std::min(out.size() - done, buffer_.size() - pos_);
        std::memcpy(out.data() + done, buffer_.data() + pos_, n);
        pos_ += n;
        done += n;
    }
}

std::uint64_t Csprng::operator()() {
    std::array<std::uint8_t, 8> b{};
    fill(b);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
}

std::uint64_t Csprng::uniform(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("uniform: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t v = (*this)();
        if (v >= threshold) return v % bound;
    }
}

FieldElement Csprng::field_element() {
    std::array<std::uint8_t, 64> wide{};
    fill(wide);
    return FieldElement::from_bytes_wide(wide);
}

}  // namespace savid

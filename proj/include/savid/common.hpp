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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace savid {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation: wrong dimensions, out-of-range index, bad shape.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Bytes that cannot be parsed into the requested object.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Value-or-error return for protocol outcomes that are expected to fail
/// under adversarial conditions (quorum unreachable, availability lost).
template <class T, class E>
class Expected {
public:
    Expected(T value) : v_(std::in_place_index<0>, std::move(value)) {}
    Expected(E error) : v_(std::in_place_index<1>, std::move(error)) {}

    bool has_value() const noexcept { return v_.index() == 0; }
    explicit operator bool() const noexcept { return has_value(); }

    T& value() & {
        if (!has_value()) throw Error("Expected: no value");
        return std::get<0>(v_);
    }
    const T& value() const& {
        if (!has_value()) throw Error("Expected: no value");
        return std::get<0>(v_);
    }
    T&& value() && {
        if (!has_value()) throw Error("Expected: no value");
        return std::get<0>(std::move(v_));
    }
    const E& error() const {
        if (has_value()) throw Error("Expected: no error");
        return std::get<1>(v_);
    }

    T* operator->() { return &value(); }
    const T* operator->() const { return &value(); }
    T& operator*() & { return value(); }
    const T& operator*() const& { return value(); }

private:
    std::variant<T, E> v_;
};

std::string to_hex(ByteSpan bytes);
Bytes from_hex(std::string_view hex);

/// Appends big-endian integers and raw bytes.
class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v) { be(v, 2); }
    void u64(std::uint64_t v) { be(v, 8); }
    void raw(ByteSpan bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }
    void raw(std::string_view s) { out_.insert(out_.end(), s.begin(), s.end()); }

    const Bytes& bytes() const& { return out_; }
    Bytes&& take() && { return std::move(out_); }
    std::size_t size() const { return out_.size(); }

private:
    void be(std::uint64_t v, int width) {
        for (int i = width - 1; i >= 0; --i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    Bytes out_;
};

/// Consumes big-endian integers and raw bytes; throws DecodeError on underrun.
class ByteReader {
public:
    explicit ByteReader(ByteSpan in) : in_(in) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(be(1)); }
    std::uint16_t u16() { return static_cast<std::uint16_t>(be(2)); }
    std::uint64_t u64() { return be(8); }
    ByteSpan raw(std::size_t n) {
        need(n);
        auto s = in_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    void expect_magic(std::string_view magic) {
        auto got = raw(magic.size());
        if (!std::equal(got.begin(), got.end(), magic.begin()))
            throw DecodeError("bad magic, expected " + std::string(magic));
    }
    std::size_t remaining() const { return in_.size() - pos_; }
    std::size_t position() const { return pos_; }
    void expect_end() const {
        if (remaining() != 0) throw DecodeError("trailing bytes");
    }

private:
    void need(std::size_t n) const {
        if (in_.size() - pos_ < n) throw DecodeError("truncated input");
    }
    std::uint64_t be(int width) {
        need(static_cast<std::size_t>(width));
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 8) | in_[pos_++];
        return v;
    }
    ByteSpan in_;
    std::size_t pos_ = 0;
};

/// Smallest power of two >= n (n >= 1).
constexpr std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace savid

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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "savid/common.hpp"
#include "savid/files.hpp"

namespace savid::cli {

/// Process exit codes. Every failure prints one line "error: <kind>: <detail>".
enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kUsage = 2,
    kBadParams = 3,
    kBadCertificate = 4,
    kInsufficientChunks = 5,
    kCommitmentMismatch = 6,
    kOpeningRejected = 7,
    kPropertyViolated = 8,
    kQuorumUnreachable = 9,
};

class CliError : public std::runtime_error {
public:
    CliError(int code, std::string kind, const std::string& detail)
        : std::runtime_error(detail), code_(code), kind_(std::move(kind)) {}
    int code() const noexcept { return code_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    int code_;
    std::string kind_;
};

inline Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kIoError, "io", "cannot open " + path.string());
    Bytes out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return out;
}

inline void write_file(const std::filesystem::path& path, ByteSpan data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError(kIoError, "io", "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw CliError(kIoError, "io", "short write to " + path.string());
}

inline std::shared_ptr<const SchemeParams> load_params(const std::filesystem::path& path) {
    const Bytes bytes = read_file(path);
    try {
        return parse_params_file(bytes);
    } catch (const Error& e) {
        throw CliError(kBadParams, "bad-params", path.string() + ": " + e.what());
    }
}

inline BlockCommitment parse_commitment(const std::string& hex) {
    try {
        return BlockCommitment::from_hex(hex);
    } catch (const Error& e) {
        throw CliError(kUsage, "usage", std::string("commitment: ") + e.what());
    }
}

inline void warn(const std::string& what) { std::cerr << "warning: " << what << '\n'; }

inline std::filesystem::path chunk_path(const std::filesystem::path& dir, std::size_t index) {
    return dir / ("chunk-" + std::to_string(index) + ".bin");
}

inline std::filesystem::path key_path(const std::filesystem::path& dir, std::size_t index) {
    return dir / ("node-" + std::to_string(index) + ".key");
}

/// Bench entry point; returns the exit code.
struct BenchOptions {
    std::vector<std::string> grid;  // "n:t:bytes"
    unsigned threads = 1;
    unsigned repeats = 1;
};
int run_bench(const BenchOptions& options);

}  // namespace savid::cli

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

// Closed-form communication and storage costs of dispersal schemes.
// Sizes are bytes; display units are SI (1 MB = 10^6 B).

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace savid::costmodel {

enum class Scheme { Repetition, Avid, AvidFp, AvidM, Aced, SemiAvidPr };

std::string_view name(Scheme s) noexcept;
/// Accepts the display names and lowercase aliases such as "avid-fp" or "semi-avid-pr".
std::optional<Scheme> parse_scheme(std::string_view s);

struct AcedParams {
    long double t_prime = 16;
    long double r = 0.25L;
    long double q = 8;
    long double d = 8;  // not used by the cost formula
    long double c = 40e3L;
    long double eta = 0.875L;
};

struct CostInputs {
    long double block_size = 22e6L;
    std::size_t n = 1024;
    std::size_t t = 338;
    long double lambda_h = 32;
    long double lambda_c = 48;
    AcedParams aced;
};

struct Cost {
    long double communication;
    long double storage;
};

/// Throws InvalidArgument for t >= n/2 or a nonpositive ACeD λ.
Cost cost(Scheme s, const CostInputs& in);

/// λ = (1 - 2t/n) / ln(1 / (1 - η)).
long double aced_lambda(const CostInputs& in);

struct TradeoffPoint {
    long double c;
    long double cost;
    /// The fraud-proof size has no closed form here; always empty.
    std::optional<long double> fraud_proof_size;
};

std::vector<TradeoffPoint> aced_tradeoff(const CostInputs& in, std::span<const long double> c_values);

struct TableRow {
    Scheme scheme;
    std::size_t t;
    Cost cost;
};

/// The eight comparison rows: Repetition at t = 0.49n, AVID family at
/// 0.33n, ACeD and Semi-AVID-PR at both resiliences.
std::vector<TableRow> comparison_table(long double block_size = 22e6L, std::size_t n = 1024);

/// Rounds to three significant figures.
long double round3(long double x);
/// "81.8 MB", "101 GB", "585 MB": three significant figures with an SI unit.
std::string format_bytes(long double bytes);

std::string render_table(std::span<const TableRow> rows);
std::string render_csv(std::span<const TableRow> rows);

}  // namespace savid::costmodel

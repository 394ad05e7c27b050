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

#include "savid/costmodel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "savid/common.hpp"

namespace savid::costmodel {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

std::string_view name(Scheme s) noexcept {
    switch (s) {
        case Scheme::Repetition: return "Repetition";
        case Scheme::Avid: return "AVID";
        case Scheme::AvidFp: return "AVID-FP";
        case Scheme::AvidM: return "AVID-M";
        case Scheme::Aced: return "ACeD";
        case Scheme::SemiAvidPr: return "Semi-AVID-PR";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view s) {
    const std::string l = lowercase(s);
    if (l == "repetition") return Scheme::Repetition;
    if (l == "avid") return Scheme::Avid;
    if (l == "avid-fp" || l == "avidfp") return Scheme::AvidFp;
    if (l == "avid-m" || l == "avidm") return Scheme::AvidM;
    if (l == "aced") return Scheme::Aced;
    if (l == "semi-avid-pr" || l == "semiavidpr" || l == "savid") return Scheme::SemiAvidPr;
    return std::nullopt;
}

long double aced_lambda(const CostInputs& in) {
    const long double n = static_cast<long double>(in.n);
    const long double t = static_cast<long double>(in.t);
    return (1 - 2 * t / n) / std::log(1 / (1 - in.aced.eta));
}

Cost cost(Scheme s, const CostInputs& in) {
    if (in.n == 0 || 2 * in.t >= in.n) throw InvalidArgument("resilience bound violated: need t < n/2");
    const long double n = static_cast<long double>(in.n);
    const long double k = static_cast<long double>(in.n - 2 * in.t);
    const long double b = in.block_size;
    const long double lh = in.lambda_h;

    switch (s) {
        case Scheme::Repetition: return {n * b, n * b};
        case Scheme::Avid: {
            const long double per_node = b / k + n * lh;
            return {per_node * (n + n * n), n * per_node};
        }
        case Scheme::AvidFp: {
            const long double storage = n * (b / k + (n + k) * lh);
            return {storage + n * n * (n + k) * lh, storage};
        }
        case Scheme::AvidM: {
            const long double storage = n * (b / k + (1 + std::log2(n)) * lh);
            return {storage + n * n * lh, storage};
        }
        case Scheme::Aced: {
            const auto& a = in.aced;
            const long double lambda = aced_lambda(in);
            if (!(lambda > 0) || !std::isfinite(lambda)) throw InvalidArgument("ACeD lambda must be positive and finite");
            const long double log_qr = std::log(b / (a.c * a.t_prime * a.r)) / std::log(a.q * a.r);
            const long double per_node = a.t_prime * lh + b / (n * a.r * lambda) +
                                         (2 * a.q - 1) * b * lh / (n * a.r * a.c * lambda) * log_qr;
            return {n * per_node, n * per_node};
        }
        case Scheme::SemiAvidPr: {
            const long double total = n * (b / k + k * in.lambda_c);
            return {total, total};
        }
    }
    throw InvalidArgument("unknown scheme");
}

std::vector<TradeoffPoint> aced_tradeoff(const CostInputs& in, std::span<const long double> c_values) {
    std::vector<TradeoffPoint> out;
    out.reserve(c_values.size());
    for (const long double c : c_values) {
        if (!(c > 0)) throw InvalidArgument("symbol size must be positive");
        CostInputs at = in;
        at.aced.c = c;
        out.push_back({c, cost(Scheme::Aced, at).communication, std::nullopt});
    }
    return out;
}

std::vector<TableRow> comparison_table(long double block_size, std::size_t n) {
    // Resiliences 0.33n and 0.49n, rounded as in the published comparison.
    const std::size_t t33 = static_cast<std::size_t>(std::llround(0.33L * static_cast<long double>(n)));
    const std::size_t t49 = static_cast<std::size_t>(std::llround(0.49L * static_cast<long double>(n)));
    const std::array<std::pair<Scheme, std::size_t>, 8> layout{{
        {Scheme::Repetition, t49},
        {Scheme::Avid, t33},
        {Scheme::AvidFp, t33},
        {Scheme::AvidM, t33},
        {Scheme::Aced, t33},
        {Scheme::Aced, t49},
        {Scheme::SemiAvidPr, t33},
        {Scheme::SemiAvidPr, t49},
    }};
    std::vector<TableRow> rows;
    for (const auto& [scheme, t] : layout) {
        CostInputs in;
        in.block_size = block_size;
        in.n = n;
        in.t = t;
        rows.push_back({scheme, t, cost(scheme, in)});
    }
    return rows;
}

long double round3(long double x) {
    if (x == 0 || !std::isfinite(x)) return x;
    const long double scale = std::pow(10.0L, 2 - std::floor(std::log10(std::fabs(x))));
    return std::round(x * scale) / scale;
}

std::string format_bytes(long double bytes) {
    static constexpr std::array<const char*, 6> kUnits{"B", "kB", "MB", "GB", "TB", "PB"};
    const long double r = round3(bytes);
    std::size_t unit = 0;
    long double v = r;
    while (std::fabs(v) >= 1000 && unit + 1 < kUnits.size()) {
        v /= 1000;
        ++unit;
    }
    const int decimals = std::fabs(v) >= 100 ? 0 : std::fabs(v) >= 10 ? 1 : 2;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf %s", decimals, v, kUnits[unit]);
    return buf;
}

std::string render_table(std::span<const TableRow> rows) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %6s %14s %14s\n", "scheme", "t", "communication", "storage");
    out += line;
    for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "%-14s %6zu %14s %14s\n", std::string(name(row.scheme)).c_str(), row.t,
                      format_bytes(row.cost.communication).c_str(), format_bytes(row.cost.storage).c_str());
        out += line;
    }
    return out;
}

std::string render_csv(std::span<const TableRow> rows) {
    std::string out = "scheme,t,communication_bytes,storage_bytes,communication,storage\n";
    char line[200];
    for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "%s,%zu,%.0Lf,%.0Lf,%s,%s\n", std::string(name(row.scheme)).c_str(), row.t,
                      row.cost.communication, row.cost.storage, format_bytes(row.cost.communication).c_str(),
                      format_bytes(row.cost.storage).c_str());
        out += line;
    }
    return out;
}

}  // namespace savid::costmodel

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

#include <map>
#include <memory>
#include <string_view>
#include <tuple>
#include <vector>

#include "savid/common.hpp"
#include "savid/field.hpp"
#include "savid/matrix.hpp"
#include "savid/netsim.hpp"
#include "savid/rng.hpp"

namespace testutil {

using namespace savid;

inline ByteSpan as_bytes(std::string_view s) { return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()}; }

inline FieldElement fe_hex(std::string_view hex) { return FieldElement::from_bytes(from_hex(hex)); }

inline std::vector<FieldElement> random_vector(Csprng& rng, std::size_t len) {
    std::vector<FieldElement> v(len);
    for (auto& x : v) x = rng.field_element();
    return v;
}

inline DataMatrix random_matrix(Csprng& rng, std::size_t rows, std::size_t cols) {
    DataMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = rng.field_element();
    return m;
}

inline Bytes random_bytes(Csprng& rng, std::size_t len) {
    Bytes b(len);
    rng.fill(b);
    return b;
}

/// Deployments are expensive to set up, so each shape is built once per process.
inline const netsim::Deployment& deployment(std::size_t n, std::size_t t, std::size_t max_rows) {
    static std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::unique_ptr<netsim::Deployment>> cache;
    auto& slot = cache[{n, t, max_rows}];
    if (!slot)
        slot = std::make_unique<netsim::Deployment>(
            netsim::Deployment::create(n, t, max_rows, as_bytes("savid-test-deployment"), 4));
    return *slot;
}

}  // namespace testutil

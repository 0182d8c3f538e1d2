// SPDX-License-Identifier: Apache-2.0
//
// mhdmt - diversity-multiplexing tradeoff toolkit for MIMO multihop relay channels
// Copyright (C) 2026 The mhdmt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "mhdmt/dimension.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mhdmt {

/// Channel order, minimal forms and the interval boundaries p_k of the
/// coefficient formula for one dimension.
struct ReductionReport {
    int order = 0;                    ///< N*, length of the minimal form minus one
    Dimension minimal_form;           ///< (n~_0, ..., n~_{N*}), ordered
    Dimension minimal_vertical_form;  ///< minimal form padded with n_bar to N+1 layers
    int n_bar = 0;                    ///< antennas needed on every extra layer
    /// p_0 .. p_{N-1}; the last interval is unbounded below (p_N = -inf).
    std::vector<std::int64_t> p;
};

/// True iff the channel can be reduced to its k+1 smallest layers, i.e.
/// k (n~_{k+1} + 1) >= n~_0 + ... + n~_k. n~_{N+1} counts as +inf.
inline bool can_reduce(const Dimension& dim, int k) {
    if (k < 1 || k > dim.hops()) throw std::out_of_range("reduction length out of range");
    if (k == dim.hops()) return true;
    const std::vector<int> n = dim.ordered();
    const std::int64_t sum = std::accumulate(n.begin(), n.begin() + k + 1, std::int64_t{0});
    return std::int64_t{k} * (n[static_cast<std::size_t>(k) + 1] + 1) >= sum;
}

inline ReductionReport analyze(const Dimension& dim) {
    const std::vector<int> n = dim.ordered();
    ReductionReport out;
    out.order = dim.hops();
    for (int k = 1; k <= dim.hops(); ++k) {
        if (can_reduce(dim, k)) {
            out.order = k;
            break;
        }
    }
    const auto first = n.begin();
    const auto last = n.begin() + out.order + 1;
    out.minimal_form = Dimension(std::vector<int>(first, last));
    const std::int64_t sum = std::accumulate(first, last, std::int64_t{0});
    out.n_bar = static_cast<int>((sum + out.order - 1) / out.order - 1);

    std::vector<int> vertical(first, last);
    vertical.resize(dim.layers(), out.n_bar);
    out.minimal_vertical_form = Dimension(std::move(vertical));

    out.p.push_back(n.front());
    std::int64_t prefix = n.front();
    for (int k = 1; k < dim.hops(); ++k) {
        prefix += n[static_cast<std::size_t>(k)];
        out.p.push_back(prefix - std::int64_t{k} * n[static_cast<std::size_t>(k) + 1]);
    }
    return out;
}

/// Index k of the interval [p_k, p_{k-1}] containing i (the smallest such k).
inline int coefficient_interval(const ReductionReport& report, int i) {
    for (std::size_t k = 1; k < report.p.size(); ++k) {
        if (i >= report.p[k]) return static_cast<int>(k);
    }
    return static_cast<int>(report.p.size());
}

/// Two channels share the DMT iff their minimal forms coincide.
inline bool equivalent(const Dimension& a, const Dimension& b) {
    return analyze(a).minimal_form == analyze(b).minimal_form;
}

/// Caps every relay layer at n_bar, leaving the source and destination alone.
inline Dimension practical_vertical_reduction(const Dimension& dim) {
    const int cap = analyze(dim).n_bar;
    std::vector<int> out(dim.counts().begin(), dim.counts().end());
    for (std::size_t i = 1; i + 1 < out.size(); ++i) out[i] = std::min(out[i], cap);
    return Dimension(std::move(out));
}

}  // namespace mhdmt

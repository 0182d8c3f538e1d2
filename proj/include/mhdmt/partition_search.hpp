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

/**
 * @file partition_search.hpp
 * @brief Exhaustive (exponential-time) partition searches for small channels.
 *
 * Both searches are limited to at most 4 antennas per layer and 3 hops. Edge
 * sets of one hop fit in 16 bits, so a path is a tuple of edge masks.
 */

#pragma once

#include "mhdmt/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mhdmt {

namespace detail {

inline void check_search_limits(const Dimension& dim) {
    if (dim.hops() > 3 || dim.n_max() > 4) {
        throw std::invalid_argument("exhaustive partition search needs N <= 3 and at most 4 antennas per layer");
    }
}

/// Edge mask of hop (a, b) used by antenna masks ma, mb.
inline std::uint32_t hop_edges(std::uint32_t ma, std::uint32_t mb, int nb) {
    std::uint32_t out = 0;
    for (int u = 0; ma >> u; ++u) {
        if (ma >> u & 1U) out |= mb << (u * nb);
    }
    return out;
}

inline std::vector<int> mask_to_antennas(std::uint32_t m) {
    std::vector<int> out;
    for (int a = 0; m >> a; ++a) {
        if (m >> a & 1U) out.push_back(a);
    }
    return out;
}

struct MaskPath {
    std::vector<std::uint32_t> layers;  ///< antenna mask per layer
    std::vector<std::uint32_t> edges;   ///< edge mask per hop
};

inline AfPath to_path(const MaskPath& p) {
    std::vector<std::vector<int>> sets;
    for (auto m : p.layers) sets.push_back(mask_to_antennas(m));
    return AfPath::from_sets(std::move(sets));
}

/// Every path whose layers use the masks drawn from `choices[i]`.
inline std::vector<MaskPath> enumerate_paths(const Dimension& dim, const std::vector<std::vector<std::uint32_t>>& choices) {
    std::vector<MaskPath> out;
    MaskPath cur;
    cur.layers.resize(dim.layers());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == dim.layers()) {
            cur.edges.clear();
            for (std::size_t h = 1; h < dim.layers(); ++h) {
                cur.edges.push_back(hop_edges(cur.layers[h - 1], cur.layers[h], dim[h]));
            }
            out.push_back(cur);
            return;
        }
        for (auto m : choices[i]) {
            cur.layers[i] = m;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/**
 * Largest family of pairwise edge-disjoint single-antenna paths, found by
 * branch and bound over the first-hop edges. Exponential.
 */
inline Partition max_single_antenna_family_search(const Dimension& dim) {
    detail::check_search_limits(dim);
    std::vector<std::vector<std::uint32_t>> choices(dim.layers());
    for (std::size_t i = 0; i < dim.layers(); ++i) {
        for (int a = 0; a < dim[i]; ++a) choices[i].push_back(1U << a);
    }
    const auto paths = detail::enumerate_paths(dim, choices);
    const auto hops = static_cast<std::size_t>(dim.hops());

    // Paths grouped by first-hop edge; at most one path per group can be chosen.
    const int first_edges = dim[0] * dim[1];
    std::vector<std::vector<std::size_t>> by_first(static_cast<std::size_t>(first_edges));
    for (std::size_t p = 0; p < paths.size(); ++p) {
        by_first[static_cast<std::size_t>(std::countr_zero(paths[p].edges[0]))].push_back(p);
    }

    std::vector<std::uint32_t> used(hops, 0);
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    auto free_bound = [&]() {
        int bound = std::numeric_limits<int>::max();
        for (std::size_t h = 0; h < hops; ++h) {
            const int total = dim[h] * dim[h + 1];
            bound = std::min(bound, total - std::popcount(used[h]));
        }
        return bound;
    };
    auto rec = [&](auto&& self, int edge) -> void {
        if (chosen.size() > best.size()) best = chosen;
        if (edge == first_edges) return;
        const int remaining = std::min(first_edges - edge, free_bound());
        if (static_cast<int>(chosen.size()) + remaining <= static_cast<int>(best.size())) return;
        for (std::size_t p : by_first[static_cast<std::size_t>(edge)]) {
            bool ok = true;
            for (std::size_t h = 0; h < hops && ok; ++h) ok = (used[h] & paths[p].edges[h]) == 0;
            if (!ok) continue;
            for (std::size_t h = 0; h < hops; ++h) used[h] |= paths[p].edges[h];
            chosen.push_back(p);
            self(self, edge + 1);
            chosen.pop_back();
            for (std::size_t h = 0; h < hops; ++h) used[h] &= ~paths[p].edges[h];
        }
        self(self, edge + 1);
    };
    rec(rec, 0);

    Partition out;
    for (std::size_t p : best) out.paths.push_back(detail::to_path(paths[p]));
    return out;
}

/**
 * Smallest full-diversity independent partition by iterative deepening on K.
 * A full-diversity partition tiles a bottleneck hop with its path
 * rectangles and each path reaches |S_a| |S_b| on its own, so the search is an
 * exact cover of that hop. Exponential.
 */
inline std::pair<int, Partition> min_full_div_partition_search(const Dimension& dim) {
    detail::check_search_limits(dim);
    const int h = bottleneck_hops(dim).front();
    const auto a = static_cast<std::size_t>(h - 1);
    const auto b = static_cast<std::size_t>(h);
    const auto hops = static_cast<std::size_t>(dim.hops());

    std::vector<std::vector<std::uint32_t>> choices(dim.layers());
    for (std::size_t i = 0; i < dim.layers(); ++i) {
        for (std::uint32_t m = 1; m < (1U << dim[i]); ++m) choices[i].push_back(m);
    }
    std::vector<detail::MaskPath> candidates;
    for (auto& p : detail::enumerate_paths(dim, choices)) {
        std::vector<int> w;
        for (auto m : p.layers) w.push_back(std::popcount(m));
        if (dmt_rp_at(Dimension(w), 0) == std::int64_t{w[a]} * w[b]) candidates.push_back(std::move(p));
    }

    const std::uint32_t grid_full = static_cast<std::uint32_t>((std::uint64_t{1} << (dim[a] * dim[b])) - 1);
    int max_area = 0;
    for (const auto& c : candidates) max_area = std::max(max_area, std::popcount(c.edges[a]));

    std::vector<std::uint32_t> used(hops, 0);
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, int budget) -> bool {
        const std::uint32_t covered = used[a];
        if (covered == grid_full) return true;
        if (budget == 0) return false;
        if (std::popcount(grid_full & ~covered) > budget * max_area) return false;
        const std::uint32_t cell = 1U << std::countr_zero(grid_full & ~covered);
        for (std::size_t p = 0; p < candidates.size(); ++p) {
            const auto& c = candidates[p];
            if (!(c.edges[a] & cell)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < hops && ok; ++k) ok = (used[k] & c.edges[k]) == 0;
            if (!ok) continue;
            for (std::size_t k = 0; k < hops; ++k) used[k] |= c.edges[k];
            chosen.push_back(p);
            if (self(self, budget - 1)) return true;
            chosen.pop_back();
            for (std::size_t k = 0; k < hops; ++k) used[k] &= ~c.edges[k];
        }
        return false;
    };

    const auto dmax = static_cast<int>(max_diversity(dim));
    for (int k = 1; k <= dmax; ++k) {
        if (rec(rec, k)) {
            Partition out;
            for (std::size_t p : chosen) out.paths.push_back(detail::to_path(candidates[p]));
            return {k, std::move(out)};
        }
    }
    throw std::logic_error("no full-diversity partition found");  // max_partition always qualifies
}

}  // namespace mhdmt

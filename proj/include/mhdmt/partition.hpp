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
 * @file partition.hpp
 * @brief Parallel partitions of a multihop channel into AF paths.
 *
 * A supernode is a set of antennas of one layer; an AF path picks one
 * supernode per layer and uses every antenna pair between consecutive
 * supernodes. A partition is independent when no edge is used by two paths.
 * Antenna indices are 0-based throughout.
 */

#pragma once

#include "mhdmt/dimension.hpp"
#include "mhdmt/dmt.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mhdmt {

struct Supernode {
    int layer = 0;
    std::vector<int> antennas;  ///< sorted, unique
    friend bool operator==(const Supernode&, const Supernode&) = default;
};

struct AfPath {
    std::vector<Supernode> supernodes;  ///< one per layer, source first

    /// Builds a path from per-layer antenna sets.
    static AfPath from_sets(std::vector<std::vector<int>> sets) {
        AfPath p;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::sort(sets[i].begin(), sets[i].end());
            p.supernodes.push_back({static_cast<int>(i), std::move(sets[i])});
        }
        return p;
    }

    [[nodiscard]] std::vector<int> widths() const {
        std::vector<int> w;
        w.reserve(supernodes.size());
        for (const auto& s : supernodes) w.push_back(static_cast<int>(s.antennas.size()));
        return w;
    }

    [[nodiscard]] Dimension dimension() const { return Dimension(widths()); }

    friend bool operator==(const AfPath&, const AfPath&) = default;
};

struct Partition {
    std::vector<AfPath> paths;
    [[nodiscard]] std::size_t size() const noexcept { return paths.size(); }
};

/// All antennas of layer `layer` of `dim`.
inline std::vector<int> whole_layer(const Dimension& dim, std::size_t layer) {
    std::vector<int> out(static_cast<std::size_t>(dim[layer]));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

/// Throws std::invalid_argument when `p` does not describe paths of `dim`.
inline void validate(const Dimension& dim, const Partition& p) {
    if (p.paths.empty()) throw std::invalid_argument("malformed partition: no paths");
    for (const auto& path : p.paths) {
        if (path.supernodes.size() != dim.layers()) {
            throw std::invalid_argument("malformed partition: path does not visit every layer");
        }
        for (std::size_t i = 0; i < dim.layers(); ++i) {
            const auto& s = path.supernodes[i];
            if (s.layer != static_cast<int>(i) || s.antennas.empty()) {
                throw std::invalid_argument("malformed partition: bad supernode");
            }
            for (std::size_t j = 0; j < s.antennas.size(); ++j) {
                if (s.antennas[j] < 0 || s.antennas[j] >= dim[i] || (j > 0 && s.antennas[j] <= s.antennas[j - 1])) {
                    throw std::invalid_argument("malformed partition: antenna index out of range or repeated");
                }
            }
        }
    }
}

inline bool is_independent(const Dimension& dim, const Partition& p) {
    validate(dim, p);
    for (int h = 1; h <= dim.hops(); ++h) {
        const auto a = static_cast<std::size_t>(h - 1);
        const auto b = static_cast<std::size_t>(h);
        std::vector<int> used(static_cast<std::size_t>(dim[a] * dim[b]), 0);
        for (const auto& path : p.paths) {
            for (int u : path.supernodes[a].antennas) {
                for (int v : path.supernodes[b].antennas) {
                    if (++used[static_cast<std::size_t>(u * dim[b] + v)] > 1) return false;
                }
            }
        }
    }
    return true;
}

/// Sum of the AF diversities of the paths; the diversity of an independent partition.
inline std::int64_t partition_diversity(const Dimension& dim, const Partition& p) {
    validate(dim, p);
    std::int64_t total = 0;
    for (const auto& path : p.paths) total += dmt_rp_at(path.dimension(), 0);
    return total;
}

/// Distinct supernodes of one layer, in order of first appearance.
inline std::vector<std::vector<int>> layer_supernodes(const Partition& p, std::size_t layer) {
    std::vector<std::vector<int>> out;
    for (const auto& path : p.paths) {
        const auto& s = path.supernodes.at(layer).antennas;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

/// Hops h (between layers h-1 and h) where n_{h-1} n_h is minimal.
inline std::vector<int> bottleneck_hops(const Dimension& dim) {
    const std::int64_t dmax = max_diversity(dim);
    std::vector<int> out;
    for (int h = 1; h <= dim.hops(); ++h) {
        if (std::int64_t{dim[static_cast<std::size_t>(h - 1)]} * dim[static_cast<std::size_t>(h)] == dmax) out.push_back(h);
    }
    return out;
}

/**
 * Full-diversity test for an independent partition. For some bottleneck hop
 * between layers a and a+1 the path rectangles S_a x S_{a+1} must cover that
 * hop, and every path must have min_{i != a, a+1} n_{k,i} + 1 >= n_{k,a} + n_{k,a+1}.
 * When the supernodes of each layer partition it, covering is the same as
 * K = K_a K_{a+1}; with overlapping supernodes only the covering form agrees
 * with the sum of path diversities.
 */
inline bool is_full_diversity(const Dimension& dim, const Partition& p) {
    if (!is_independent(dim, p)) throw std::invalid_argument("partition is not independent");
    for (int h : bottleneck_hops(dim)) {
        const auto a = static_cast<std::size_t>(h - 1);
        const auto b = static_cast<std::size_t>(h);
        std::int64_t covered = 0;
        bool paths_ok = true;
        for (const auto& path : p.paths) {
            const auto w = path.widths();
            covered += std::int64_t{w[a]} * w[b];
            int others = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i != a && i != b) others = std::min(others, w[i]);
            }
            if (others != std::numeric_limits<int>::max() && others + 1 < w[a] + w[b]) {
                paths_ok = false;
                break;
            }
        }
        if (paths_ok && covered == std::int64_t{dim[a]} * dim[b]) return true;
    }
    return false;
}

/**
 * d_max edge-disjoint single-antenna paths. Layer 0 is filled round-robin;
 * each following layer sorts the paths by their previous antenna and deals
 * them out round-robin again, so paths sharing an antenna always move to
 * distinct antennas and every node carries floor or ceil of d_max / n_i paths.
 */
inline Partition max_partition(const Dimension& dim) {
    const auto dmax = static_cast<int>(max_diversity(dim));
    std::vector<std::vector<int>> node(static_cast<std::size_t>(dmax), std::vector<int>(dim.layers()));
    for (int p = 0; p < dmax; ++p) node[static_cast<std::size_t>(p)][0] = p % dim[0];

    std::vector<int> order(static_cast<std::size_t>(dmax));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 1; i < dim.layers(); ++i) {
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return node[static_cast<std::size_t>(x)][i - 1] < node[static_cast<std::size_t>(y)][i - 1];
        });
        for (std::size_t t = 0; t < order.size(); ++t) {
            node[static_cast<std::size_t>(order[t])][i] = static_cast<int>(t) % dim[i];
        }
    }

    Partition out;
    for (const auto& antennas : node) {
        std::vector<std::vector<int>> sets;
        for (int a : antennas) sets.push_back({a});
        out.paths.push_back(AfPath::from_sets(std::move(sets)));
    }
    return out;
}

/// Smallest full-diversity partition of a two-hop channel:
/// K = ceil(n1 / (|n0 - n2| + 1)) relay supernodes of near-equal size.
inline std::pair<int, Partition> min_full_div_partition_2hop(int n0, int n1, int n2) {
    const Dimension dim{n0, n1, n2};
    const int k = (n1 + std::abs(n0 - n2)) / (std::abs(n0 - n2) + 1);
    Partition out;
    int next = 0;
    for (int s = 0; s < k; ++s) {
        const int width = n1 / k + (s < n1 % k ? 1 : 0);
        std::vector<int> relay(static_cast<std::size_t>(width));
        std::iota(relay.begin(), relay.end(), next);
        next += width;
        out.paths.push_back(AfPath::from_sets({whole_layer(dim, 0), std::move(relay), whole_layer(dim, 2)}));
    }
    return {k, std::move(out)};
}

/// Diversity of the parallel channel that selects one antenna of `layer` per sub-channel.
inline std::int64_t nonind_partition_diversity(const Dimension& dim, int layer) {
    if (layer < 1 || layer >= dim.hops()) throw std::out_of_range("selection layer must be a relay layer");
    const auto l = static_cast<std::size_t>(layer);
    return std::min(dmt_rp_at(dim.segment(0, l), 0), dmt_rp_at(dim.segment(l, dim.layers() - 1), 0));
}

/**
 * Flip-and-forward mode schedule. Relay layer i (1..N-1) has K_i supernodes;
 * mode k (0-based here) uses supernode mode_map[i-1][k] of that layer, and
 * the flip of supernode s is -1 on its antennas for s != 0, identity for s = 0.
 */
struct FlipSchedule {
    Dimension dim;
    std::vector<std::vector<std::vector<int>>> supernodes;  ///< [i-1][s] -> antennas
    std::vector<int> counts;                                ///< K_1..K_{N-1}
    int modes = 1;                                          ///< K' = prod K_i
    std::vector<std::vector<int>> mode_map;                 ///< [i-1][k] -> supernode
    bool full_diversity = false;  ///< false when built from a partition that is not full diversity

    /// Diagonal of F_{i,s}: +1 everywhere, -1 on S_{i,s} unless s == 0.
    [[nodiscard]] std::vector<int> flip_pattern(int layer, int s) const {
        std::vector<int> out(static_cast<std::size_t>(dim[static_cast<std::size_t>(layer)]), 1);
        if (s != 0) {
            for (int a : supernodes.at(static_cast<std::size_t>(layer - 1)).at(static_cast<std::size_t>(s))) {
                out[static_cast<std::size_t>(a)] = -1;
            }
        }
        return out;
    }

    /// Diagonal of the selection matrix J_{i,s}: 1 on S_{i,s}, 0 elsewhere.
    [[nodiscard]] std::vector<int> selection_pattern(int layer, int s) const {
        std::vector<int> out(static_cast<std::size_t>(dim[static_cast<std::size_t>(layer)]), 0);
        for (int a : supernodes.at(static_cast<std::size_t>(layer - 1)).at(static_cast<std::size_t>(s))) {
            out[static_cast<std::size_t>(a)] = 1;
        }
        return out;
    }

    /// Flip pattern of relay `layer` in mode k.
    [[nodiscard]] std::vector<int> mode_flip(int layer, int k) const {
        return flip_pattern(layer, mode_map.at(static_cast<std::size_t>(layer - 1)).at(static_cast<std::size_t>(k)));
    }
};

/// Schedule from explicit per-layer supernodes (relay layers 1..N-1).
inline FlipSchedule ff_schedule_from_supernodes(const Dimension& dim,
                                                std::vector<std::vector<std::vector<int>>> supernodes) {
    if (supernodes.size() != static_cast<std::size_t>(dim.hops() - 1)) {
        throw std::invalid_argument("need supernodes for every relay layer");
    }
    FlipSchedule out;
    out.dim = dim;
    out.supernodes = std::move(supernodes);
    for (const auto& layer : out.supernodes) {
        if (layer.empty()) throw std::invalid_argument("relay layer without supernodes");
        out.counts.push_back(static_cast<int>(layer.size()));
        out.modes *= static_cast<int>(layer.size());
    }
    // f_1(k) = ((k-1) mod K_1) + 1 and f_i(k) = (ceil((k-1) / prod_{j<i} K_j) mod K_i) + 1,
    // evaluated with 1-based k and stored 0-based.
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
        std::vector<int> map(static_cast<std::size_t>(out.modes));
        for (int k = 1; k <= out.modes; ++k) {
            const std::int64_t q = (k - 1 + stride - 1) / stride;
            map[static_cast<std::size_t>(k - 1)] = static_cast<int>(q % out.counts[i]);
        }
        out.mode_map.push_back(std::move(map));
        stride *= out.counts[i];
    }
    return out;
}

/// Flip schedule whose relay supernodes are those used by partition `p`.
inline FlipSchedule ff_schedule(const Dimension& dim, const Partition& p) {
    validate(dim, p);
    std::vector<std::vector<std::vector<int>>> layers;
    for (std::size_t i = 1; i + 1 < dim.layers(); ++i) layers.push_back(layer_supernodes(p, i));
    FlipSchedule out = ff_schedule_from_supernodes(dim, std::move(layers));
    out.full_diversity = is_independent(dim, p) && is_full_diversity(dim, p);
    return out;
}

}  // namespace mhdmt

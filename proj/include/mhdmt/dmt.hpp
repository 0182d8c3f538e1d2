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
 * @file dmt.hpp
 * @brief Exact diversity-multiplexing tradeoff curves of multihop channels.
 *
 * Covers the Rayleigh product (equivalently amplify-and-forward) channel,
 * the per-hop cut-set bound, serial decode-and-forward partitions, parallel
 * AF partitions and the flip-and-forward lower bound. Everything here is
 * integer or rational arithmetic; no floating point enters a curve.
 */

#pragma once

#include "mhdmt/dimension.hpp"
#include "mhdmt/dmt_curve.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mhdmt {

/// Per-eigen-exponent costs c_1..c_{n_min}; non-negative and non-increasing.
using DmtCoeffs = std::vector<std::int64_t>;

inline DmtCoeffs coeffs(const Dimension& dim) {
    const std::vector<int> n = dim.ordered();
    const int hops = dim.hops();
    const int n_min = n.front();

    std::vector<std::int64_t> prefix(n.size());
    std::partial_sum(n.begin(), n.end(), prefix.begin());

    DmtCoeffs c(static_cast<std::size_t>(n_min));
    for (int i = 1; i <= n_min; ++i) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (int k = 1; k <= hops; ++k) {
            // numerator is >= n_0 + n_1 - n_min > 0, so '/' is floor division
            best = std::min(best, (prefix[static_cast<std::size_t>(k)] - i) / k);
        }
        c[static_cast<std::size_t>(i - 1)] = 1 - i + best;
    }
    return c;
}

/// DMT of the Rayleigh product channel of this dimension; also the AF DMT.
inline DmtCurve dmt_rp(const Dimension& dim) {
    const DmtCoeffs c = coeffs(dim);
    std::vector<std::int64_t> d(c.size() + 1, 0);
    for (std::size_t k = c.size(); k-- > 0;) d[k] = d[k + 1] + c[k];
    return DmtCurve::from_integer_points(d);
}

inline std::int64_t dmt_rp_at(const Dimension& dim, int k) {
    const DmtCoeffs c = coeffs(dim);
    if (k < 0 || k > static_cast<int>(c.size())) throw std::out_of_range("multiplexing gain out of range");
    return std::accumulate(c.begin() + k, c.end(), std::int64_t{0});
}

/// Point-to-point Rayleigh MIMO: d(k) = (nt - k)(nr - k).
inline DmtCurve dmt_rayleigh(int nt, int nr) {
    if (nt < 1 || nr < 1) throw std::invalid_argument("antenna counts must be positive");
    const int m = std::min(nt, nr);
    std::vector<std::int64_t> d(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) d[static_cast<std::size_t>(k)] = std::int64_t{nt - k} * (nr - k);
    return DmtCurve::from_integer_points(d);
}

/// d_max = min_i n_{i-1} n_i.
inline std::int64_t max_diversity(const Dimension& dim) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int i = 1; i <= dim.hops(); ++i) {
        best = std::min(best, std::int64_t{dim[static_cast<std::size_t>(i - 1)]} * dim[static_cast<std::size_t>(i)]);
    }
    return best;
}

/// r_max = min_i n_i.
inline int max_multiplexing(const Dimension& dim) { return dim.n_min(); }

/// Cut-set bound: pointwise minimum of the per-hop Rayleigh tradeoffs.
inline DmtCurve cutset_bound(const Dimension& dim) {
    DmtCurve out = dmt_rayleigh(dim[0], dim[1]);
    for (int i = 2; i <= dim.hops(); ++i) {
        out = pointwise_min(out, dmt_rayleigh(dim[static_cast<std::size_t>(i - 1)], dim[static_cast<std::size_t>(i)]));
    }
    return out;
}

/// Closed form for the (n, ..., n) channel with `hops` hops.
inline std::int64_t symmetric_diversity(int n, int hops, int k) {
    if (n < 1 || hops < 1) throw std::invalid_argument("n and hop count must be positive");
    if (k < 0 || k > n) throw std::out_of_range("multiplexing gain out of range");
    const std::int64_t a = (n - k) / hops;
    const std::int64_t b = (n - k) % hops;
    // both halves are even: (n-k)(n+1-k) is a product of consecutive integers,
    // and a((a-1)N + 2b) is even because a(a-1) is.
    return (std::int64_t{n - k} * (n + 1 - k) + a * ((a - 1) * hops + 2 * b)) / 2;
}

inline DmtCurve dmt_symmetric(int n, int hops) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) d[static_cast<std::size_t>(k)] = symmetric_diversity(n, hops, k);
    return DmtCurve::from_integer_points(d);
}

/**
 * Condition under which plain AF reaches the cut-set diversity: the two
 * smallest layers are adjacent and every other layer has at least
 * n_0 + n_1 - 1 antennas (ordered counts).
 */
inline bool af_is_diversity_optimal(const Dimension& dim) {
    const std::vector<int> n = dim.ordered();
    if (n.size() > 2 && n[2] + 1 < n[0] + n[1]) return false;
    for (int i = 1; i <= dim.hops(); ++i) {
        const int a = dim[static_cast<std::size_t>(i - 1)];
        const int b = dim[static_cast<std::size_t>(i)];
        if (std::min(a, b) == n[0] && std::max(a, b) == n[1]) return true;
    }
    return false;
}

/// Layers that decode and forward: D_1 < ... < D_m = N.
class DecodeSet {
public:
    DecodeSet() = default;

    DecodeSet(std::vector<int> indices, int hops) : indices_(std::move(indices)) {
        if (indices_.empty() || indices_.back() != hops) {
            throw std::invalid_argument("decode set must end at the destination layer");
        }
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (indices_[i] < 1 || indices_[i] > hops) throw std::invalid_argument("decode layer out of range");
            if (i > 0 && indices_[i] <= indices_[i - 1]) {
                throw std::invalid_argument("decode layers must be strictly increasing");
            }
        }
    }

    [[nodiscard]] const std::vector<int>& indices() const noexcept { return indices_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }

    /// AF segments as (first layer, last layer) pairs, starting at the source.
    [[nodiscard]] std::vector<std::pair<int, int>> segments() const {
        std::vector<std::pair<int, int>> out;
        int prev = 0;
        for (int d : indices_) {
            out.emplace_back(prev, d);
            prev = d;
        }
        return out;
    }

    friend bool operator==(const DecodeSet&, const DecodeSet&) = default;

private:
    std::vector<int> indices_;
};

inline DmtCurve dmt_serial_partition(const Dimension& dim, const DecodeSet& decode) {
    if (decode.size() == 0 || decode.indices().back() != dim.hops()) {
        throw std::invalid_argument("decode set does not match the dimension");
    }
    std::optional<DmtCurve> out;
    for (const auto& [first, last] : decode.segments()) {
        DmtCurve seg = dmt_rp(dim.segment(static_cast<std::size_t>(first), static_cast<std::size_t>(last)));
        out = out ? pointwise_min(*out, seg) : seg;
    }
    return *out;
}

/// Smallest set of decoding layers reaching diversity `target`, chosen greedily
/// as the farthest layer whose AF segment still has diversity >= target.
inline DecodeSet where_to_decode(const Dimension& dim, std::int64_t target) {
    if (target > max_diversity(dim)) throw std::invalid_argument("unachievable diversity");
    const int hops = dim.hops();
    std::vector<int> decode;
    int prev = 0;
    while (prev < hops) {
        int next = prev + 1;  // a single hop always reaches d_max >= target
        for (int cand = hops; cand > prev + 1; --cand) {
            if (dmt_rp_at(dim.segment(static_cast<std::size_t>(prev), static_cast<std::size_t>(cand)), 0) >= target) {
                next = cand;
                break;
            }
        }
        decode.push_back(next);
        prev = next;
    }
    return DecodeSet(std::move(decode), hops);
}

/// d_AF(r) + (d_max - d_AF(0)) (1 - K' r)^+.
inline DmtCurve dmt_ff_lower_bound(const Dimension& dim, int modes) {
    if (modes < 1) throw std::invalid_argument("flip mode count must be positive");
    const DmtCurve af = dmt_rp(dim);
    const Rational gap = Rational(max_diversity(dim)) - af.max_diversity();
    if (gap == Rational(0)) return af;
    const DmtCurve bonus({{Rational(0), gap}, {Rational(1, modes), Rational(0)}});
    return pointwise_sum(af, bonus);
}

/// Tradeoff of a parallel AF scheme. The full curve is only known when every
/// path has the same tradeoff; otherwise only the diversity d(0) is reported.
struct ParallelDmt {
    std::int64_t diversity = 0;
    std::optional<DmtCurve> curve;
};

inline ParallelDmt dmt_parallel_af(const Dimension& dim, const std::vector<Dimension>& paths) {
    if (paths.empty()) throw std::invalid_argument("parallel partition needs at least one path");
    ParallelDmt out;
    std::vector<DmtCurve> curves;
    curves.reserve(paths.size());
    for (const auto& p : paths) {
        if (p.layers() != dim.layers()) throw std::invalid_argument("path length does not match the channel");
        for (std::size_t i = 0; i < p.layers(); ++i) {
            if (p[i] > dim[i]) throw std::invalid_argument("path is wider than its layer");
        }
        curves.push_back(dmt_rp(p));
        const Rational d0 = curves.back().max_diversity();
        out.diversity += d0.numerator();
    }
    const bool identical = std::all_of(curves.begin(), curves.end(),
                                       [&](const DmtCurve& c) { return c == curves.front(); });
    if (identical) out.curve = scaled(curves.front(), static_cast<std::int64_t>(curves.size()));
    return out;
}

}  // namespace mhdmt

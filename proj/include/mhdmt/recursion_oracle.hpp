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
 * @file recursion_oracle.hpp
 * @brief Flow-cost recursion for the Rayleigh product DMT.
 *
 * d(n, k) is the cheapest way to limit the source-destination "flow" to k.
 * Splitting the chain after layer i and letting j >= k flows reach it gives
 *
 *     d((n_0..n_N), k) = min_{j>=k} d((n_0..n_i), j) + d((j, n_{i+1}..n_N), k)
 *
 * with the Rayleigh tradeoff (n_0 - k)(n_1 - k) as the base case. The
 * recursion never touches the closed-form coefficients in dmt.hpp; only
 * cross_check() reads both.
 */

#pragma once

#include "mhdmt/dimension.hpp"
#include "mhdmt/dmt.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mhdmt {

/// Memoised evaluator. One instance is one evaluation context; share across
/// threads only with external synchronisation.
class RecursionOracle {
public:
    /// d(dim, k) by splitting before the last layer.
    std::int64_t diversity(const Dimension& dim, int k) {
        if (k < 0 || k > dim.n_min()) throw std::out_of_range("multiplexing gain out of range");
        return eval(std::vector<int>(dim.counts().begin(), dim.counts().end()), k);
    }

    /// Same quantity via the split after `layer` (1 <= layer <= N-1).
    std::int64_t diversity_split(const Dimension& dim, int layer, int k) {
        if (layer < 1 || layer >= dim.hops()) throw std::out_of_range("split layer must be a relay layer");
        if (k < 0 || k > dim.n_min()) throw std::out_of_range("multiplexing gain out of range");
        const auto c = dim.counts();
        std::vector<int> head(c.begin(), c.begin() + layer + 1);
        std::vector<int> tail(c.begin() + layer, c.end());
        const int top = *std::min_element(head.begin(), head.end());
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (int j = k; j <= top; ++j) {
            tail.front() = j;
            best = std::min(best, eval(head, j) + eval(tail, k));
        }
        return best;
    }

    /// Shift identity: d(n, k) = d(n - k, 0). Empty when some layer has <= k antennas.
    std::optional<std::int64_t> diversity_shifted(const Dimension& dim, int k) {
        std::vector<int> shifted(dim.counts().begin(), dim.counts().end());
        for (int& x : shifted) {
            x -= k;
            if (x <= 0) return std::nullopt;
        }
        return eval(std::move(shifted), 0);
    }

    [[nodiscard]] std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    std::int64_t eval(std::vector<int> n, int k) {
        const int n_min = *std::min_element(n.begin(), n.end());
        if (k >= n_min) return 0;  // also covers degenerate layers with 0 antennas
        if (n.size() == 2) return std::int64_t{n[0] - k} * (n[1] - k);

        std::sort(n.begin(), n.end());
        auto key = std::make_pair(n, k);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int last = n.back();
        std::vector<int> head(n.begin(), n.end() - 1);
        const int top = head.front();
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (int j = k; j <= top; ++j) {
            best = std::min(best, eval(head, j) + std::int64_t{j - k} * (last - k));
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

    std::map<std::pair<std::vector<int>, int>, std::int64_t> memo_;
};

inline std::int64_t dmt_recursive(const Dimension& dim, int k) {
    RecursionOracle oracle;
    return oracle.diversity(dim, k);
}

/// Recursion against the closed form at every integer k, plus the shift
/// identity and split invariance over every relay layer.
inline bool cross_check(const Dimension& dim, RecursionOracle& oracle) {
    const DmtCurve closed = dmt_rp(dim);
    for (int k = 0; k <= dim.n_min(); ++k) {
        const std::int64_t d = oracle.diversity(dim, k);
        if (Rational(d) != closed.at(std::int64_t{k})) return false;
        if (const auto shifted = oracle.diversity_shifted(dim, k); shifted && *shifted != d) return false;
        for (int layer = 1; layer < dim.hops(); ++layer) {
            if (oracle.diversity_split(dim, layer, k) != d) return false;
        }
    }
    return true;
}

inline bool cross_check(const Dimension& dim) {
    RecursionOracle oracle;
    return cross_check(dim, oracle);
}

}  // namespace mhdmt

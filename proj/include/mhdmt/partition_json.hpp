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

#include "mhdmt/partition.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mhdmt {

/**
 * JSON form of a partition:
 *
 *     {"dimension": [2,4,3],
 *      "layers": [[[0,1]], [[0,1],[2,3]], [[0,1,2]]],
 *      "paths": [[0,0,0], [0,1,0]]}
 *
 * layers[i] lists the supernodes of layer i as antenna arrays; each path
 * names one supernode index per layer.
 */
inline nlohmann::json partition_to_json(const Dimension& dim, const Partition& p) {
    validate(dim, p);
    nlohmann::json out;
    out["dimension"] = std::vector<int>(dim.counts().begin(), dim.counts().end());
    std::vector<std::vector<std::vector<int>>> layers;
    for (std::size_t i = 0; i < dim.layers(); ++i) layers.push_back(layer_supernodes(p, i));
    out["layers"] = layers;
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& path : p.paths) {
        std::vector<int> refs;
        for (std::size_t i = 0; i < dim.layers(); ++i) {
            const auto& l = layers[i];
            refs.push_back(static_cast<int>(std::find(l.begin(), l.end(), path.supernodes[i].antennas) - l.begin()));
        }
        paths.push_back(refs);
    }
    out["paths"] = std::move(paths);
    return out;
}

inline std::pair<Dimension, Partition> partition_from_json(const nlohmann::json& j) {
    try {
        Dimension dim(j.at("dimension").get<std::vector<int>>());
        const auto layers = j.at("layers").get<std::vector<std::vector<std::vector<int>>>>();
        if (layers.size() != dim.layers()) throw std::invalid_argument("malformed partition: layer count");
        Partition p;
        for (const auto& refs : j.at("paths").get<std::vector<std::vector<int>>>()) {
            if (refs.size() != dim.layers()) throw std::invalid_argument("malformed partition: path length");
            std::vector<std::vector<int>> sets;
            for (std::size_t i = 0; i < refs.size(); ++i) sets.push_back(layers[i].at(static_cast<std::size_t>(refs[i])));
            p.paths.push_back(AfPath::from_sets(std::move(sets)));
        }
        validate(dim, p);
        return {std::move(dim), std::move(p)};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed partition JSON: ") + e.what());
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("malformed partition JSON: supernode reference out of range");
    }
}

}  // namespace mhdmt

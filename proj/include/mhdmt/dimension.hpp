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

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mhdmt {

/// Antenna counts (n_0, ..., n_N) of a multihop channel, listed from the source
/// layer to the destination layer. A dimension with N+1 entries has N hops.
class Dimension {
public:
    Dimension() = default;

    explicit Dimension(std::vector<int> counts) : counts_(std::move(counts)) {
        if (counts_.size() < 2) {
            throw std::invalid_argument("dimension needs at least a source and a destination layer");
        }
        for (int n : counts_) {
            if (n < 1) {
                throw std::invalid_argument("every layer needs at least one antenna");
            }
        }
    }

    Dimension(std::initializer_list<int> counts) : Dimension(std::vector<int>(counts)) {}

    /// Parses a comma-separated list such as "2,4,3".
    static Dimension parse(std::string_view text) {
        std::vector<int> counts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = std::min(text.find(',', pos), text.size());
            std::string_view field = text.substr(pos, comma - pos);
            while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
            while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
            int value = 0;
            const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
                throw std::invalid_argument("malformed dimension '" + std::string(text) + "'");
            }
            counts.push_back(value);
            pos = comma + 1;
        }
        return Dimension(std::move(counts));
    }

    [[nodiscard]] std::span<const int> counts() const noexcept { return counts_; }
    [[nodiscard]] int operator[](std::size_t layer) const { return counts_.at(layer); }
    [[nodiscard]] std::size_t layers() const noexcept { return counts_.size(); }
    [[nodiscard]] int hops() const noexcept { return static_cast<int>(counts_.size()) - 1; }

    /// Non-decreasing copy of the counts.
    [[nodiscard]] std::vector<int> ordered() const {
        std::vector<int> out = counts_;
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] int n_min() const { return *std::min_element(counts_.begin(), counts_.end()); }
    [[nodiscard]] int n_max() const { return *std::max_element(counts_.begin(), counts_.end()); }

    /// Layers first..last inclusive, as a channel of its own.
    [[nodiscard]] Dimension segment(std::size_t first, std::size_t last) const {
        if (first >= last || last >= counts_.size()) {
            throw std::out_of_range("invalid layer segment");
        }
        return Dimension(std::vector<int>(counts_.begin() + static_cast<std::ptrdiff_t>(first),
                                          counts_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
    }

    [[nodiscard]] std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(counts_[i]);
        }
        return out + ')';
    }

    friend bool operator==(const Dimension&, const Dimension&) = default;

private:
    std::vector<int> counts_;
};

}  // namespace mhdmt

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

#include <vector>

namespace mhdmt::test {

/// Calls f on every dimension with 1..max_hops hops and entries in 1..max_entry.
template <typename F>
void for_each_dimension(int max_entry, int max_hops, F&& f) {
    for (int hops = 1; hops <= max_hops; ++hops) {
        std::vector<int> n(static_cast<std::size_t>(hops) + 1, 1);
        while (true) {
            f(Dimension(n));
            std::size_t i = 0;
            while (i < n.size() && n[i] == max_entry) n[i++] = 1;
            if (i == n.size()) break;
            ++n[i];
        }
    }
}

}  // namespace mhdmt::test

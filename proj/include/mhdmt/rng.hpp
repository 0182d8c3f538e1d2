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
 * @file rng.hpp
 * @brief Counter-based random streams for reproducible parallel Monte Carlo.
 *
 * Stream (seed, trial, lane) starts from a SplitMix64 hash of its key, so any
 * trial can be regenerated without replaying earlier ones and the split of
 * trials across workers never changes a draw.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace mhdmt {

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Stream {
public:
    /// `lane` separates independent uses of one trial (channel, noise, symbols).
    Stream(std::uint64_t seed, std::uint64_t trial, std::uint64_t lane = 0) noexcept
        : state_(mix64(mix64(mix64(seed) + trial) + lane)) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1].
    double uniform() noexcept { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> cgauss() noexcept {
        const double r = std::sqrt(-std::log(uniform()));
        const double phi = 2.0 * std::numbers::pi * uniform();
        return std::polar(r, phi);
    }

private:
    std::uint64_t state_;
};

}  // namespace mhdmt

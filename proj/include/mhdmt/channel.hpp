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
 * @file channel.hpp
 * @brief Rayleigh hop draws and end-to-end channels of the relaying schemes.
 *
 * Every linear scheme is a relay chain
 *
 *     y_N = H_N R_{N-1} H_{N-1} ... R_1 H_1 x_0 + sum_j M_j z_j,
 *     M_j = H_N R_{N-1} ... H_{j+1} R_j,  M_N = I,
 *
 * and differs only in the relay matrices R_i. The source amplitude
 * sqrt(snr / n_0) is applied in mutual_info(), not in the gain.
 */

#pragma once

#include "mhdmt/dimension.hpp"
#include "mhdmt/dmt.hpp"
#include "mhdmt/errors.hpp"
#include "mhdmt/partition.hpp"
#include "mhdmt/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mhdmt {

inline constexpr int kMaxAntennas = 8;

using cplx = std::complex<double>;
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxAntennas, kMaxAntennas>;
using RVector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxAntennas, 1>;

/// H_i has shape n_i x n_{i-1}; hops[0] is H_1.
struct ChannelRealization {
    std::vector<CMatrix> hops;
};

struct EffectiveChannel {
    CMatrix gain;       ///< n_N x n_0
    CMatrix noise_cov;  ///< n_N x n_N, Hermitian, eigenvalues >= 1
};

inline ChannelRealization sample_channel(const Dimension& dim, Stream& rng) {
    if (dim.n_max() > kMaxAntennas) throw std::invalid_argument("at most 8 antennas per layer are supported");
    ChannelRealization out;
    out.hops.reserve(static_cast<std::size_t>(dim.hops()));
    for (std::size_t i = 1; i < dim.layers(); ++i) {
        CMatrix h(dim[i], dim[i - 1]);
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            for (Eigen::Index r = 0; r < h.rows(); ++r) h(r, c) = rng.cgauss();
        }
        out.hops.push_back(std::move(h));
    }
    return out;
}

/// Hops first+1 .. last of a realization, i.e. the channel between layers first and last.
inline ChannelRealization segment(const ChannelRealization& real, int first, int last) {
    if (first < 0 || last <= first || last > static_cast<int>(real.hops.size())) {
        throw std::out_of_range("invalid hop segment");
    }
    return {std::vector<CMatrix>(real.hops.begin() + first, real.hops.begin() + last)};
}

/// Row scaling of a relay that sees `h` with n_in equal-power inputs and forwards on n_out antennas.
inline RVector af_scaling(const CMatrix& h, int n_in, int n_out, double snr) {
    RVector d(h.rows());
    for (Eigen::Index j = 0; j < h.rows(); ++j) {
        d(j) = std::sqrt(1.0 / (snr / n_in * h.row(j).squaredNorm() + 1.0)) * std::sqrt(snr / n_out);
    }
    return d;
}

/// Gain and accumulated noise covariance of a relay chain; relays[i] sits after hops[i].
inline EffectiveChannel relay_chain(const std::vector<CMatrix>& hops, const std::vector<CMatrix>& relays) {
    if (hops.empty() || relays.size() + 1 != hops.size()) throw std::invalid_argument("relay chain shape mismatch");
    EffectiveChannel out;
    out.gain = hops.front();
    for (std::size_t i = 0; i < relays.size(); ++i) out.gain = hops[i + 1] * (relays[i] * out.gain);

    const Eigen::Index n_dst = hops.back().rows();
    out.noise_cov = CMatrix::Identity(n_dst, n_dst);
    CMatrix m = CMatrix::Identity(n_dst, n_dst);
    for (std::size_t j = relays.size(); j-- > 0;) {
        m = (m * hops[j + 1]) * relays[j];
        out.noise_cov.noalias() += m * m.adjoint();
    }
    return out;
}

inline EffectiveChannel af_effective(const ChannelRealization& real, double snr) {
    if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
    std::vector<CMatrix> relays;
    for (std::size_t i = 0; i + 1 < real.hops.size(); ++i) {
        const CMatrix& h = real.hops[i];
        const RVector d = af_scaling(h, static_cast<int>(h.cols()), static_cast<int>(h.rows()), snr);
        relays.emplace_back(d.cast<cplx>().asDiagonal());
    }
    return relay_chain(real.hops, relays);
}

/// Flip-and-forward: mode k multiplies each relay's AF scaling by its flip pattern.
inline std::vector<EffectiveChannel> ff_effective(const ChannelRealization& real, const FlipSchedule& sched, double snr) {
    if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
    if (static_cast<int>(real.hops.size()) != sched.dim.hops()) throw std::invalid_argument("schedule does not match channel");
    std::vector<RVector> base;
    for (std::size_t i = 0; i + 1 < real.hops.size(); ++i) {
        const CMatrix& h = real.hops[i];
        base.push_back(af_scaling(h, static_cast<int>(h.cols()), static_cast<int>(h.rows()), snr));
    }
    std::vector<EffectiveChannel> out;
    out.reserve(static_cast<std::size_t>(sched.modes));
    for (int k = 0; k < sched.modes; ++k) {
        std::vector<CMatrix> relays;
        for (std::size_t i = 0; i < base.size(); ++i) {
            const auto flip = sched.mode_flip(static_cast<int>(i) + 1, k);
            RVector d = base[i];
            for (Eigen::Index j = 0; j < d.size(); ++j) d(j) *= flip[static_cast<std::size_t>(j)];
            relays.emplace_back(d.cast<cplx>().asDiagonal());
        }
        out.push_back(relay_chain(real.hops, relays));
    }
    return out;
}

/**
 * H_N P_{N-1} ... H_1 without power scaling, where P_i is the flip F_{i,f_i(k)}
 * (selection = false) or the 0/1 selection J_{i,f_i(k)} (selection = true).
 */
inline CMatrix raw_mode_product(const ChannelRealization& real, const FlipSchedule& sched, int k, bool selection) {
    CMatrix g = real.hops.front();
    for (std::size_t i = 1; i < real.hops.size(); ++i) {
        const int layer = static_cast<int>(i);
        const int s = sched.mode_map.at(i - 1).at(static_cast<std::size_t>(k));
        const auto pattern = selection ? sched.selection_pattern(layer, s) : sched.flip_pattern(layer, s);
        RVector p(static_cast<Eigen::Index>(pattern.size()));
        for (std::size_t j = 0; j < pattern.size(); ++j) p(static_cast<Eigen::Index>(j)) = pattern[j];
        g = real.hops[i] * (p.cast<cplx>().asDiagonal() * g);
    }
    return g;
}

/**
 * Project-and-forward. Relay i projects onto the column space of the part of
 * H_i fed by the r_{i-1} active antennas upstream (thin QR when n_i > r_{i-1},
 * identity otherwise), scales each of the r_i = min(n_i, r_{i-1}) components as
 * in AF with r_{i-1} inputs and r_i outputs, and transmits on its first r_i antennas.
 */
inline EffectiveChannel pf_effective(const ChannelRealization& real, double snr) {
    if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
    std::vector<CMatrix> relays;
    Eigen::Index r_prev = real.hops.front().cols();
    for (std::size_t i = 0; i + 1 < real.hops.size(); ++i) {
        const Eigen::Index n = real.hops[i].rows();
        const CMatrix h = real.hops[i].leftCols(r_prev);
        CMatrix q;
        CMatrix g;
        Eigen::Index r = n;
        if (n > r_prev) {
            Eigen::HouseholderQR<CMatrix> qr(h);
            q = qr.householderQ() * CMatrix::Identity(n, r_prev);
            g = q.adjoint() * h;
            r = r_prev;
        } else {
            q = CMatrix::Identity(n, n);
            g = h;
        }
        const RVector d = af_scaling(g, static_cast<int>(r_prev), static_cast<int>(r), snr);
        CMatrix relay = CMatrix::Zero(n, n);
        relay.topRows(r) = d.cast<cplx>().asDiagonal() * q.adjoint();
        relays.push_back(std::move(relay));
        r_prev = r;
    }
    return relay_chain(real.hops, relays);
}

/**
 * Relays with transmit and receive CSI on an (n, ..., n) channel. With
 * H_i = U_i S_i V_i^H, relay i applies V_{i+1} D_i U_i^H so the chain collapses
 * to U_N S_N D_{N-1} ... D_1 S_1 V_1^H with singular values matched in order.
 * D_i scales stream j as AF would scale a row of power sigma_{i,j}^2.
 */
inline EffectiveChannel svd_align_effective(const ChannelRealization& real, double snr) {
    if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
    const Eigen::Index n = real.hops.front().cols();
    for (const auto& h : real.hops) {
        if (h.rows() != n || h.cols() != n) throw std::invalid_argument("singular-vector alignment needs square hops");
    }
    std::vector<Eigen::JacobiSVD<CMatrix>> svds;
    for (const auto& h : real.hops) svds.emplace_back(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    std::vector<CMatrix> relays;
    for (std::size_t i = 0; i + 1 < real.hops.size(); ++i) {
        const auto& s = svds[i].singularValues();
        RVector d(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            d(j) = std::sqrt(1.0 / (snr / static_cast<double>(n) * s(j) * s(j) + 1.0)) * std::sqrt(snr / static_cast<double>(n));
        }
        relays.emplace_back(svds[i + 1].matrixV() * d.cast<cplx>().asDiagonal() * svds[i].matrixU().adjoint());
    }
    return relay_chain(real.hops, relays);
}

/// Sub-realization seen by one AF path: rows and columns of its supernodes.
inline ChannelRealization path_realization(const ChannelRealization& real, const AfPath& path) {
    ChannelRealization out;
    for (std::size_t i = 0; i < real.hops.size(); ++i) {
        const auto& rows = path.supernodes.at(i + 1).antennas;
        const auto& cols = path.supernodes.at(i).antennas;
        CMatrix h(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = real.hops[i](rows[r], cols[c]);
            }
        }
        out.hops.push_back(std::move(h));
    }
    return out;
}

/// One AF channel per path, normalised with the path's own antenna counts.
inline std::vector<EffectiveChannel> parallel_af_effective(const ChannelRealization& real, const Partition& p, double snr) {
    std::vector<EffectiveChannel> out;
    out.reserve(p.size());
    for (const auto& path : p.paths) out.push_back(af_effective(path_realization(real, path), snr));
    return out;
}

/// log2 det(I + (snr/n0) K_z^{-1} G G^H), through Cholesky factors of K_z and of the result.
inline double mutual_info(const EffectiveChannel& eff, double snr, int n0) {
    if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
    Eigen::LLT<CMatrix> kz(eff.noise_cov);
    if (kz.info() != Eigen::Success) throw NumericalError("noise covariance is not positive definite");
    const CMatrix a = kz.matrixL().solve(eff.gain);
    CMatrix m = CMatrix::Identity(a.rows(), a.rows());
    m.noalias() += (snr / n0) * (a * a.adjoint());
    Eigen::LLT<CMatrix> f(m);
    if (f.info() != Eigen::Success) throw NumericalError("mutual information factorization failed");
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) logdet += std::log2(std::real(f.matrixLLT()(i, i)));
    return 2.0 * logdet;
}

/// Serial DF: the segment ending at each decoding layer is an AF channel of its own.
inline double df_mutual_info(const ChannelRealization& real, const DecodeSet& decode, double snr) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [first, last] : decode.segments()) {
        const ChannelRealization seg = segment(real, first, last);
        worst = std::min(worst, mutual_info(af_effective(seg, snr), snr, static_cast<int>(seg.hops.front().cols())));
    }
    return worst;
}

inline bool df_outage(const ChannelRealization& real, const DecodeSet& decode, double snr, double rate) {
    if (decode.indices().back() != static_cast<int>(real.hops.size())) {
        throw std::invalid_argument("decode set does not match the channel");
    }
    return df_mutual_info(real, decode, snr) < rate;
}

}  // namespace mhdmt

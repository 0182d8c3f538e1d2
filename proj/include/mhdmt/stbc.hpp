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
 * @file stbc.hpp
 * @brief 2x2 space-time codes over QAM: Alamouti, Golden and the two-block
 *        parallel Golden code, with NVD search, ML decoding and SER runs.
 *
 * Code entries are kept exact as u + v*theta with u, v in Z[zeta8] on the
 * power basis (1, zeta8, zeta8^2, zeta8^3), theta = (1 + sqrt 5) / 2. An entry
 * flagged `bar` is evaluated at theta_bar = (1 - sqrt 5) / 2 instead.
 * Floating point only appears when an entry is turned into a complex number.
 */

#pragma once

#include "mhdmt/channel.hpp"
#include "mhdmt/outage.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mhdmt {

/// Element of Z[zeta8], zeta8 = exp(i pi / 4), zeta8^4 = -1.
struct Zeta8 {
    std::array<std::int64_t, 4> c{};

    static Zeta8 gaussian(std::int64_t re, std::int64_t im) { return {{re, 0, im, 0}}; }

    static Zeta8 zeta(int power) {
        power = ((power % 8) + 8) % 8;
        Zeta8 z;
        z.c[static_cast<std::size_t>(power % 4)] = power < 4 ? 1 : -1;
        return z;
    }

    friend Zeta8 operator+(Zeta8 a, const Zeta8& b) {
        for (std::size_t i = 0; i < 4; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend Zeta8 operator-(Zeta8 a, const Zeta8& b) {
        for (std::size_t i = 0; i < 4; ++i) a.c[i] -= b.c[i];
        return a;
    }
    Zeta8 operator-() const { return Zeta8{} - *this; }
    friend Zeta8 operator*(const Zeta8& a, const Zeta8& b) {
        Zeta8 out;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                const std::int64_t p = a.c[i] * b.c[j];
                if (i + j < 4) {
                    out.c[i + j] += p;
                } else {
                    out.c[i + j - 4] -= p;
                }
            }
        }
        return out;
    }
    friend bool operator==(const Zeta8&, const Zeta8&) = default;

    /// Complex conjugate: zeta8 -> zeta8^-1 = -zeta8^3.
    [[nodiscard]] Zeta8 conj() const { return {{c[0], -c[3], -c[2], -c[1]}}; }
    /// The Galois map zeta8 -> -zeta8 fixing Q(i).
    [[nodiscard]] Zeta8 tau() const { return {{c[0], -c[1], c[2], -c[3]}}; }
    [[nodiscard]] bool is_zero() const { return c == std::array<std::int64_t, 4>{}; }

    [[nodiscard]] cplx value() const {
        const double h = std::numbers::sqrt2 / 2.0;
        const auto a = static_cast<double>(c[0]);
        const auto b = static_cast<double>(c[1]);
        const auto g = static_cast<double>(c[2]);
        const auto d = static_cast<double>(c[3]);
        return {a + h * (b - d), g + h * (b + d)};
    }
};

/// u + v*theta, or u + v*theta_bar when `bar`.
struct CodeEntry {
    Zeta8 u;
    Zeta8 v;
    bool bar = false;

    friend CodeEntry operator-(const CodeEntry& a, const CodeEntry& b) {
        if (a.bar != b.bar) throw std::logic_error("mixed theta conjugates");
        return {a.u - b.u, a.v - b.v, a.bar};
    }
    friend bool operator==(const CodeEntry&, const CodeEntry&) = default;

    [[nodiscard]] cplx value() const {
        const double th = bar ? (1.0 - std::sqrt(5.0)) / 2.0 : (1.0 + std::sqrt(5.0)) / 2.0;
        return u.value() + th * v.value();
    }
};

/// Row-major 2x2 block; one per sub-channel.
using ExactBlock = std::array<CodeEntry, 4>;
using ExactWord = std::vector<ExactBlock>;

inline CMatrix to_matrix(const ExactBlock& b) {
    CMatrix m(2, 2);
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = b[static_cast<std::size_t>(i)].value();
    return m;
}

inline ExactWord difference(const ExactWord& a, const ExactWord& b) {
    ExactWord out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t e = 0; e < 4; ++e) out[k][e] = a[k][e] - b[k][e];
    }
    return out;
}

struct QamAlphabet {
    int order = 4;
    std::vector<std::pair<int, int>> points;  ///< odd integer coordinates

    [[nodiscard]] double mean_energy() const {
        double e = 0.0;
        for (const auto& [x, y] : points) e += x * x + y * y;
        return e / static_cast<double>(points.size());
    }
};

inline QamAlphabet qam(int order) {
    int side = 0;
    if (order == 4) side = 2;
    if (order == 16) side = 4;
    if (side == 0) throw std::invalid_argument("QAM order must be 4 or 16");
    QamAlphabet q;
    q.order = order;
    for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) q.points.emplace_back(2 * a - side + 1, 2 * b - side + 1);
    }
    return q;
}

/// Gaussian integers with even coordinates in [-bound, bound]; bound 2 holds every 4-QAM difference.
inline std::vector<Zeta8> difference_alphabet(int bound) {
    if (bound < 2 || bound % 2 != 0) throw std::invalid_argument("difference bound must be even and at least 2");
    std::vector<Zeta8> out;
    for (int x = -bound; x <= bound; x += 2) {
        for (int y = -bound; y <= bound; y += 2) out.push_back(Zeta8::gaussian(x, y));
    }
    return out;
}

struct Codebook {
    std::string name;
    int K = 1;
    int symbols = 0;  ///< QAM symbols per codeword
    QamAlphabet alphabet;
    std::function<ExactWord(const std::vector<Zeta8>&)> build;
    bool linear = true;  ///< build(a) - build(b) == build(a - b)
    std::vector<std::vector<CMatrix>> words;  ///< unnormalized, words[c][k]
    double norm = 1.0;                        ///< words[c][k] * norm has E|x|^2 = 1 per entry

    [[nodiscard]] std::size_t size() const { return words.size(); }
    /// Symbols per channel use.
    [[nodiscard]] double rate() const { return static_cast<double>(symbols) / (2.0 * K); }
    [[nodiscard]] double bits_per_channel_use() const { return rate() * std::log2(static_cast<double>(alphabet.order)); }

    [[nodiscard]] std::vector<Zeta8> symbols_of(std::size_t index) const {
        std::vector<Zeta8> out;
        const std::size_t m = alphabet.points.size();
        for (int s = 0; s < symbols; ++s) {
            const auto& [x, y] = alphabet.points[index % m];
            out.push_back(Zeta8::gaussian(x, y));
            index /= m;
        }
        return out;
    }
    [[nodiscard]] ExactWord exact(std::size_t index) const { return build(symbols_of(index)); }
};

namespace detail {

inline Codebook finish(Codebook cb) {
    std::size_t count = 1;
    for (int s = 0; s < cb.symbols; ++s) count *= cb.alphabet.points.size();
    cb.words.reserve(count);
    double energy = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<CMatrix> w;
        for (const auto& b : cb.exact(c)) {
            w.push_back(to_matrix(b));
            energy += w.back().squaredNorm();
        }
        cb.words.push_back(std::move(w));
    }
    cb.norm = std::sqrt(4.0 * static_cast<double>(count * static_cast<std::size_t>(cb.K)) / energy);
    return cb;
}

/// x * y for y = y0 + y1 theta, reduced with theta^2 = theta + 1.
inline CodeEntry mul(const CodeEntry& x, const CodeEntry& y) {
    const Zeta8 vv = x.v * y.v;
    return {x.u * y.u + vv, x.u * y.v + x.v * y.u + vv, x.bar};
}

}  // namespace detail

/// [[s1, -conj(s2)], [s2, conj(s1)]].
inline Codebook alamouti(const QamAlphabet& q) {
    Codebook cb;
    cb.name = "alamouti";
    cb.K = 1;
    cb.symbols = 2;
    cb.alphabet = q;
    cb.build = [](const std::vector<Zeta8>& s) {
        ExactBlock b;
        b[0] = {s[0], {}, false};
        b[1] = {-s[1].conj(), {}, false};
        b[2] = {s[1], {}, false};
        b[3] = {s[0].conj(), {}, false};
        return ExactWord{b};
    };
    return detail::finish(std::move(cb));
}

/**
 * Golden code (m = 0, gamma = i) or its two-block parallel version (m = 1,
 * gamma = zeta8, second block is the image under zeta8 -> -zeta8). The four
 * information symbols a, b, c, d are QAM points in Z[i].
 */
inline Codebook golden(const QamAlphabet& q, int m) {
    if (m != 0 && m != 1) throw std::invalid_argument("golden code supports m = 0 or m = 1");
    Codebook cb;
    cb.name = m == 0 ? "golden" : "golden-parallel";
    cb.K = m == 0 ? 1 : 2;
    cb.symbols = 4;
    cb.alphabet = q;
    cb.build = [m](const std::vector<Zeta8>& s) {
        const Zeta8 gamma = m == 0 ? Zeta8::zeta(2) : Zeta8::zeta(1);
        // alpha = 1 + i - i theta
        const CodeEntry alpha{Zeta8::gaussian(1, 1), Zeta8::gaussian(0, -1), false};
        const CodeEntry ab = detail::mul(alpha, {s[0], s[1], false});
        const CodeEntry cd = detail::mul(alpha, {s[2], s[3], false});
        ExactBlock x;
        x[0] = ab;
        x[1] = cd;
        x[2] = {gamma * cd.u, gamma * cd.v, true};
        x[3] = {ab.u, ab.v, true};
        ExactWord w{x};
        if (m == 1) {
            ExactBlock y;
            for (std::size_t e = 0; e < 4; ++e) y[e] = {x[e].u.tau(), x[e].v.tau(), x[e].bar};
            w.push_back(y);
        }
        return w;
    };
    return detail::finish(std::move(cb));
}

namespace detail {

/// The same number written with theta: u + v theta_bar = (u + v) - v theta.
inline CodeEntry plain(const CodeEntry& x) { return x.bar ? CodeEntry{x.u + x.v, -x.v, false} : x; }

/// Exact x * y, using theta theta_bar = -1 for mixed factors.
inline CodeEntry times(const CodeEntry& x, const CodeEntry& y) {
    if (x.bar == y.bar) {
        CodeEntry p = mul({x.u, x.v, false}, {y.u, y.v, false});
        p.bar = x.bar;
        return p;
    }
    const CodeEntry& a = x.bar ? y : x;
    const CodeEntry& b = x.bar ? x : y;
    return {a.u * b.u - a.v * b.v + a.u * b.v, a.v * b.u - a.u * b.v, false};
}

}  // namespace detail

/// Exact determinant of a 2x2 block, written with theta.
inline CodeEntry exact_determinant(const ExactBlock& b) {
    return detail::plain(detail::times(b[0], b[3])) - detail::plain(detail::times(b[1], b[2]));
}

/// prod_k |det(dX_k dX_k^H)| = prod_k |det dX_k|^2, exact until the final evaluation.
inline double product_determinant(const ExactWord& w) {
    CodeEntry p{Zeta8::gaussian(1, 0), {}, false};
    for (const auto& b : w) {
        const CodeEntry d = exact_determinant(b);
        p = detail::mul(p, detail::mul(d, {d.u.conj(), d.v.conj(), false}));
    }
    return std::real(p.value());
}

struct NvdResult {
    double min = std::numeric_limits<double>::infinity();
    std::vector<Zeta8> argmin;  ///< difference symbols; empty when found by pairs
    std::pair<std::size_t, std::size_t> pair{0, 0};
    std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kNvdEvaluationCap = 1000000;

/**
 * Minimum product determinant over nonzero difference tuples drawn from
 * `diffs`. A codebook that is not linear is searched over all codeword pairs
 * instead. Either way more than kNvdEvaluationCap evaluations is an error.
 */
inline NvdResult verify_nvd(const Codebook& cb, const std::vector<Zeta8>& diffs) {
    NvdResult r;
    if (!cb.linear) {
        const std::uint64_t pairs = static_cast<std::uint64_t>(cb.size()) * (cb.size() - 1) / 2;
        if (pairs > kNvdEvaluationCap) throw std::length_error("NVD pair search exceeds the evaluation cap");
        for (std::size_t a = 0; a < cb.size(); ++a) {
            for (std::size_t b = a + 1; b < cb.size(); ++b) {
                const double v = product_determinant(difference(cb.exact(a), cb.exact(b)));
                ++r.evaluations;
                if (v < r.min) {
                    r.min = v;
                    r.pair = {a, b};
                }
            }
        }
        return r;
    }
    double total = 1.0;
    for (int s = 0; s < cb.symbols; ++s) total *= static_cast<double>(diffs.size());
    if (total - 1.0 > static_cast<double>(kNvdEvaluationCap)) throw std::length_error("NVD search exceeds the evaluation cap");
    std::vector<Zeta8> tuple(static_cast<std::size_t>(cb.symbols));
    for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(total); ++n) {
        bool zero = true;
        std::uint64_t rest = n;
        for (auto& t : tuple) {
            t = diffs[rest % diffs.size()];
            rest /= diffs.size();
            zero = zero && t.is_zero();
        }
        if (zero) continue;
        const double v = product_determinant(cb.build(tuple));
        ++r.evaluations;
        if (v < r.min) {
            r.min = v;
            r.argmin = tuple;
        }
    }
    return r;
}

/**
 * Rows of the K blocks stacked into a 2K x 2 matrix, then cut into
 * sub-channel blocks of the given row counts (for partitions whose paths
 * differ in size).
 */
struct StackedCode {
    const Codebook* base = nullptr;
    std::vector<int> rows;

    [[nodiscard]] std::vector<CMatrix> split(const ExactWord& w) const {
        CMatrix s(2 * static_cast<Eigen::Index>(w.size()), 2);
        for (std::size_t k = 0; k < w.size(); ++k) s.middleRows(2 * static_cast<Eigen::Index>(k), 2) = to_matrix(w[k]);
        std::vector<CMatrix> out;
        Eigen::Index at = 0;
        for (int r : rows) {
            out.emplace_back(s.middleRows(at, r));
            at += r;
        }
        return out;
    }
};

inline StackedCode block_stacked(const Codebook& base, std::vector<int> rows) {
    int total = 0;
    for (int r : rows) {
        if (r < 1) throw std::invalid_argument("stacked blocks need at least one row");
        total += r;
    }
    if (total != 2 * base.K) throw std::invalid_argument("stacked rows must add up to 2K");
    return {&base, std::move(rows)};
}

/// min det(sum_k dY_k^H dY_k) over nonzero differences; positive iff the stack keeps full rank.
inline double stacked_min_determinant(const StackedCode& code, const std::vector<Zeta8>& diffs) {
    double best = std::numeric_limits<double>::infinity();
    const auto& cb = *code.base;
    std::vector<std::size_t> digit(static_cast<std::size_t>(cb.symbols), 0);
    std::vector<Zeta8> tuple(digit.size());
    double total = 1.0;
    for (int s = 0; s < cb.symbols; ++s) total *= static_cast<double>(diffs.size());
    if (total > static_cast<double>(kNvdEvaluationCap)) throw std::length_error("NVD search exceeds the evaluation cap");
    for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(total); ++n) {
        bool zero = true;
        std::uint64_t rest = n;
        for (auto& t : tuple) {
            t = diffs[rest % diffs.size()];
            rest /= diffs.size();
            zero = zero && t.is_zero();
        }
        if (zero) continue;
        CMatrix gram = CMatrix::Zero(2, 2);
        for (const auto& y : code.split(cb.build(tuple))) gram += y.adjoint() * y;
        best = std::min(best, std::abs(gram.determinant()));
    }
    return best;
}

/**
 * Exhaustive ML over a codebook for fixed sub-channels. Each sub-channel is
 * whitened with the Cholesky factor of its noise covariance; ties go to the
 * lowest codeword index.
 */
class MlDecoder {
public:
    MlDecoder(const std::vector<EffectiveChannel>& eff, const Codebook& cb, double snr, bool whiten = true) : cb_(&cb) {
        if (static_cast<int>(eff.size()) != cb.K) throw std::invalid_argument("sub-channel count does not match the code");
        for (const auto& e : eff) {
            if (e.gain.cols() != 2) throw std::invalid_argument("codes need two transmit antennas");
            CMatrix a = std::sqrt(snr / 2.0) * cb.norm * e.gain;
            if (whiten) {
                Eigen::LLT<CMatrix> llt(e.noise_cov);
                if (llt.info() != Eigen::Success) throw NumericalError("noise covariance is not positive definite");
                whiteners_.push_back(llt.matrixL());
                a = llt.matrixL().solve(a);
            } else {
                whiteners_.push_back(CMatrix::Identity(e.gain.rows(), e.gain.rows()));
            }
            gains_.push_back(std::move(a));
        }
    }

    [[nodiscard]] std::size_t decode(const std::vector<CMatrix>& received) const {
        if (received.size() != gains_.size()) throw std::invalid_argument("received block count does not match the code");
        std::vector<CMatrix> y;
        for (std::size_t k = 0; k < received.size(); ++k) {
            y.push_back(whiteners_[k].triangularView<Eigen::Lower>().solve(received[k]));
        }
        std::size_t best = 0;
        double best_metric = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cb_->size(); ++c) {
            double metric = 0.0;
            for (std::size_t k = 0; k < y.size() && metric < best_metric; ++k) {
                metric += (y[k] - gains_[k] * cb_->words[c][k]).squaredNorm();
            }
            if (metric < best_metric) {
                best_metric = metric;
                best = c;
            }
        }
        return best;
    }

private:
    const Codebook* cb_;
    std::vector<CMatrix> whiteners_;
    std::vector<CMatrix> gains_;
};

inline std::size_t ml_decode(const std::vector<CMatrix>& received, const std::vector<EffectiveChannel>& eff, const Codebook& cb,
                             double snr) {
    return MlDecoder(eff, cb, snr).decode(received);
}

/// The sub-channels a scheme offers a K-block code, in block order.
inline std::vector<EffectiveChannel> code_subchannels(const SchemeConfig& cfg, const ChannelRealization& real, double snr) {
    switch (cfg.scheme) {
        case Scheme::af: return {af_effective(real, snr)};
        case Scheme::pf: return {pf_effective(real, snr)};
        case Scheme::svd_align: return {svd_align_effective(real, snr)};
        case Scheme::ff: return ff_effective(real, cfg.schedule, snr);
        case Scheme::parallel_af: return parallel_af_effective(real, cfg.partition, snr);
        case Scheme::df: break;
    }
    throw std::invalid_argument("decode-and-forward has no linear end-to-end channel for a code");
}

inline int code_subchannel_count(const Dimension& dim, const SchemeConfig& cfg) {
    switch (cfg.scheme) {
        case Scheme::af:
        case Scheme::pf:
        case Scheme::svd_align: return 1;
        case Scheme::ff: return cfg.schedule.modes;
        case Scheme::parallel_af: {
            for (const auto& p : cfg.partition.paths) {
                if (p.supernodes.front().antennas.size() != 2) throw std::invalid_argument("coded paths need two source antennas");
            }
            return static_cast<int>(cfg.partition.size());
        }
        case Scheme::df: break;
    }
    (void)dim;
    throw std::invalid_argument("decode-and-forward has no linear end-to-end channel for a code");
}

/**
 * Codeword error rate per SNR point. Trial t draws its channel, codeword and
 * noise from Stream(seed, t, 0/1/2); the same draw serves every SNR point.
 * Noise on sub-channel k is L_k z_k with K_z = L_k L_k^H.
 */
inline std::vector<OutageEstimate> simulate_ser(const Dimension& dim, const SchemeConfig& cfg, const Codebook& cb,
                                                const std::vector<double>& snr_db, std::uint64_t trials, std::uint64_t seed,
                                                unsigned workers = 1, bool with_noise = true) {
    if (dim[0] != 2) throw std::invalid_argument("codes need two source antennas");
    if (code_subchannel_count(dim, cfg) != cb.K) throw std::invalid_argument("code block count does not match the scheme");
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (snr_db.empty()) throw std::invalid_argument("empty SNR grid");
    const auto counts = run_trials(trials, workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> errors(snr_db.size(), 0);
        for (std::uint64_t t = begin; t < end; ++t) {
            Stream channel_rng(seed, t, 0);
            const ChannelRealization real = sample_channel(dim, channel_rng);
            Stream symbol_rng(seed, t, 1);
            const std::size_t sent = symbol_rng.below(cb.size());
            Stream noise_rng(seed, t, 2);
            std::vector<CMatrix> z;
            for (int k = 0; k < cb.K; ++k) {
                CMatrix zk(dim[dim.layers() - 1], 2);
                for (Eigen::Index c = 0; c < 2; ++c) {
                    for (Eigen::Index r = 0; r < zk.rows(); ++r) zk(r, c) = with_noise ? noise_rng.cgauss() : cplx{};
                }
                z.push_back(std::move(zk));
            }
            for (std::size_t i = 0; i < snr_db.size(); ++i) {
                const double snr = db_to_linear(snr_db[i]);
                const auto eff = code_subchannels(cfg, real, snr);
                std::vector<CMatrix> y;
                for (std::size_t k = 0; k < eff.size(); ++k) {
                    // Sub-channels of a parallel partition may end on fewer antennas.
                    const Eigen::LLT<CMatrix> l(eff[k].noise_cov);
                    y.push_back(std::sqrt(snr / 2.0) * cb.norm * eff[k].gain * cb.words[sent][k] +
                                CMatrix(l.matrixL()) * z[k].topRows(eff[k].gain.rows()));
                }
                if (MlDecoder(eff, cb, snr).decode(y) != sent) ++errors[i];
            }
        }
        return errors;
    });
    std::vector<OutageEstimate> out;
    for (std::size_t i = 0; i < snr_db.size(); ++i) {
        out.push_back(make_estimate(snr_db[i], cb.bits_per_channel_use(), trials, counts[i]));
    }
    return out;
}

/// Alphabet plus the exact generator: the blocks produced by symbol 1 and by symbol i in each slot.
inline nlohmann::json codebook_to_json(const Codebook& cb) {
    auto entry = [](const CodeEntry& e) {
        return nlohmann::json{{"u", e.u.c}, {"v", e.v.c}, {"theta", e.bar ? "bar" : "plain"}};
    };
    nlohmann::json gen = nlohmann::json::array();
    for (int s = 0; s < cb.symbols; ++s) {
        nlohmann::json unit;
        for (const auto& [label, value] : {std::pair{"1", Zeta8::gaussian(1, 0)}, std::pair{"i", Zeta8::gaussian(0, 1)}}) {
            std::vector<Zeta8> sym(static_cast<std::size_t>(cb.symbols), Zeta8{});
            sym[static_cast<std::size_t>(s)] = value;
            nlohmann::json blocks = nlohmann::json::array();
            for (const auto& b : cb.build(sym)) {
                nlohmann::json block = nlohmann::json::array();
                for (const auto& e : b) block.push_back(entry(e));
                blocks.push_back(std::move(block));
            }
            unit[label] = std::move(blocks);
        }
        gen.push_back(std::move(unit));
    }
    std::vector<std::array<int, 2>> points;
    for (const auto& [x, y] : cb.alphabet.points) points.push_back({x, y});
    return {{"name", cb.name},
            {"blocks", cb.K},
            {"symbols", cb.symbols},
            {"qam_order", cb.alphabet.order},
            {"alphabet", points},
            {"basis", "u + v*theta, u and v on (1, zeta8, zeta8^2, zeta8^3); theta=(1+sqrt5)/2, bar: (1-sqrt5)/2"},
            {"real_linear", true},
            {"generator", std::move(gen)},
            {"norm", cb.norm},
            {"codewords", cb.size()}};
}

}  // namespace mhdmt

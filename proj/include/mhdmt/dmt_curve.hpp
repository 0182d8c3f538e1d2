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

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhdmt {

// Compare against Rational operands only: boost's mixed rational/int
// comparisons recurse under C++20 rewritten operators.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

struct Vertex {
    Rational r;  ///< multiplexing gain
    Rational d;  ///< diversity gain
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/**
 * Piecewise-linear tradeoff curve d(r) stored exactly.
 *
 * Vertices are sorted by strictly increasing r, start at r = 0 and end at
 * r_max with d = 0. Between vertices the curve is linear; below 0 it is
 * clamped to d(0) and beyond r_max it is 0. Vertex values may be rational
 * when the curve comes from a pointwise minimum or a positive-part term.
 */
class DmtCurve {
public:
    DmtCurve() : vertices_{{Rational(0), Rational(0)}} {}

    explicit DmtCurve(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty() || vertices_.front().r != Rational(0)) {
            throw std::invalid_argument("DMT curve must start at r = 0");
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].d < Rational(0)) throw std::invalid_argument("negative diversity");
            if (i > 0) {
                if (vertices_[i].r <= vertices_[i - 1].r) {
                    throw std::invalid_argument("DMT vertices must have increasing r");
                }
                if (vertices_[i].d > vertices_[i - 1].d) {
                    throw std::invalid_argument("DMT curve must be non-increasing");
                }
            }
        }
        if (vertices_.back().d != Rational(0)) throw std::invalid_argument("DMT curve must end at d = 0");
        // Trailing zeros carry no information.
        while (vertices_.size() > 1 && vertices_[vertices_.size() - 2].d == Rational(0)) {
            vertices_.pop_back();
        }
    }

    /// Curve through (k, d[k]) for k = 0..d.size()-1.
    static DmtCurve from_integer_points(std::span<const std::int64_t> d) {
        std::vector<Vertex> v;
        v.reserve(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) {
            v.push_back({Rational(static_cast<std::int64_t>(k)), Rational(d[k])});
        }
        return DmtCurve(std::move(v));
    }

    [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] Rational max_diversity() const { return vertices_.front().d; }
    [[nodiscard]] Rational max_multiplexing() const { return vertices_.back().r; }

    [[nodiscard]] Rational at(const Rational& r) const {
        if (r <= Rational(0)) return vertices_.front().d;
        if (r >= vertices_.back().r) return Rational(0);
        const auto hi = std::upper_bound(vertices_.begin(), vertices_.end(), r,
                                         [](const Rational& x, const Vertex& v) { return x < v.r; });
        const auto lo = hi - 1;
        if (lo->r == r) return lo->d;
        return lo->d + (hi->d - lo->d) * (r - lo->r) / (hi->r - lo->r);
    }

    [[nodiscard]] double at(double r) const {
        if (r <= 0.0) return to_double(vertices_.front().d);
        if (r >= to_double(vertices_.back().r)) return 0.0;
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            const double r1 = to_double(vertices_[i].r);
            if (r <= r1) {
                const double r0 = to_double(vertices_[i - 1].r);
                const double d0 = to_double(vertices_[i - 1].d);
                const double d1 = to_double(vertices_[i].d);
                return d0 + (d1 - d0) * (r - r0) / (r1 - r0);
            }
        }
        return 0.0;
    }

    [[nodiscard]] Rational at(std::int64_t k) const { return at(Rational(k)); }

    [[nodiscard]] std::vector<Rational> breakpoints() const {
        std::vector<Rational> out;
        out.reserve(vertices_.size());
        for (const auto& v : vertices_) out.push_back(v.r);
        return out;
    }

    /// Equality as functions of r (vertex lists may differ by collinear points).
    friend bool operator==(const DmtCurve& a, const DmtCurve& b) {
        for (const auto& v : a.vertices_) {
            if (b.at(v.r) != v.d) return false;
        }
        for (const auto& v : b.vertices_) {
            if (a.at(v.r) != v.d) return false;
        }
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const DmtCurve& c) {
        for (std::size_t i = 0; i < c.vertices_.size(); ++i) {
            if (i) os << ' ';
            os << '(' << to_string(c.vertices_[i].r) << ',' << to_string(c.vertices_[i].d) << ')';
        }
        return os;
    }

private:
    std::vector<Vertex> vertices_;
};

namespace detail {

inline std::vector<Rational> merged_breakpoints(const DmtCurve& a, const DmtCurve& b) {
    std::vector<Rational> xs = a.breakpoints();
    const auto bx = b.breakpoints();
    xs.insert(xs.end(), bx.begin(), bx.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

inline DmtCurve curve_from_samples(const std::vector<Rational>& xs, const std::vector<Rational>& ds) {
    std::vector<Vertex> v;
    v.reserve(xs.size() + 1);
    for (std::size_t i = 0; i < xs.size(); ++i) v.push_back({xs[i], ds[i]});
    if (v.back().d != Rational(0)) {
        throw std::logic_error("combined curve does not reach zero");
    }
    // Drop interior vertices that are collinear with their neighbours unless they sit on an integer r.
    std::vector<Vertex> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && i + 1 < v.size() && v[i].r.denominator() != 1) {
            const Vertex& p = out.back();
            const Vertex& n = v[i + 1];
            if ((v[i].d - p.d) * (n.r - p.r) == (n.d - p.d) * (v[i].r - p.r)) continue;
        }
        out.push_back(v[i]);
    }
    return DmtCurve(std::move(out));
}

}  // namespace detail

/// Pointwise minimum, exact: crossing points between breakpoints become new vertices.
inline DmtCurve pointwise_min(const DmtCurve& a, const DmtCurve& b) {
    const auto xs = detail::merged_breakpoints(a, b);
    std::vector<Rational> grid;
    grid.reserve(xs.size() * 2);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            const Rational ga = a.at(xs[i - 1]) - b.at(xs[i - 1]);
            const Rational gb = a.at(xs[i]) - b.at(xs[i]);
            if ((ga < Rational(0) && gb > Rational(0)) || (ga > Rational(0) && gb < Rational(0))) {
                grid.push_back(xs[i - 1] + (xs[i] - xs[i - 1]) * ga / (ga - gb));
            }
        }
        grid.push_back(xs[i]);
    }
    std::vector<Rational> ds;
    ds.reserve(grid.size());
    for (const auto& x : grid) ds.push_back(std::min(a.at(x), b.at(x)));
    return detail::curve_from_samples(grid, ds);
}

inline DmtCurve pointwise_sum(const DmtCurve& a, const DmtCurve& b) {
    const auto xs = detail::merged_breakpoints(a, b);
    std::vector<Rational> ds;
    ds.reserve(xs.size());
    for (const auto& x : xs) ds.push_back(a.at(x) + b.at(x));
    return detail::curve_from_samples(xs, ds);
}

inline DmtCurve scaled(const DmtCurve& c, std::int64_t factor) {
    if (factor < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<Vertex> v = c.vertices();
    for (auto& x : v) x.d *= factor;
    return DmtCurve(std::move(v));
}

}  // namespace mhdmt

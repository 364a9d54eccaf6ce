// SPDX-License-Identifier: Apache-2.0
//
// nsmimo: correlation modelling for MIMO channels in non-separable scattering
// Copyright (C) 2026 The nsmimo Authors
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

#ifndef NSMIMO_QUADRATURE_HPP
#define NSMIMO_QUADRATURE_HPP

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace nsmimo {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline GaussLegendreRule gauss_legendre(int n)
{
    detail::require(n >= 1, "Gauss-Legendre rule needs at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1)
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

/// The 16-point rule used on every panel.
inline const GaussLegendreRule &panel_rule()
{
    static const GaussLegendreRule rule = gauss_legendre(16);
    return rule;
}

/// A composite quadrature rule along one axis.
struct AxisRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Composite Gauss-Legendre over consecutive breakpoints, each interval split into
/// `subdivisions` equal panels.
inline AxisRule composite_rule(std::vector<double> breakpoints, int subdivisions = 1)
{
    detail::require(breakpoints.size() >= 2, "composite rule needs at least two breakpoints");
    detail::require(subdivisions >= 1, "panel subdivision count must be positive");
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    const auto &base = panel_rule();
    AxisRule rule;
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        const double width = (breakpoints[k + 1] - breakpoints[k]) / subdivisions;
        for (int s = 0; s < subdivisions; ++s) {
            const double a = breakpoints[k] + s * width;
            const double half = 0.5 * width;
            const double mid = a + half;
            for (std::size_t i = 0; i < base.nodes.size(); ++i) {
                rule.nodes.push_back(mid + half * base.nodes[i]);
                rule.weights.push_back(half * base.weights[i]);
            }
        }
    }
    return rule;
}

/// Breakpoints on [-pi, pi] clustered around 0 at multiples of `scale`, optionally with
/// geometric grading toward 0 for integrands singular at the origin.
inline std::vector<double> clustered_breakpoints(double scale, int grading_levels,
                                                 const std::vector<double> &extra = {})
{
    constexpr double limit = std::numbers::pi;
    std::vector<double> points{-limit, 0.0, limit};
    auto add = [&](double x) {
        if (x > 0.0 && x < limit) {
            points.push_back(x);
            points.push_back(-x);
        }
    };
    for (double k : {0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0})
        add(k * scale);
    for (int j = 2; j <= grading_levels; ++j)
        add(scale * std::ldexp(1.0, -j));
    for (double x : extra)
        add(std::abs(x));
    return points;
}

/// Adaptive 1-D integration: a panel is accepted when the 16-point estimate agrees with the
/// sum over its two halves to `abs_tol` scaled by the panel width share.
template <class F>
double integrate_adaptive(F &&f, double a, double b, double abs_tol, int max_depth = 60)
{
    const auto &rule = panel_rule();
    auto panel = [&](double lo, double hi) {
        const double half = 0.5 * (hi - lo);
        const double mid = lo + half;
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * f(mid + half * rule.nodes[i]);
        return s * half;
    };

    struct Pending {
        double lo, hi, estimate;
        int depth;
    };
    const double total_width = b - a;
    if (total_width == 0.0)
        return 0.0;
    std::vector<Pending> stack{{a, b, panel(a, b), 0}};
    double result = 0.0;
    while (!stack.empty()) {
        const Pending p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.lo + p.hi);
        const double left = panel(p.lo, mid);
        const double right = panel(mid, p.hi);
        const double share = (p.hi - p.lo) / total_width;
        const double diff = std::abs(left + right - p.estimate);
        // no further progress once the panel spans only a few representable doubles
        const bool unresolvable =
            p.hi - p.lo <= 64.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(p.lo), std::abs(p.hi));
        if (diff <= abs_tol * share || unresolvable || p.depth >= max_depth) {
            // a panel touching an endpoint singularity shrinks its error no faster than its
            // width, so at the depth cap it only has to fit the whole budget
            if (!unresolvable && p.depth >= max_depth && diff > abs_tol)
                throw numerical_failure("adaptive quadrature exceeded depth " +
                                        std::to_string(max_depth) + " on [" +
                                        std::to_string(p.lo) + ", " + std::to_string(p.hi) + "]");
            result += left + right;
        } else {
            stack.push_back({mid, p.hi, right, p.depth + 1});
            stack.push_back({p.lo, mid, left, p.depth + 1});
        }
    }
    return result;
}

/// Refinement schedule shared by the 2-D and marginal quadratures.
struct RefinementPolicy {
    double tolerance = 1e-10; ///< successive-estimate agreement
    int max_level = 5;        ///< panel halvings before giving up
};

} // namespace nsmimo

#endif

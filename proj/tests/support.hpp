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

// Helpers shared by the test suites.

#ifndef NSMIMO_TEST_SUPPORT_HPP
#define NSMIMO_TEST_SUPPORT_HPP

#include <nsmimo/nsmimo.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace nsmimo::test {

inline double deg(double d) { return deg_to_rad(d); }

/// Random valid parameters; spreads in [min_deg, max_deg] degrees, |rho| <= max_rho.
inline PsdParams random_params(std::mt19937_64 &rng, double min_deg, double max_deg, double max_rho)
{
    std::uniform_real_distribution<double> angle(-pi, pi);
    std::uniform_real_distribution<double> spread(deg(min_deg), deg(max_deg));
    std::uniform_real_distribution<double> rho(-max_rho, max_rho);
    PsdParams p;
    p.mean_departure = angle(rng);
    p.mean_arrival = angle(rng);
    p.spread_t = spread(rng);
    p.spread_r = spread(rng);
    p.rho = rho(rng);
    return p;
}

/// Nested adaptive integral of f over the window [c - pi, c + pi)^2 centred on a cluster mean,
/// splitting each axis at the centre and at the inner conditional ridge so that kinks and the
/// K0 singularity sit on panel edges. Independent of the tensor panel layout of the library.
template <class F>
double nested_integral(F &&f, double c_outer, double c_inner, double ridge_slope, double tol)
{
    auto inner = [&](double x) {
        const double ridge =
            std::clamp(c_inner + ridge_slope * (x - c_outer), c_inner - pi, c_inner + pi);
        auto g = [&](double y) { return f(x, y); };
        return integrate_adaptive(g, c_inner - pi, ridge, tol) +
               integrate_adaptive(g, ridge, c_inner + pi, tol);
    };
    return integrate_adaptive(inner, c_outer - pi, c_outer, tol) +
           integrate_adaptive(inner, c_outer, c_outer + pi, tol);
}

/// Integral of f over the rectangle [a0, a1] x [b0, b1].
template <class F>
double box_integral(F &&f, double a0, double a1, double b0, double b1, double tol)
{
    auto inner = [&](double x) {
        return integrate_adaptive([&](double y) { return f(x, y); }, b0, b1, tol);
    };
    return integrate_adaptive(inner, a0, a1, tol);
}

} // namespace nsmimo::test

#endif

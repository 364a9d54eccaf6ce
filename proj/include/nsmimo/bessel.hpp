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

#ifndef NSMIMO_BESSEL_HPP
#define NSMIMO_BESSEL_HPP

#include "errors.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

namespace nsmimo {

/// J_0(x), ..., J_{max_order}(x) for x >= 0 by Miller's backward recurrence,
/// normalized with J_0 + 2 * sum_k J_{2k} = 1.
///
/// Backward recurrence is stable for the minimal solution at every order, so one pass
/// serves both the oscillatory (n < x) and the decaying (n > x) regime. Values for orders
/// far above x come out with full relative precision rather than absolute.
inline std::vector<double> bessel_j_sequence(int max_order, double x)
{
    detail::require(max_order >= 0, "Bessel order range must be non-negative");
    detail::require(std::isfinite(x) && x >= 0.0, "Bessel argument must be finite and non-negative");

    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }

    const double reach = std::max(static_cast<double>(max_order), x);
    int start = static_cast<int>(reach + 30.0 + std::sqrt(160.0 * reach));
    start += start % 2; // even, so J_start enters the normalization sum

    constexpr double big = 1e250;
    constexpr double rescale = 1e-250;

    double above = 0.0; // J_{k+1}
    double current = 1.0; // J_k, arbitrary scale
    double norm = 2.0 * current;
    const double two_over_x = 2.0 / x;

    for (int k = start; k > 0; --k) {
        const double below = static_cast<double>(k) * two_over_x * current - above;
        above = current;
        current = below; // now J_{k-1}
        const int order = k - 1;
        if (order <= max_order)
            out[static_cast<std::size_t>(order)] = current;
        if (order > 0 && order % 2 == 0)
            norm += 2.0 * current;
        if (std::abs(current) > big) {
            current *= rescale;
            above *= rescale;
            norm *= rescale;
            for (int j = order; j <= max_order; ++j)
                out[static_cast<std::size_t>(j)] *= rescale;
        }
    }
    norm += current; // J_0

    for (double &v : out)
        v /= norm;
    return out;
}

/// Integer-order Bessel function of the first kind, any sign of order and argument.
inline double bessel_j(int order, double x)
{
    detail::require(std::isfinite(x), "Bessel argument must be finite");
    const int n = std::abs(order);
    double value = bessel_j_sequence(n, std::abs(x)).back();
    // J_{-n} = (-1)^n J_n and J_n(-x) = (-1)^n J_n(x)
    const bool flip = (order < 0) != (x < 0.0);
    if (flip && n % 2 == 1)
        value = -value;
    return value;
}

/// Modified Bessel function of the second kind, order zero. Diverges logarithmically at 0.
inline double bessel_k0(double x)
{
    detail::require(!std::isnan(x) && x >= 0.0, "K0 argument must be non-negative");
    if (x == 0.0)
        return std::numeric_limits<double>::infinity();
    if (x > 700.0)
        return 0.0;
    return std::cyl_bessel_k(0.0, x);
}

} // namespace nsmimo

#endif

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

#ifndef NSMIMO_SMF_HPP
#define NSMIMO_SMF_HPP

#include "angles.hpp"
#include "bessel.hpp"
#include "geometry.hpp"

#include <Eigen/Dense>

#include <complex>

namespace nsmimo {

enum class ArraySide { transmitter, receiver };

/// Antennas x modes matrix of spatial-to-mode function values for one link end.
/// Column j carries mode order j - half_width.
struct ConfigurationMatrix {
    Eigen::MatrixXcd entries;
    int half_width = 0;
    ArraySide side = ArraySide::transmitter;

    Eigen::Index antennas() const noexcept { return entries.rows(); }
    Eigen::Index modes() const noexcept { return entries.cols(); }
    int column_of(int order) const noexcept { return order + half_width; }
};

/// 2-D spatial-to-mode function J_n(k|w|) exp(i n (phi_w - pi/2)) with k|w| = 2 pi r/lambda.
inline std::complex<double> smf(int order, const AntennaPosition &position)
{
    const double magnitude = bessel_j(order, two_pi * position.radius());
    return std::polar(1.0, static_cast<double>(order) * (position.azimuth() - pi / 2.0)) * magnitude;
}

inline ConfigurationMatrix configuration_matrix(const ArrayGeometry &geometry, int half_width,
                                                ArraySide side)
{
    detail::require(half_width >= 0, "mode half-width must be non-negative");
    ConfigurationMatrix out;
    out.half_width = half_width;
    out.side = side;
    out.entries.resize(static_cast<Eigen::Index>(geometry.size()), 2 * half_width + 1);

    for (std::size_t row = 0; row < geometry.size(); ++row) {
        const auto &pos = geometry.positions()[row];
        const auto bessel = bessel_j_sequence(half_width, two_pi * pos.radius());
        const auto r = static_cast<Eigen::Index>(row);
        for (int n = -half_width; n <= half_width; ++n) {
            double magnitude = bessel[static_cast<std::size_t>(std::abs(n))];
            if (n < 0 && (-n) % 2 == 1)
                magnitude = -magnitude;
            out.entries(r, out.column_of(n)) =
                std::polar(1.0, static_cast<double>(n) * (pos.azimuth() - pi / 2.0)) * magnitude;
        }
    }
    return out;
}

} // namespace nsmimo

#endif

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

#ifndef NSMIMO_GEOMETRY_HPP
#define NSMIMO_GEOMETRY_HPP

#include "angles.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace nsmimo {

/// Antenna location in the array plane, polar coordinates. Radius is in wavelengths.
class AntennaPosition {
  public:
    AntennaPosition(double radius, double azimuth) : radius_(radius), azimuth_(wrap_angle(azimuth))
    {
        detail::require(std::isfinite(radius) && radius >= 0.0,
                        "antenna radius must be finite and non-negative");
        detail::require(std::isfinite(azimuth), "antenna azimuth must be finite");
    }

    double radius() const noexcept { return radius_; }
    double azimuth() const noexcept { return azimuth_; }

  private:
    double radius_;
    double azimuth_;
};

/// Antennas of one link end together with the radius of the disc that encloses them.
///
/// Coincident antennas are allowed; they make the channel correlation rank deficient,
/// which the square-root and capacity code tolerate.
class ArrayGeometry {
  public:
    explicit ArrayGeometry(std::vector<AntennaPosition> positions)
        : ArrayGeometry(positions, max_radius(positions))
    {
    }

    ArrayGeometry(std::vector<AntennaPosition> positions, double aperture_radius)
        : positions_(std::move(positions)), aperture_radius_(aperture_radius)
    {
        detail::require(!positions_.empty(), "array geometry needs at least one antenna");
        detail::require(std::isfinite(aperture_radius_), "aperture radius must be finite");
        detail::require(aperture_radius_ >= max_radius(positions_),
                        "aperture radius " + std::to_string(aperture_radius_) +
                            " does not enclose every antenna");
    }

    const std::vector<AntennaPosition> &positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    double aperture_radius() const noexcept { return aperture_radius_; }

  private:
    static double max_radius(const std::vector<AntennaPosition> &positions)
    {
        double r = 0.0;
        for (const auto &p : positions)
            r = std::max(r, p.radius());
        return r;
    }

    std::vector<AntennaPosition> positions_;
    double aperture_radius_;
};

/// n elements on a ring, first element at azimuth 0, spaced 2*pi/n counter-clockwise.
inline ArrayGeometry uniform_circular_array(std::size_t n, double ring_radius)
{
    detail::require(n >= 1, "uniform circular array needs at least one element");
    detail::require(std::isfinite(ring_radius) && ring_radius >= 0.0,
                    "ring radius must be finite and non-negative");
    std::vector<AntennaPosition> positions;
    positions.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        positions.emplace_back(ring_radius, two_pi * static_cast<double>(j) / static_cast<double>(n));
    return ArrayGeometry(std::move(positions), ring_radius);
}

/// Mode half-width M = ceil(pi * e * r) for an aperture of radius r wavelengths.
/// The region supports 2M+1 effective modes.
inline int mode_count(double aperture_radius)
{
    detail::require(std::isfinite(aperture_radius) && aperture_radius >= 0.0,
                    "aperture radius must be finite and non-negative");
    return static_cast<int>(std::ceil(std::numbers::pi * std::numbers::e * aperture_radius));
}

inline int mode_count(const ArrayGeometry &geometry) { return mode_count(geometry.aperture_radius()); }

} // namespace nsmimo

#endif

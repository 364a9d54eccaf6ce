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

#ifndef NSMIMO_ANGLES_HPP
#define NSMIMO_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace nsmimo {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) noexcept { return deg * (pi / 180.0); }
constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / pi); }

/// Reduces an angle into [-pi, pi).
inline double wrap_angle(double angle) noexcept
{
    if (angle >= -pi && angle < pi)
        return angle;
    double wrapped = std::fmod(angle + pi, two_pi);
    if (wrapped < 0.0)
        wrapped += two_pi;
    wrapped -= pi;
    // fmod rounding can land exactly on +pi
    return wrapped >= pi ? -pi : wrapped;
}

} // namespace nsmimo

#endif

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

#ifndef NSMIMO_EXPORT_HPP
#define NSMIMO_EXPORT_HPP

#include "capacity.hpp"
#include "correlation.hpp"
#include "psd.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace nsmimo {

/// Density sampled on a uniform square grid spanning [-180, 180] degrees on both axes.
/// values(i, j) is G(axis[i], axis[j]) with i the departure and j the arrival index.
struct PsdGrid {
    std::vector<double> axis_deg;
    Eigen::MatrixXd values;
};

/// Tabulates a density. Points where the density is infinite (Laplacian mean) take the value
/// a quarter grid step away along both axes.
inline PsdGrid tabulate_psd(const BiAngularPsd &psd, int resolution)
{
    detail::require(resolution >= 2, "grid resolution must be at least 2");
    PsdGrid grid;
    const double step = 360.0 / (resolution - 1);
    for (int k = 0; k < resolution; ++k)
        grid.axis_deg.push_back(-180.0 + k * step);
    grid.values.resize(resolution, resolution);

    auto at = [&](double phi, double phi_r) {
        double v = psd.density(phi, phi_r);
        if (!std::isfinite(v)) {
            const double nudge = deg_to_rad(0.25 * step);
            v = psd.density(phi + nudge, phi_r + nudge);
        }
        return v;
    };

    if (psd.kind() == BiAngularPsd::Kind::separable_product) {
        std::vector<double> tx, rx;
        for (double a : grid.axis_deg) {
            tx.push_back(psd.marginal_tx(deg_to_rad(a)));
            rx.push_back(psd.marginal_rx(deg_to_rad(a)));
        }
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j < resolution; ++j)
                grid.values(i, j) = tx[static_cast<std::size_t>(i)] * rx[static_cast<std::size_t>(j)];
        return grid;
    }
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j)
            grid.values(i, j) = at(deg_to_rad(grid.axis_deg[static_cast<std::size_t>(i)]),
                                   deg_to_rad(grid.axis_deg[static_cast<std::size_t>(j)]));
    return grid;
}

/// Grid points strictly greater than all 8 neighbours and above `relative_threshold` times
/// the global maximum. With `periodic`, neighbours wrap around both edges (torus topology).
inline int count_local_maxima(const Eigen::MatrixXd &values, double relative_threshold = 0.01,
                              bool periodic = false)
{
    const double threshold = relative_threshold * values.maxCoeff();
    const Eigen::Index rows = values.rows();
    const Eigen::Index cols = values.cols();
    int count = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double v = values(i, j);
            if (!(v > threshold))
                continue;
            bool peak = true;
            for (Eigen::Index di = -1; di <= 1 && peak; ++di)
                for (Eigen::Index dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0)
                        continue;
                    Eigen::Index a = i + di;
                    Eigen::Index b = j + dj;
                    if (periodic) {
                        a = (a + rows) % rows;
                        b = (b + cols) % cols;
                    } else if (a < 0 || b < 0 || a >= rows || b >= cols) {
                        continue;
                    }
                    if (values(a, b) >= v) {
                        peak = false;
                        break;
                    }
                }
            count += peak ? 1 : 0;
        }
    return count;
}

/// Local maxima of a tabulated density on the torus. The +180 degree row and column repeat
/// the -180 degree ones and are left out.
inline int count_local_maxima(const PsdGrid &grid, double relative_threshold = 0.01)
{
    const Eigen::Index n = grid.values.rows() - 1;
    return count_local_maxima(grid.values.topLeftCorner(n, n), relative_threshold, true);
}

namespace detail {

inline std::string format_number(double v, int digits = 17)
{
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

} // namespace detail

inline void write_psd_grid_csv(std::ostream &out, const PsdGrid &grid)
{
    out << "phi_deg,phi_r_deg,density\n";
    for (std::size_t i = 0; i < grid.axis_deg.size(); ++i)
        for (std::size_t j = 0; j < grid.axis_deg.size(); ++j)
            out << detail::format_number(grid.axis_deg[i], 10) << ','
                << detail::format_number(grid.axis_deg[j], 10) << ','
                << detail::format_number(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
                << '\n';
}

/// Columns snr_db, mean_mi_bits, std_err, trials, scenario_id. An undefined standard
/// error (single trial) is written as "nan".
inline void write_capacity_csv(std::ostream &out, const CapacityCurve &curve)
{
    out << "snr_db,mean_mi_bits,std_err,trials,scenario_id\n";
    for (std::size_t k = 0; k < curve.snr_db.size(); ++k)
        out << detail::format_number(curve.snr_db[k], 10) << ','
            << detail::format_number(curve.mean_mi[k]) << ','
            << (curve.std_err_defined() ? detail::format_number(curve.std_err[k]) : std::string("nan"))
            << ',' << curve.trials << ',' << curve.scenario_id << '\n';
}

/// One matrix row per line, re and im interleaved.
inline void write_matrix_csv(std::ostream &out, const Eigen::MatrixXcd &m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0)
                out << ',';
            out << detail::format_number(m(i, j).real()) << ',' << detail::format_number(m(i, j).imag());
        }
        out << '\n';
    }
}

} // namespace nsmimo

#endif

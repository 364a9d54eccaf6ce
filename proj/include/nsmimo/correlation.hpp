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

#ifndef NSMIMO_CORRELATION_HPP
#define NSMIMO_CORRELATION_HPP

#include "errors.hpp"
#include "psd.hpp"
#include "smf.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

namespace nsmimo {

enum class RsMethod { closed_form, quadrature };

/// Unnormalized sinc, sin(x)/x with sinc(0) = 1.
inline double sinc(double x) noexcept
{
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

/// Closed-form modal correlation gamma(dm, dl) with dm = m - m', dl = l - l'.
///
/// Uniform-limited: exact for the truncated density. Gaussian: the untruncated
/// characteristic function, an approximation that tightens as the spreads shrink.
/// Laplacian: exp(i(dm phi0 - dl phi_r0)) / (1 + sigma_t^2 dm^2 - 2 rho sigma_t sigma_r dm dl
/// + sigma_r^2 dl^2), exact for the untruncated density.
inline std::complex<double> gamma_closed_form(PsdFamily family, const PsdParams &p, int dm, int dl)
{
    validate(family, p);
    if (dm == 0 && dl == 0)
        return {1.0, 0.0};
    const double m = dm;
    const double l = dl;
    const auto phase = std::polar(1.0, m * p.mean_departure - l * p.mean_arrival);
    switch (family) {
    case PsdFamily::uniform_limited: {
        const double a = m * p.spread_t;
        const double b = l * p.spread_r;
        if (dl == 0)
            return sinc(a) * std::polar(1.0, m * p.mean_departure);
        if (dm == 0)
            return sinc(b) * std::polar(1.0, -l * p.mean_arrival);
        const double big_gamma =
            sinc(a) * sinc(b) + p.rho / (l * m * p.spread_t * p.spread_r) *
                                    (std::cos(a) - sinc(a)) * (sinc(b) - std::cos(b));
        return phase * big_gamma;
    }
    case PsdFamily::gaussian: {
        const double form = p.spread_t * p.spread_t * m * m -
                            2.0 * p.rho * p.spread_t * p.spread_r * m * l +
                            p.spread_r * p.spread_r * l * l;
        return phase * std::exp(-0.5 * form);
    }
    case PsdFamily::laplacian: {
        const double form = p.spread_t * p.spread_t * m * m -
                            2.0 * p.rho * p.spread_t * p.spread_r * m * l +
                            p.spread_r * p.spread_r * l * l;
        return phase / (form + 1.0);
    }
    }
    return {0.0, 0.0};
}

/// Table of gamma(dm, dl) for |dm| <= max_dm, |dl| <= max_dl.
class ModalCoefficients {
  public:
    ModalCoefficients(Eigen::MatrixXcd values, int max_dm, int max_dl)
        : values_(std::move(values)), max_dm_(max_dm), max_dl_(max_dl)
    {
    }

    std::complex<double> operator()(int dm, int dl) const
    {
        detail::require(std::abs(dm) <= max_dm_ && std::abs(dl) <= max_dl_,
                        "modal coefficient index outside tabulated range");
        return values_(dm + max_dm_, dl + max_dl_);
    }

    int max_dm() const noexcept { return max_dm_; }
    int max_dl() const noexcept { return max_dl_; }
    const Eigen::MatrixXcd &values() const noexcept { return values_; }

  private:
    Eigen::MatrixXcd values_;
    int max_dm_;
    int max_dl_;
};

namespace detail {

inline Eigen::MatrixXcd quadrature_table(const PsdNode &node, int max_dm, int max_dl,
                                         const RefinementPolicy &policy);

/// Fourier coefficients of a marginal: transmit side int P_tx e^{+i n phi}, receive side
/// int P_rx e^{-i n phi_r}; index n + max_order.
inline Eigen::VectorXcd marginal_table(const PsdNode &node, bool transmit, int max_order,
                                       const RefinementPolicy &policy)
{
    switch (node.kind) {
    case NodeKind::unimodal: {
        Eigen::VectorXcd centered = converged_marginal_coefficients(node.cluster, transmit, max_order, policy);
        const double mean = transmit ? node.cluster.params.mean_departure : -node.cluster.params.mean_arrival;
        for (int n = -max_order; n <= max_order; ++n)
            centered(n + max_order) *= std::polar(1.0, n * mean);
        return centered;
    }
    case NodeKind::mixture: {
        Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(2 * max_order + 1);
        for (const auto &[w, c] : node.components)
            sum += w * marginal_table(*c, transmit, max_order, policy);
        return sum;
    }
    case NodeKind::separable_product:
        return marginal_table(*node.source, transmit, max_order, policy);
    }
    return {};
}

inline Eigen::MatrixXcd quadrature_table(const PsdNode &node, int max_dm, int max_dl,
                                         const RefinementPolicy &policy)
{
    switch (node.kind) {
    case NodeKind::unimodal: {
        Eigen::MatrixXcd table = converged_coefficients(node.cluster, max_dm, max_dl, policy);
        const auto &p = node.cluster.params;
        for (int dm = -max_dm; dm <= max_dm; ++dm)
            for (int dl = -max_dl; dl <= max_dl; ++dl)
                table(dm + max_dm, dl + max_dl) *=
                    node.cluster.norm * std::polar(1.0, dm * p.mean_departure - dl * p.mean_arrival);
        return table;
    }
    case NodeKind::mixture: {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(2 * max_dm + 1, 2 * max_dl + 1);
        for (const auto &[w, c] : node.components)
            sum += w * quadrature_table(*c, max_dm, max_dl, policy);
        return sum;
    }
    case NodeKind::separable_product: {
        const Eigen::VectorXcd tx = marginal_table(*node.source, true, max_dm, policy);
        const Eigen::VectorXcd rx = marginal_table(*node.source, false, max_dl, policy);
        return tx * rx.transpose();
    }
    }
    return {};
}

} // namespace detail

/// gamma(dm, dl) = double integral of G(phi, phi_r) exp(-i dl phi_r) exp(i dm phi), by tensor
/// Gauss-Legendre quadrature refined until successive estimates agree.
inline ModalCoefficients modal_coefficients(const BiAngularPsd &psd, int max_dm, int max_dl,
                                            const RefinementPolicy &policy = {})
{
    detail::require(max_dm >= 0 && max_dl >= 0, "modal coefficient range must be non-negative");
    return {detail::quadrature_table(psd.node(), max_dm, max_dl, policy), max_dm, max_dl};
}

inline ModalCoefficients modal_coefficients_closed_form(PsdFamily family, const PsdParams &params,
                                                        int max_dm, int max_dl)
{
    detail::require(max_dm >= 0 && max_dl >= 0, "modal coefficient range must be non-negative");
    Eigen::MatrixXcd table(2 * max_dm + 1, 2 * max_dl + 1);
    for (int dm = -max_dm; dm <= max_dm; ++dm)
        for (int dl = -max_dl; dl <= max_dl; ++dl)
            table(dm + max_dm, dl + max_dl) = gamma_closed_form(family, params, dm, dl);
    return {std::move(table), max_dm, max_dl};
}

inline std::complex<double> gamma_quadrature(const BiAngularPsd &psd, int dm, int dl,
                                             const RefinementPolicy &policy = {})
{
    return modal_coefficients(psd, std::abs(dm), std::abs(dl), policy)(dm, dl);
}

/// Transmit-side modal correlations gamma_{m,m'} = int P_tx(phi) e^{i (m-m') phi} dphi.
inline Eigen::VectorXcd transmit_modal_correlation(const BiAngularPsd &psd, int max_order,
                                                   const RefinementPolicy &policy = {})
{
    return detail::marginal_table(psd.node(), true, max_order, policy);
}

/// Receive-side modal correlations gamma^{l,l'} = int P_rx(phi_r) e^{-i (l-l') phi_r} dphi_r.
inline Eigen::VectorXcd receive_modal_correlation(const BiAngularPsd &psd, int max_order,
                                                  const RefinementPolicy &policy = {})
{
    return detail::marginal_table(psd.node(), false, max_order, policy);
}

/// Modal correlation matrix R_S = E{vec(H_S) vec(H_S)^H}.
///
/// vec() stacks columns of H_S, so the matrix is (2 M_T + 1)^2 blocks indexed by transmit
/// mode pairs, each block (2 M_R + 1)^2 indexed by receive mode pairs. Mode orders run
/// -M..M; index(m, l) = (m + M_T)(2 M_R + 1) + (l + M_R).
struct ModalCorrelationMatrix {
    Eigen::MatrixXcd entries;
    int m_t = 0;
    int m_r = 0;

    Eigen::Index receive_modes() const noexcept { return 2 * m_r + 1; }
    Eigen::Index transmit_modes() const noexcept { return 2 * m_t + 1; }

    Eigen::Index index(int m, int l) const noexcept
    {
        return static_cast<Eigen::Index>(m + m_t) * receive_modes() + (l + m_r);
    }

    std::complex<double> entry(int m, int m2, int l, int l2) const
    {
        return entries(index(m, l), index(m2, l2));
    }

    /// R_{S,m,m'}, the receive-mode correlation block for transmit modes m and m'.
    Eigen::MatrixXcd block(int m, int m2) const
    {
        return entries.block(index(m, -m_r), index(m2, -m_r), receive_modes(), receive_modes());
    }
};

inline ModalCorrelationMatrix assemble_rs(const ModalCoefficients &gamma, int m_t, int m_r)
{
    detail::require(gamma.max_dm() >= 2 * m_t && gamma.max_dl() >= 2 * m_r,
                    "coefficient table too small for requested mode counts");
    ModalCorrelationMatrix rs;
    rs.m_t = m_t;
    rs.m_r = m_r;
    const Eigen::Index n = rs.transmit_modes() * rs.receive_modes();
    rs.entries.resize(n, n);
    for (int m = -m_t; m <= m_t; ++m)
        for (int m2 = -m_t; m2 <= m_t; ++m2)
            for (int l = -m_r; l <= m_r; ++l)
                for (int l2 = -m_r; l2 <= m_r; ++l2) {
                    const auto a = rs.index(m, l);
                    const auto b = rs.index(m2, l2);
                    if (a > b)
                        continue;
                    const auto g = gamma(m - m2, l - l2);
                    rs.entries(a, b) = g;
                    rs.entries(b, a) = std::conj(g);
                }
    // the diagonal is gamma(0, 0), real by construction
    for (Eigen::Index k = 0; k < n; ++k)
        rs.entries(k, k) = rs.entries(k, k).real();
    return rs;
}

inline ModalCorrelationMatrix build_rs(const BiAngularPsd &psd, int m_t, int m_r, RsMethod method,
                                       const RefinementPolicy &policy = {})
{
    detail::require(m_t >= 0 && m_r >= 0, "mode half-widths must be non-negative");
    if (method == RsMethod::closed_form) {
        if (!psd.is_unimodal())
            throw unsupported_method("closed-form modal correlation needs a single-family density");
        return assemble_rs(modal_coefficients_closed_form(psd.family(), psd.params(), 2 * m_t, 2 * m_r),
                           m_t, m_r);
    }
    return assemble_rs(modal_coefficients(psd, 2 * m_t, 2 * m_r, policy), m_t, m_r);
}

inline ModalCorrelationMatrix build_rs(PsdFamily family, const PsdParams &params, int m_t, int m_r)
{
    detail::require(m_t >= 0 && m_r >= 0, "mode half-widths must be non-negative");
    return assemble_rs(modal_coefficients_closed_form(family, params, 2 * m_t, 2 * m_r), m_t, m_r);
}

/// Kronecker product A (x) B.
inline Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b)
{
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Separable model R_S = F_T (x) F_R with F_T and F_R from the marginal densities.
inline ModalCorrelationMatrix build_rs_kronecker(const BiAngularPsd &psd, int m_t, int m_r,
                                                 const RefinementPolicy &policy = {})
{
    detail::require(m_t >= 0 && m_r >= 0, "mode half-widths must be non-negative");
    const Eigen::VectorXcd tx = transmit_modal_correlation(psd, 2 * m_t, policy);
    const Eigen::VectorXcd rx = receive_modal_correlation(psd, 2 * m_r, policy);

    auto toeplitz = [](const Eigen::VectorXcd &g, int half) {
        const int size = 2 * half + 1;
        Eigen::MatrixXcd f(size, size);
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                f(a, b) = g(a - b + 2 * half);
        for (int a = 0; a < size; ++a)
            f(a, a) = f(a, a).real();
        return f;
    };

    ModalCorrelationMatrix rs;
    rs.m_t = m_t;
    rs.m_r = m_r;
    rs.entries = kronecker(toeplitz(tx, m_t), toeplitz(rx, m_r));
    return rs;
}

/// Spatial correlation E{h h^H} of h = vec(H), receive index fastest: entry index t n_R + r.
struct ChannelCorrelation {
    Eigen::MatrixXcd entries;
    Eigen::Index n_t = 0;
    Eigen::Index n_r = 0;
    double asymmetry = 0.0; ///< max |A - A^H| before symmetrization

    Eigen::Index index(Eigen::Index t, Eigen::Index r) const noexcept { return t * n_r + r; }
    bool asymmetry_flagged() const noexcept { return asymmetry > 1e-9; }
};

/// R = (conj(J_T) (x) J_R) R_S (J_T^T (x) J_R^H), symmetrized.
inline ChannelCorrelation build_r(const ConfigurationMatrix &jt, const ConfigurationMatrix &jr,
                                  const ModalCorrelationMatrix &rs)
{
    detail::require(jt.modes() == rs.transmit_modes(),
                    "transmit configuration has " + std::to_string(jt.modes()) +
                        " modes, modal correlation expects " + std::to_string(rs.transmit_modes()));
    detail::require(jr.modes() == rs.receive_modes(),
                    "receive configuration has " + std::to_string(jr.modes()) +
                        " modes, modal correlation expects " + std::to_string(rs.receive_modes()));

    const Eigen::MatrixXcd left = kronecker(jt.entries.conjugate(), jr.entries);
    const Eigen::MatrixXcd raw = left * rs.entries * left.adjoint();

    ChannelCorrelation r;
    r.n_t = jt.antennas();
    r.n_r = jr.antennas();
    r.asymmetry = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    r.entries = 0.5 * (raw + raw.adjoint());
    return r;
}

} // namespace nsmimo

#endif

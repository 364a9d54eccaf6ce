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

#ifndef NSMIMO_PSD_HPP
#define NSMIMO_PSD_HPP

#include "angles.hpp"
#include "bessel.hpp"
#include "errors.hpp"
#include "quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsmimo {

enum class PsdFamily { uniform_limited, gaussian, laplacian };

inline std::string_view to_string(PsdFamily family) noexcept
{
    switch (family) {
    case PsdFamily::uniform_limited:
        return "uniform-limited";
    case PsdFamily::gaussian:
        return "gaussian";
    case PsdFamily::laplacian:
        return "laplacian";
    }
    return "unknown";
}

/// Parameters of a uni-modal bi-angular density. Angles in radians.
///
/// For the uniform-limited family the spreads are the half-widths of the support;
/// for the Gaussian and Laplacian families they are the standard deviations of the
/// non-truncated Gaussian marginals (Laplacian: of the characteristic-function form,
/// see gamma_closed_form).
struct PsdParams {
    double mean_departure = 0.0;
    double mean_arrival = 0.0;
    double spread_t = 0.0;
    double spread_r = 0.0;
    double rho = 0.0;
};

inline void validate(PsdFamily family, const PsdParams &p)
{
    auto check = [](bool ok, std::string_view field, std::string_view what) {
        if (!ok)
            throw nsmimo::invalid_argument(std::string(field) + ": " + std::string(what));
    };
    check(std::isfinite(p.mean_departure), "mean_departure", "must be finite");
    check(std::isfinite(p.mean_arrival), "mean_arrival", "must be finite");
    check(std::isfinite(p.spread_t) && p.spread_t > 0.0, "spread_t", "must be finite and positive");
    check(std::isfinite(p.spread_r) && p.spread_r > 0.0, "spread_r", "must be finite and positive");
    check(std::isfinite(p.rho) && std::abs(p.rho) <= 1.0, "rho", "must lie in [-1, 1]");
    if (family == PsdFamily::uniform_limited) {
        check(p.spread_t <= pi, "spread_t", "uniform-limited half-width must not exceed pi");
        check(p.spread_r <= pi, "spread_r", "uniform-limited half-width must not exceed pi");
    }
}

namespace detail {

/// One uni-modal density expressed in coordinates centered on its mean angles.
/// Offsets are wrapped into [-pi, pi), so a cluster may straddle the +-pi seam.
struct Cluster {
    PsdFamily family = PsdFamily::uniform_limited;
    PsdParams params;
    double norm = 1.0; ///< multiplies kernel() to give a unit-mass density

    /// Quadratic form of the Gaussian/Laplacian families divided by (1 - rho^2).
    double scaled_quadratic(double d, double dr) const noexcept
    {
        const double a = d / params.spread_t;
        const double b = dr / params.spread_r;
        return (a * a - 2.0 * params.rho * a * b + b * b) / (1.0 - params.rho * params.rho);
    }

    double kernel(double d, double dr) const
    {
        switch (family) {
        case PsdFamily::uniform_limited: {
            const double dt = params.spread_t;
            const double drr = params.spread_r;
            if (std::abs(d) > dt || std::abs(dr) > drr)
                return 0.0;
            return 1.0 / (4.0 * dt * drr) - params.rho * d * dr / (4.0 * dt * dt * drr * drr);
        }
        case PsdFamily::gaussian:
            return std::exp(-0.5 * scaled_quadratic(d, dr));
        case PsdFamily::laplacian:
            return bessel_k0(std::sqrt(scaled_quadratic(d, dr)));
        }
        return 0.0;
    }

    double density(double d, double dr) const { return norm * kernel(d, dr); }

    /// Centered marginal over the departure offset (tx) or the arrival offset (rx).
    double marginal(double offset, bool transmit) const
    {
        const double own = transmit ? params.spread_t : params.spread_r;
        const double other = transmit ? params.spread_r : params.spread_t;
        switch (family) {
        case PsdFamily::uniform_limited:
            return std::abs(offset) <= own ? 1.0 / (2.0 * own) : 0.0;
        case PsdFamily::gaussian: {
            // exp(-Q / 2(1-rho^2)) factors into a Gaussian in `offset` and a conditional
            // Gaussian in the other angle with mean mu and deviation s.
            const double mu = params.rho * other * offset / own;
            const double s = other * std::sqrt(1.0 - params.rho * params.rho);
            const double mass = 0.5 * (std::erf((pi - mu) / (s * std::sqrt(2.0))) -
                                       std::erf((-pi - mu) / (s * std::sqrt(2.0))));
            return norm * std::exp(-0.5 * offset * offset / (own * own)) *
                   std::sqrt(two_pi) * s * mass;
        }
        case PsdFamily::laplacian: {
            const double ridge = std::clamp(params.rho * other * offset / own, -pi, pi);
            auto integrand = [&](double u) {
                return transmit ? kernel(offset, u) : kernel(u, offset);
            };
            const double tol = 1e-14 / (params.spread_t * params.spread_r * norm);
            double total = 0.0;
            if (ridge > -pi)
                total += integrate_adaptive(integrand, -pi, ridge, tol);
            if (ridge < pi)
                total += integrate_adaptive(integrand, ridge, pi, tol);
            return norm * total;
        }
        }
        return 0.0;
    }

    /// Panel breakpoints along one centered axis at refinement `level`.
    AxisRule axis_rule(bool transmit, int level) const
    {
        const double spread = transmit ? params.spread_t : params.spread_r;
        std::vector<double> regular;
        if (family == PsdFamily::uniform_limited)
            regular = {-pi, -spread, 0.0, spread, pi};
        else
            regular = clustered_breakpoints(spread, 0);
        std::sort(regular.begin(), regular.end());
        regular.erase(std::unique(regular.begin(), regular.end()), regular.end());

        const int split = 1 << level;
        std::vector<double> points;
        for (std::size_t k = 0; k + 1 < regular.size(); ++k) {
            const double width = (regular[k + 1] - regular[k]) / split;
            for (int s = 0; s < split; ++s)
                points.push_back(regular[k] + s * width);
        }
        points.push_back(regular.back());

        if (family == PsdFamily::laplacian) {
            // geometric grading toward the logarithmic singularity at the origin
            const double inner = std::min(spread, pi) / static_cast<double>(2 * split);
            const int depth = 12 + 6 * level;
            for (int j = 1; j <= depth; ++j) {
                const double x = inner * std::ldexp(1.0, -j);
                points.push_back(x);
                points.push_back(-x);
            }
        }
        return composite_rule(std::move(points), 1);
    }
};

/// Unnormalized Fourier coefficients of a centered kernel on the given tensor rule:
/// c(dm, dl) = sum_ij w_i v_j kernel(d_i, dr_j) exp(i dm d_i) exp(-i dl dr_j),
/// row index dm + max_dm, column index dl + max_dl.
inline Eigen::MatrixXcd tensor_coefficients(const Cluster &cluster, const AxisRule &tx,
                                            const AxisRule &rx, int max_dm, int max_dl)
{
    const auto nt = static_cast<Eigen::Index>(tx.size());
    const auto nr = static_cast<Eigen::Index>(rx.size());
    Eigen::MatrixXd weighted(nt, nr);
    for (Eigen::Index i = 0; i < nt; ++i)
        for (Eigen::Index j = 0; j < nr; ++j)
            weighted(i, j) = tx.weights[static_cast<std::size_t>(i)] *
                             rx.weights[static_cast<std::size_t>(j)] *
                             cluster.kernel(tx.nodes[static_cast<std::size_t>(i)],
                                            rx.nodes[static_cast<std::size_t>(j)]);

    const Eigen::Index ndl = 2 * max_dl + 1;
    Eigen::MatrixXd cos_r(nr, ndl), sin_r(nr, ndl);
    for (Eigen::Index j = 0; j < nr; ++j)
        for (Eigen::Index k = 0; k < ndl; ++k) {
            const double arg = -static_cast<double>(k - max_dl) * rx.nodes[static_cast<std::size_t>(j)];
            cos_r(j, k) = std::cos(arg);
            sin_r(j, k) = std::sin(arg);
        }
    const Eigen::MatrixXd y_re = weighted * cos_r;
    const Eigen::MatrixXd y_im = weighted * sin_r;

    const Eigen::Index ndm = 2 * max_dm + 1;
    Eigen::MatrixXcd out(ndm, ndl);
    for (Eigen::Index m = 0; m < ndm; ++m) {
        Eigen::VectorXd c(nt), s(nt);
        for (Eigen::Index i = 0; i < nt; ++i) {
            const double arg = static_cast<double>(m - max_dm) * tx.nodes[static_cast<std::size_t>(i)];
            c(i) = std::cos(arg);
            s(i) = std::sin(arg);
        }
        // (c + i s)^T (y_re + i y_im)
        const Eigen::RowVectorXd re = c.transpose() * y_re - s.transpose() * y_im;
        const Eigen::RowVectorXd im = c.transpose() * y_im + s.transpose() * y_re;
        for (Eigen::Index k = 0; k < ndl; ++k)
            out(m, k) = {re(k), im(k)};
    }
    return out;
}

/// Refines the tensor rule until successive coefficient sets agree to
/// tolerance * |c(0, 0)|. Returns the unnormalized coefficients.
inline Eigen::MatrixXcd converged_coefficients(const Cluster &cluster, int max_dm, int max_dl,
                                               const RefinementPolicy &policy)
{
    Eigen::MatrixXcd previous;
    double last_change = 0.0;
    for (int level = 0; level <= policy.max_level; ++level) {
        Eigen::MatrixXcd current = tensor_coefficients(cluster, cluster.axis_rule(true, level),
                                                       cluster.axis_rule(false, level), max_dm, max_dl);
        if (level > 0) {
            const double scale = std::abs(current(max_dm, max_dl));
            last_change = (current - previous).cwiseAbs().maxCoeff();
            if (last_change <= policy.tolerance * scale)
                return current;
        }
        previous = std::move(current);
    }
    throw numerical_failure("2-D quadrature of " + std::string(to_string(cluster.family)) +
                            " density did not converge: last refinement changed coefficients by " +
                            std::to_string(last_change) + " after level " +
                            std::to_string(policy.max_level));
}

/// Same refinement for the 1-D Fourier coefficients of a centered marginal:
/// transmit side uses exp(+i n d), receive side exp(-i n d).
inline Eigen::VectorXcd converged_marginal_coefficients(const Cluster &cluster, bool transmit,
                                                        int max_order, const RefinementPolicy &policy)
{
    Eigen::VectorXcd previous;
    double last_change = 0.0;
    const double sign = transmit ? 1.0 : -1.0;
    for (int level = 0; level <= policy.max_level; ++level) {
        const AxisRule rule = cluster.axis_rule(transmit, level);
        Eigen::VectorXcd current = Eigen::VectorXcd::Zero(2 * max_order + 1);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double value = rule.weights[i] * cluster.marginal(rule.nodes[i], transmit);
            for (int n = -max_order; n <= max_order; ++n)
                current(n + max_order) += std::polar(value, sign * n * rule.nodes[i]);
        }
        if (level > 0) {
            last_change = (current - previous).cwiseAbs().maxCoeff();
            if (last_change <= policy.tolerance * std::abs(current(max_order)))
                return current;
        }
        previous = std::move(current);
    }
    throw numerical_failure("marginal quadrature of " + std::string(to_string(cluster.family)) +
                            " density did not converge: last change " + std::to_string(last_change));
}

inline Cluster make_cluster(PsdFamily family, const PsdParams &params, const RefinementPolicy &policy)
{
    validate(family, params);
    Cluster cluster{family, params, 1.0};
    if (family == PsdFamily::uniform_limited)
        return cluster;
    if (std::abs(params.rho) >= 1.0)
        throw degenerate_distribution(std::string(to_string(family)) +
                                      " density is singular for |rho| = 1");
    const double mass = converged_coefficients(cluster, 0, 0, policy)(0, 0).real();
    if (!(mass >= 1e-12))
        throw degenerate_distribution(std::string(to_string(family)) + " density has mass " +
                                      std::to_string(mass) + " before normalization");
    cluster.norm = 1.0 / mass;
    return cluster;
}

struct PsdNode;
using NodePtr = std::shared_ptr<const PsdNode>;

enum class NodeKind { unimodal, mixture, separable_product };

struct PsdNode {
    NodeKind kind = NodeKind::unimodal;
    Cluster cluster;                                    // unimodal
    std::vector<std::pair<double, NodePtr>> components; // mixture
    NodePtr source;                                     // separable_product
};

inline double node_marginal(const PsdNode &node, double angle, bool transmit)
{
    switch (node.kind) {
    case NodeKind::unimodal: {
        const double mean = transmit ? node.cluster.params.mean_departure : node.cluster.params.mean_arrival;
        return node.cluster.marginal(wrap_angle(angle - mean), transmit);
    }
    case NodeKind::mixture: {
        double sum = 0.0;
        for (const auto &[w, c] : node.components)
            sum += w * node_marginal(*c, angle, transmit);
        return sum;
    }
    case NodeKind::separable_product:
        return node_marginal(*node.source, angle, transmit);
    }
    return 0.0;
}

inline double node_density(const PsdNode &node, double phi, double phi_r)
{
    switch (node.kind) {
    case NodeKind::unimodal:
        return node.cluster.density(wrap_angle(phi - node.cluster.params.mean_departure),
                                    wrap_angle(phi_r - node.cluster.params.mean_arrival));
    case NodeKind::mixture: {
        double sum = 0.0;
        for (const auto &[w, c] : node.components)
            sum += w * node_density(*c, phi, phi_r);
        return sum;
    }
    case NodeKind::separable_product:
        return node_marginal(*node.source, phi, true) * node_marginal(*node.source, phi_r, false);
    }
    return 0.0;
}

} // namespace detail

class BiAngularPsd;

struct MixtureComponent;

/// Joint power density G(phi, phi_r) over departure and arrival azimuths with unit total mass.
///
/// A density is one of: a uni-modal family member, a finite weighted mixture of densities,
/// or the separable product of another density's marginals (see kronecker_psd). Objects are
/// immutable and cheap to copy.
class BiAngularPsd {
  public:
    using Kind = detail::NodeKind;

    static BiAngularPsd unimodal(PsdFamily family, const PsdParams &params,
                                 const RefinementPolicy &policy = {})
    {
        auto node = std::make_shared<detail::PsdNode>();
        node->kind = Kind::unimodal;
        node->cluster = detail::make_cluster(family, params, policy);
        return BiAngularPsd(std::move(node));
    }

    static BiAngularPsd uniform_limited(const PsdParams &params)
    {
        return unimodal(PsdFamily::uniform_limited, params);
    }
    static BiAngularPsd gaussian(const PsdParams &params, const RefinementPolicy &policy = {})
    {
        return unimodal(PsdFamily::gaussian, params, policy);
    }
    static BiAngularPsd laplacian(const PsdParams &params, const RefinementPolicy &policy = {})
    {
        return unimodal(PsdFamily::laplacian, params, policy);
    }

    /// Weights must be positive and sum to one within 1e-12.
    static BiAngularPsd mixture(const std::vector<MixtureComponent> &components);

    Kind kind() const noexcept { return node_->kind; }
    bool is_unimodal() const noexcept { return kind() == Kind::unimodal; }

    /// Family and parameters of a uni-modal density; throws unsupported_method otherwise.
    PsdFamily family() const { return unimodal_cluster().family; }
    const PsdParams &params() const { return unimodal_cluster().params; }

    /// Normalization constant of a uni-modal density (analytic for uniform-limited).
    double normalization() const { return unimodal_cluster().norm; }

    std::vector<MixtureComponent> components() const;
    BiAngularPsd source() const
    {
        if (kind() != Kind::separable_product)
            throw unsupported_method("source() is only defined for separable products");
        return BiAngularPsd(node_->source);
    }

    /// Density at (phi, phi_r); angles are reduced into [-pi, pi). The Laplacian family is
    /// infinite at its mean.
    double density(double phi, double phi_r) const { return detail::node_density(*node_, phi, phi_r); }

    double marginal_tx(double phi) const { return detail::node_marginal(*node_, phi, true); }
    double marginal_rx(double phi_r) const { return detail::node_marginal(*node_, phi_r, false); }

    const detail::PsdNode &node() const noexcept { return *node_; }
    const detail::NodePtr &node_ptr() const noexcept { return node_; }
    const detail::Cluster &unimodal_cluster() const
    {
        if (!is_unimodal())
            throw unsupported_method("operation requires a uni-modal density");
        return node_->cluster;
    }

    explicit BiAngularPsd(detail::NodePtr node) : node_(std::move(node)) {}

  private:
    detail::NodePtr node_;
};

struct MixtureComponent {
    double weight;
    BiAngularPsd psd;
};

inline BiAngularPsd BiAngularPsd::mixture(const std::vector<MixtureComponent> &components)
{
    detail::require(!components.empty(), "mixture needs at least one component");
    double total = 0.0;
    auto node = std::make_shared<detail::PsdNode>();
    node->kind = Kind::mixture;
    for (std::size_t k = 0; k < components.size(); ++k) {
        const double w = components[k].weight;
        detail::require(std::isfinite(w) && w > 0.0,
                        "mixture weight " + std::to_string(k) + " must be positive");
        total += w;
        node->components.emplace_back(w, components[k].psd.node_);
    }
    detail::require(std::abs(total - 1.0) <= 1e-12,
                    "mixture weights sum to " + std::to_string(total) + ", expected 1");
    return BiAngularPsd(std::move(node));
}

inline std::vector<MixtureComponent> BiAngularPsd::components() const
{
    if (kind() != Kind::mixture)
        throw unsupported_method("components() is only defined for mixtures");
    std::vector<MixtureComponent> out;
    for (const auto &[w, c] : node_->components)
        out.push_back({w, BiAngularPsd(c)});
    return out;
}

/// Separable density P_tx(phi) P_rx(phi_r) built from the marginals of `psd`.
inline BiAngularPsd kronecker_psd(const BiAngularPsd &psd)
{
    auto node = std::make_shared<detail::PsdNode>();
    node->kind = BiAngularPsd::Kind::separable_product;
    // the product of a product's marginals is itself
    node->source = psd.kind() == BiAngularPsd::Kind::separable_product
                       ? psd.node().source
                       : psd.node_ptr();
    return BiAngularPsd(std::move(node));
}

/// Callable marginal density of one link end.
class Marginal {
  public:
    Marginal(BiAngularPsd psd, bool transmit) : psd_(std::move(psd)), transmit_(transmit) {}

    double operator()(double angle) const
    {
        return transmit_ ? psd_.marginal_tx(angle) : psd_.marginal_rx(angle);
    }

  private:
    BiAngularPsd psd_;
    bool transmit_;
};

inline Marginal marginal_tx(const BiAngularPsd &psd) { return Marginal(psd, true); }
inline Marginal marginal_rx(const BiAngularPsd &psd) { return Marginal(psd, false); }

} // namespace nsmimo

#endif

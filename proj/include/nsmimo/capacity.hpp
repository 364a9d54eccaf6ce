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

#ifndef NSMIMO_CAPACITY_HPP
#define NSMIMO_CAPACITY_HPP

#include "correlation.hpp"
#include "errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace nsmimo {

/// Hermitian PSD square root with clamping diagnostics.
struct MatrixSqrt {
    Eigen::MatrixXcd root;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    Eigen::Index clamped = 0; ///< eigenvalues in [-1e-9 lambda_max, 0) set to zero
};

/// U diag(sqrt(lambda)) U^H from the eigendecomposition of a Hermitian PSD matrix.
inline MatrixSqrt psd_sqrt(const Eigen::MatrixXcd &r)
{
    detail::require(r.rows() == r.cols() && r.rows() > 0, "square root needs a non-empty square matrix");
    detail::require(r.allFinite(), "correlation matrix has non-finite entries");
    const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
    const double asym = (r - r.adjoint()).cwiseAbs().maxCoeff();
    detail::require(asym <= 1e-9 * scale,
                    "matrix is not Hermitian (deviation " + std::to_string(asym) + ")");

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(r);
    if (eig.info() != Eigen::Success)
        throw numerical_failure("eigendecomposition of the correlation matrix failed");

    MatrixSqrt out;
    Eigen::VectorXd lambda = eig.eigenvalues();
    out.min_eigenvalue = lambda.minCoeff();
    out.max_eigenvalue = lambda.maxCoeff();
    const double floor = -1e-9 * std::max(out.max_eigenvalue, 0.0);
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        if (lambda(k) < 0.0) {
            if (lambda(k) < floor)
                throw not_positive_semidefinite("correlation matrix has eigenvalue " +
                                                    std::to_string(lambda(k)) + " below -1e-9 * " +
                                                    std::to_string(out.max_eigenvalue),
                                                lambda(k));
            lambda(k) = 0.0;
            ++out.clamped;
        }
    }
    const Eigen::MatrixXcd &u = eig.eigenvectors();
    out.root = u * lambda.cwiseSqrt().asDiagonal() * u.adjoint();
    return out;
}

inline MatrixSqrt psd_sqrt(const ChannelCorrelation &r) { return psd_sqrt(r.entries); }

/// Draws channel matrices with vec(H) = R^{1/2} vec(W), W i.i.d. CN(0, 1).
///
/// Trial k uses its own generator seeded from (seed, k), so a draw depends only on the seed
/// and the trial index. Engines built from different R with the same seed see the same W.
class RealizationEngine {
  public:
    RealizationEngine(const ChannelCorrelation &r, std::uint64_t seed)
        : sqrt_(psd_sqrt(r)), n_t_(r.n_t), n_r_(r.n_r), seed_(seed)
    {
    }

    RealizationEngine(MatrixSqrt root, Eigen::Index n_t, Eigen::Index n_r, std::uint64_t seed)
        : sqrt_(std::move(root)), n_t_(n_t), n_r_(n_r), seed_(seed)
    {
        detail::require(sqrt_.root.rows() == n_t * n_r, "square root size does not match n_t * n_r");
    }

    const Eigen::MatrixXcd &sqrt_r() const noexcept { return sqrt_.root; }
    const MatrixSqrt &root() const noexcept { return sqrt_; }
    Eigen::Index n_t() const noexcept { return n_t_; }
    Eigen::Index n_r() const noexcept { return n_r_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// vec(W) for a trial: n_t * n_r entries with unit-variance circular real/imag parts.
    Eigen::VectorXcd white(std::uint64_t trial) const
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        std::mt19937_64 gen(seq);
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
        Eigen::VectorXcd w(n_t_ * n_r_);
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            const double re = normal(gen);
            const double im = normal(gen);
            w(k) = {re, im};
        }
        return w;
    }

    /// n_r x n_t channel; column-major reshape of vec(H).
    Eigen::MatrixXcd draw_channel(std::uint64_t trial) const
    {
        const Eigen::VectorXcd h = sqrt_.root * white(trial);
        return Eigen::Map<const Eigen::MatrixXcd>(h.data(), n_r_, n_t_);
    }

  private:
    MatrixSqrt sqrt_;
    Eigen::Index n_t_;
    Eigen::Index n_r_;
    std::uint64_t seed_;
};

/// log2 det(I + snr/n_t H H^H) for linear SNR; H is n_r x n_t.
inline double mutual_information(const Eigen::MatrixXcd &h, double snr)
{
    detail::require(std::isfinite(snr) && snr > 0.0, "SNR must be positive and finite");
    detail::require(h.size() > 0, "channel matrix is empty");
    detail::require(h.allFinite(), "channel matrix has non-finite entries");
    const double n_t = static_cast<double>(h.cols());
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(h.rows(), h.rows());
    a.noalias() += (snr / n_t) * h * h.adjoint();
    const Eigen::LLT<Eigen::MatrixXcd> llt(a);
    if (llt.info() != Eigen::Success)
        throw numerical_failure("Cholesky factorization of I + snr/n_t H H^H failed");
    double log_det = 0.0;
    for (Eigen::Index k = 0; k < a.rows(); ++k)
        log_det += std::log(llt.matrixL()(k, k).real());
    return 2.0 * log_det / std::log(2.0);
}

inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

/// Per-SNR Monte Carlo estimate of average mutual information (bits/channel use).
struct CapacityCurve {
    std::vector<double> snr_db;
    std::vector<double> mean_mi;
    std::vector<double> std_err; ///< sample std / sqrt(trials); 0 and flagged when trials = 1
    std::size_t trials = 0;
    std::string scenario_id;

    bool std_err_defined() const noexcept { return trials > 1; }
};

/// Mutual information of every trial at every SNR: rows are trials, columns SNR points.
/// The same channel draw is reused across SNR points. Work is split across threads by
/// trial range; the result does not depend on the thread count.
inline Eigen::MatrixXd mutual_information_samples(const RealizationEngine &engine,
                                                  const std::vector<double> &snr_db,
                                                  std::size_t trials, unsigned threads = 0)
{
    detail::require(trials >= 1, "Monte Carlo needs at least one trial");
    detail::require(!snr_db.empty(), "SNR list is empty");
    std::vector<double> snr(snr_db.size());
    for (std::size_t k = 0; k < snr.size(); ++k) {
        detail::require(std::isfinite(snr_db[k]), "SNR values must be finite");
        snr[k] = db_to_linear(snr_db[k]);
    }

    Eigen::MatrixXd out(static_cast<Eigen::Index>(trials), static_cast<Eigen::Index>(snr.size()));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const Eigen::MatrixXcd h = engine.draw_channel(t);
            for (std::size_t k = 0; k < snr.size(); ++k)
                out(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(k)) = mutual_information(h, snr[k]);
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
    if (threads <= 1) {
        work(0, trials);
        return out;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (trials + threads - 1) / threads;
    for (std::size_t begin = 0; begin < trials; begin += chunk)
        pool.emplace_back(work, begin, std::min(trials, begin + chunk));
    return out;
}

/// Column means and standard errors of a samples matrix, summed in trial order.
inline CapacityCurve summarize(const Eigen::MatrixXd &samples, const std::vector<double> &snr_db,
                               std::string scenario_id = {})
{
    CapacityCurve curve;
    curve.snr_db = snr_db;
    curve.trials = static_cast<std::size_t>(samples.rows());
    curve.scenario_id = std::move(scenario_id);
    const double n = static_cast<double>(samples.rows());
    for (Eigen::Index k = 0; k < samples.cols(); ++k) {
        double sum = 0.0;
        for (Eigen::Index t = 0; t < samples.rows(); ++t)
            sum += samples(t, k);
        const double mean = sum / n;
        double ss = 0.0;
        for (Eigen::Index t = 0; t < samples.rows(); ++t)
            ss += (samples(t, k) - mean) * (samples(t, k) - mean);
        curve.mean_mi.push_back(mean);
        curve.std_err.push_back(samples.rows() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0);
    }
    return curve;
}

inline CapacityCurve average_mi(const RealizationEngine &engine, const std::vector<double> &snr_db,
                                std::size_t trials, std::string scenario_id = {}, unsigned threads = 0)
{
    return summarize(mutual_information_samples(engine, snr_db, trials, threads), snr_db,
                     std::move(scenario_id));
}

} // namespace nsmimo

#endif

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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run one (1..9)
//
// Exit status is non-zero when any selected criterion fails.

#include "scenario.hpp"

#include <nsmimo/nsmimo.hpp>

#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nsmimo;
using cli::Variant;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string &what)
    {
        pass = pass && ok;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

std::string fmt(const char *format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *format, ...)
{
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double deg(double d) { return deg_to_rad(d); }

double max_abs(const Eigen::MatrixXcd &m) { return m.cwiseAbs().maxCoeff(); }

cli::Scenario shipped(const char *name)
{
    return cli::load_scenario(std::string(NSMIMO_SCENARIO_DIR) + "/" + name);
}

const cli::CaseSpec &case_named(const cli::Scenario &s, const std::string &id)
{
    for (const auto &c : s.cases)
        if (c.id == id)
            return c;
    throw std::runtime_error("scenario " + s.id + " has no case " + id);
}

// Curves for several variants of one case, sharing the seed (common random numbers).
std::vector<CapacityCurve> curves(const cli::Scenario &s, const BiAngularPsd &psd,
                                  const std::vector<Variant> &variants)
{
    std::vector<CapacityCurve> out;
    for (Variant v : variants)
        out.push_back(average_mi(RealizationEngine(cli::variant_correlation(s, psd, v), s.seed), s.snr_db,
                                 s.trials, s.id + "/" + cli::to_string(v), s.threads));
    return out;
}

double combined(const CapacityCurve &a, const CapacityCurve &b, std::size_t k)
{
    return std::hypot(a.std_err[k], b.std_err[k]);
}

// ---- 1 ----------------------------------------------------------------------------------
Outcome criterion1()
{
    Outcome o;
    const int m = mode_count(0.5);
    const auto j = configuration_matrix(uniform_circular_array(3, 0.5), m, ArraySide::receiver);
    o.check(2 * m + 1 == 11, fmt("aperture 0.5 wavelengths: M = %d, 2M+1 = %d (expected 11)", m, 2 * m + 1));
    o.check(j.modes() == 11, fmt("configuration matrix has %ld mode columns", static_cast<long>(j.modes())));
    return o;
}

// ---- 2 ----------------------------------------------------------------------------------
Outcome criterion2()
{
    Outcome o;
    const auto uca = uniform_circular_array(3, 0.5);
    const int m = mode_count(uca);
    const PsdParams iso{0.0, 0.0, pi, pi, 0.0};
    const auto psd = BiAngularPsd::uniform_limited(iso);
    const auto jt = configuration_matrix(uca, m, ArraySide::transmitter);
    const auto jr = configuration_matrix(uca, m, ArraySide::receiver);
    const Eigen::MatrixXcd expected =
        kronecker(jt.entries.conjugate() * jt.entries.transpose(), jr.entries * jr.entries.adjoint());
    for (auto method : {RsMethod::closed_form, RsMethod::quadrature}) {
        const char *name = method == RsMethod::closed_form ? "closed form" : "quadrature";
        const auto rs = build_rs(psd, m, m, method);
        const Eigen::Index n = rs.entries.rows();
        const double off = max_abs(rs.entries - Eigen::MatrixXcd::Identity(n, n));
        o.check(off <= 1e-10, fmt("%s R_S: max |R_S - I| = %.2e (<= 1e-10)", name, off));
        const auto r = build_r(jt, jr, rs);
        const double rel = (r.entries - expected).norm() / expected.norm();
        o.check(rel <= 1e-9, fmt("%s R: Frobenius rel. error vs factorized form = %.2e (<= 1e-9)", name, rel));
    }
    return o;
}

// ---- 3 ----------------------------------------------------------------------------------
Outcome criterion3()
{
    Outcome o;
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> angle(-pi, pi);
    const int draws = 50, reach = 5;
    struct Family {
        PsdFamily family;
        double min_deg, max_deg, max_rho, tol;
    };
    const Family families[] = {
        {PsdFamily::uniform_limited, 5.0, 180.0, 1.0, 1e-8},
        {PsdFamily::laplacian, 2.0, 15.0, 0.95, 1e-3},
        {PsdFamily::gaussian, 2.0, 15.0, 0.95, 1e-3},
    };
    for (const auto &f : families) {
        std::uniform_real_distribution<double> spread(deg(f.min_deg), deg(f.max_deg));
        std::uniform_real_distribution<double> rho(-f.max_rho, f.max_rho);
        double worst = 0.0;
        for (int k = 0; k < draws; ++k) {
            const PsdParams p{angle(rng), angle(rng), spread(rng), spread(rng), rho(rng)};
            const auto quad = modal_coefficients(BiAngularPsd::unimodal(f.family, p), reach, reach);
            const auto closed = modal_coefficients_closed_form(f.family, p, reach, reach);
            worst = std::max(worst, max_abs(quad.values() - closed.values()));
        }
        o.check(worst <= f.tol, fmt("%s: %d draws, spreads %.0f..%.0f deg, max |closed - quadrature| = %.2e (<= %.0e)",
                                    std::string(to_string(f.family)).c_str(), draws, f.min_deg, f.max_deg,
                                    worst, f.tol));
    }
    return o;
}

// ---- 4 ----------------------------------------------------------------------------------
Outcome criterion4()
{
    Outcome o;
    const int m = mode_count(0.5);
    const PsdParams p{deg(20), deg(-50), deg(10), deg(10), 0.0};
    for (auto family : {PsdFamily::uniform_limited, PsdFamily::gaussian, PsdFamily::laplacian}) {
        const std::string name(to_string(family));
        const auto psd = BiAngularPsd::unimodal(family, p);
        const auto exact = build_rs(psd, m, m, RsMethod::quadrature);
        const auto kron = build_rs_kronecker(psd, m, m);
        const double d = max_abs(exact.entries - kron.entries);
        o.check(d <= 1e-6, fmt("%s rho=0: max |build_rs - build_rs_kronecker| = %.2e (<= 1e-6)", name.c_str(), d));

        // block corollaries of a separable density, asserted on the exact matrix
        const Eigen::VectorXcd tx = transmit_modal_correlation(psd, 2 * m);
        const Eigen::MatrixXcd f_r = build_rs_kronecker(psd, 0, m).entries;
        double same_diag = 0.0, off_blocks = 0.0, rx_block = 0.0;
        for (int a = -m; a <= m; ++a) {
            same_diag = std::max(same_diag, max_abs(exact.block(a, a) - exact.block(-m, -m)));
            rx_block = std::max(rx_block, max_abs(exact.block(a, a) - f_r));
            for (int b = -m; b <= m; ++b)
                if (a != b)
                    off_blocks = std::max(off_blocks, max_abs(exact.block(a, b) - tx(a - b + 2 * m) * f_r));
        }
        o.check(same_diag <= 1e-6, fmt("%s rho=0: diagonal blocks identical, max dev %.2e", name.c_str(), same_diag));
        o.check(rx_block <= 1e-6, fmt("%s rho=0: diagonal blocks equal F_R, max dev %.2e", name.c_str(), rx_block));
        o.check(off_blocks <= 1e-6,
                fmt("%s rho=0: off-diagonal blocks equal gamma_{m,m'} F_R, max dev %.2e", name.c_str(), off_blocks));
    }
    return o;
}

// ---- 5 ----------------------------------------------------------------------------------
struct SingleClusterCurves {
    std::vector<CapacityCurve> wide;   // sigma_r = 30: exact, kronecker, iid
    std::vector<CapacityCurve> narrow; // sigma_r = 10
};

SingleClusterCurves single_cluster_curves()
{
    const auto s = shipped("single_cluster.json");
    const std::vector<Variant> all{Variant::exact, Variant::kronecker, Variant::iid};
    SingleClusterCurves c;
    c.wide = curves(s, cli::build_psd(case_named(s, "sigma_r_30").psd, s.quadrature), all);
    c.narrow = curves(s, cli::build_psd(case_named(s, "sigma_r_10").psd, s.quadrature), all);
    return c;
}

void describe(Outcome &o, const char *label, const std::vector<CapacityCurve> &c)
{
    for (std::size_t k = 0; k < c[0].snr_db.size(); ++k)
        o.notes.push_back(fmt("     %s %4.0f dB: exact %.4f  kron %.4f  iid %.4f  (kron-exact %+.4f, comb se %.4f)",
                              label, c[0].snr_db[k], c[0].mean_mi[k], c[1].mean_mi[k], c[2].mean_mi[k],
                              c[1].mean_mi[k] - c[0].mean_mi[k], combined(c[0], c[1], k)));
}

Outcome criterion5()
{
    Outcome o;
    const auto s = shipped("single_cluster.json");
    o.notes.push_back(fmt("     %zu trials, seed %llu, common random numbers across variants", s.trials,
                          static_cast<unsigned long long>(s.seed)));
    const auto c = single_cluster_curves();
    describe(o, "sigma_r=30", c.wide);
    describe(o, "sigma_r=10", c.narrow);

    for (std::size_t k = 0; k < s.snr_db.size(); ++k) {
        const double gap = c.wide[1].mean_mi[k] - c.wide[0].mean_mi[k];
        const double bound = std::max(0.3, 3.0 * combined(c.wide[0], c.wide[1], k));
        o.check(std::abs(gap) <= bound,
                fmt("(a) sigma_r=30, %.0f dB: |kron - exact| = %.3f <= %.3f", s.snr_db[k], std::abs(gap), bound));
    }
    for (std::size_t k = 0; k < s.snr_db.size(); ++k) {
        if (s.snr_db[k] < 20.0)
            continue;
        const double gap = c.narrow[1].mean_mi[k] - c.narrow[0].mean_mi[k];
        const double se = combined(c.narrow[0], c.narrow[1], k);
        o.check(gap >= -2.0 * se,
                fmt("(b) sigma_r=10, %.0f dB: kron - exact = %+.3f >= -2 se = %.3f", s.snr_db[k], gap, -2.0 * se));
        const double iid_gap = c.narrow[2].mean_mi[k] - c.narrow[0].mean_mi[k];
        const double ratio = std::abs(gap) / iid_gap;
        o.check(ratio <= 0.25, fmt("(b) sigma_r=10, %.0f dB: |kron - exact| / (iid - exact) = %.3f <= 0.25",
                                   s.snr_db[k], ratio));
    }
    for (const auto *set : {&c.wide, &c.narrow}) {
        const char *label = set == &c.wide ? "sigma_r=30" : "sigma_r=10";
        double margin = 1e300;
        for (std::size_t k = 0; k < s.snr_db.size(); ++k)
            for (int v = 0; v < 2; ++v)
                margin = std::min(margin, (*set)[2].mean_mi[k] - (*set)[static_cast<std::size_t>(v)].mean_mi[k]);
        o.check(margin > 0.0, fmt("(c) %s: i.i.d. above exact and Kronecker at every SNR, min margin %.3f bits",
                                  label, margin));
    }
    return o;
}

// ---- 6 ----------------------------------------------------------------------------------
Outcome criterion6()
{
    Outcome o;
    const auto s = shipped("three_clusters.json");
    const auto mix = curves(s, cli::build_psd(s.cases.at(0).psd, s.quadrature),
                            {Variant::exact, Variant::kronecker, Variant::iid});
    describe(o, "3-cluster", mix);
    const auto narrow = single_cluster_curves().narrow;
    for (std::size_t k = 0; k < s.snr_db.size(); ++k) {
        if (s.snr_db[k] < 20.0)
            continue;
        const double gap = mix[1].mean_mi[k] - mix[0].mean_mi[k];
        const double se = combined(mix[0], mix[1], k);
        o.check(gap > 3.0 * se,
                fmt("%.0f dB: kron - exact = %+.3f > 3 se = %.3f", s.snr_db[k], gap, 3.0 * se));
        // matched SNR in the uni-modal scenario
        std::size_t j = 0;
        while (j < narrow[0].snr_db.size() && narrow[0].snr_db[j] != s.snr_db[k])
            ++j;
        if (j == narrow[0].snr_db.size()) {
            o.check(false, fmt("%.0f dB missing from the uni-modal sweep", s.snr_db[k]));
            continue;
        }
        const double uni = narrow[1].mean_mi[j] - narrow[0].mean_mi[j];
        o.check(gap > uni, fmt("%.0f dB: mixture gap %+.3f > uni-modal sigma_r=10 gap %+.3f", s.snr_db[k], gap, uni));
    }
    return o;
}

// ---- 7 ----------------------------------------------------------------------------------
Outcome criterion7()
{
    Outcome o;
    const auto three = shipped("three_clusters.json");
    const auto mix = cli::build_psd(three.cases.at(0).psd, three.quadrature);
    const int exact = count_local_maxima(tabulate_psd(mix, 181));
    const int kron = count_local_maxima(tabulate_psd(kronecker_psd(mix), 181));
    o.check(exact == 3, fmt("3-cluster exact PSD, 181x181: %d local maxima (expected 3)", exact));
    o.check(kron == 9, fmt("3-cluster Kronecker PSD, 181x181: %d local maxima (expected 9)", kron));
    const auto single = shipped("single_cluster.json");
    for (const auto &c : single.cases) {
        const int n = count_local_maxima(tabulate_psd(kronecker_psd(cli::build_psd(c.psd, single.quadrature)), 181));
        o.check(n == 1, fmt("uni-modal %s Kronecker PSD: %d local maxima (expected 1)", c.id.c_str(), n));
    }
    return o;
}

// ---- 8 ----------------------------------------------------------------------------------
Outcome criterion8()
{
    Outcome o;
    const auto single = shipped("single_cluster.json");
    const auto three = shipped("three_clusters.json");
    struct Item {
        std::string label;
        ChannelCorrelation r;
    };
    std::vector<Item> items;
    for (const auto &c : single.cases)
        items.push_back({"single_cluster " + c.id + " exact",
                         cli::variant_correlation(single, cli::build_psd(c.psd, single.quadrature), Variant::exact)});
    items.push_back({"three_clusters mixture kronecker",
                     cli::variant_correlation(three, cli::build_psd(three.cases[0].psd, three.quadrature),
                                              Variant::kronecker)});

    const int draws = 100000;
    for (const auto &it : items) {
        const RealizationEngine engine(it.r, 314159);
        const auto &root = engine.sqrt_r();
        const double recon = (root * root.adjoint() - it.r.entries).norm() / it.r.entries.norm();
        o.check(recon <= 1e-8, fmt("%s: sqrt reconstruction Frobenius rel. error %.2e (<= 1e-8)", it.label.c_str(), recon));

        const Eigen::Index n = it.r.entries.rows();
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
        Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(n, n);
        for (int t = 0; t < draws; ++t) {
            const Eigen::MatrixXcd h = engine.draw_channel(static_cast<std::uint64_t>(t));
            const Eigen::Map<const Eigen::VectorXcd> v(h.data(), n);
            const Eigen::MatrixXcd outer = v * v.adjoint();
            sum += outer;
            sum_sq += outer.cwiseAbs2();
        }
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const std::complex<double> mean = sum(i, j) / double(draws);
                const double var = sum_sq(i, j) / draws - std::norm(mean);
                const double se = std::sqrt(std::max(var, 0.0) / draws);
                worst = std::max(worst, std::abs(mean - it.r.entries(i, j)) / se);
            }
        o.check(worst <= 5.0, fmt("%s: %d draws, worst entry error %.2f standard errors (<= 5)", it.label.c_str(),
                                  draws, worst));
    }
    return o;
}

// ---- 9 ----------------------------------------------------------------------------------
std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion9()
{
    Outcome o;
    const auto base = std::filesystem::temp_directory_path() / "nsmimo_acceptance_determinism";
    std::filesystem::remove_all(base);
    for (const char *name : {"single_cluster.json", "three_clusters.json"}) {
        auto s = shipped(name);
        s.trials = 2000;
        std::ostringstream log;
        s.out_dir = base / (std::string(name) + ".a");
        s.threads = 1;
        const auto a = cli::run_scenario(s, log);
        s.out_dir = base / (std::string(name) + ".b");
        s.threads = 0;
        const auto b = cli::run_scenario(s, log);
        std::size_t same = 0, csv = 0;
        for (std::size_t k = 0; k < a.files.size() && k < b.files.size(); ++k) {
            ++csv;
            same += slurp(a.files[k]) == slurp(b.files[k]) ? 1 : 0;
        }
        o.check(a.files.size() == b.files.size() && same == csv && csv > 0,
                fmt("%s, seed %llu, two runs: %zu/%zu CSV files byte-identical", name,
                    static_cast<unsigned long long>(s.seed), same, csv));
    }
    std::filesystem::remove_all(base);
    return o;
}

} // namespace

int main(int argc, char **argv)
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"mode count", criterion1},
        {"isotropic reduction", criterion2},
        {"closed form vs quadrature oracle", criterion3},
        {"Kronecker equivalence at rho = 0", criterion4},
        {"single-cluster capacity comparison", criterion5},
        {"three-cluster capacity comparison", criterion6},
        {"virtual clusters", criterion7},
        {"realization fidelity", criterion8},
        {"determinism", criterion9},
    };

    int only = 0;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc)
            only = std::atoi(argv[++k]);
        else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
        return 2;
    }

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (only != 0 && static_cast<int>(k) + 1 != only)
            continue;
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception &e) {
            out.check(false, std::string("exception: ") + e.what());
        }
        for (const auto &n : out.notes)
            std::printf("  %s\n", n.c_str());
        std::printf("criterion %zu (%s): %s\n", k + 1, criteria[k].first, out.pass ? "PASS" : "FAIL");
        std::fflush(stdout);
        failed += out.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

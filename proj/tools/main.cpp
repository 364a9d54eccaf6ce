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

// Command-line front end. Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include "scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

nsmimo::cli::Variant parse_variant(const std::string &name)
{
    if (name == "exact")
        return nsmimo::cli::Variant::exact;
    if (name == "kronecker")
        return nsmimo::cli::Variant::kronecker;
    throw nsmimo::cli::config_error("--variant", "expected 'exact' or 'kronecker'");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Correlation and capacity experiments for MIMO channels with non-separable scattering"};
    app.set_version_flag("--version", std::string(nsmimo::version));
    app.require_subcommand(1);

    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> out_dir;
    std::optional<unsigned> threads;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("config", config, "Scenario file (JSON)")->required();
        sub->add_option("--seed", seed, "Override the scenario seed");
        sub->add_option("--out-dir", out_dir, "Override the output directory");
        sub->add_option("--threads", threads, "Worker threads (0 = all cores)");
    };

    auto *run = app.add_subcommand("run", "Build correlations and sweep average mutual information");
    add_common(run);
    run->add_option("--trials", trials, "Override the Monte Carlo trial count");

    std::string variant = "exact";
    int resolution = 181;
    std::optional<std::string> case_id;
    auto *grid = app.add_subcommand("export-psd", "Tabulate the scattering density on a square angle grid");
    add_common(grid);
    grid->add_option("--variant", variant, "exact or kronecker")->capture_default_str();
    grid->add_option("--resolution", resolution, "Grid points per axis over [-180, 180] degrees")
        ->capture_default_str();
    grid->add_option("--case", case_id, "Only this case id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        auto scenario = nsmimo::cli::load_scenario(config);
        nsmimo::cli::RunOverrides overrides;
        overrides.seed = seed;
        overrides.trials = trials;
        if (out_dir)
            overrides.out_dir = *out_dir;
        overrides.threads = threads;
        nsmimo::cli::apply(scenario, overrides);

        if (run->parsed()) {
            const auto report = nsmimo::cli::run_scenario(scenario, std::cerr);
            for (const auto &f : report.files)
                std::cout << f.string() << '\n';
            std::cout << report.manifest.string() << '\n';
        } else {
            for (const auto &r : nsmimo::cli::export_psd_grids(scenario, parse_variant(variant), resolution,
                                                               case_id))
                std::cout << r.file.string() << " (" << r.local_maxima << " local maxima)\n";
        }
        return exit_ok;
    } catch (const nsmimo::cli::config_error &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const nsmimo::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const nsmimo::numerical_failure &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const nsmimo::degenerate_distribution &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

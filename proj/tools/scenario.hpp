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

// Scenario files and the runs they describe.

#ifndef NSMIMO_TOOLS_SCENARIO_HPP
#define NSMIMO_TOOLS_SCENARIO_HPP

#include <nsmimo/nsmimo.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsmimo::cli {

inline constexpr int config_format_version = 1;

/// Schema or validation problem in a scenario file; `field` is a JSON path like cases[1].psd.rho.
class config_error : public std::runtime_error {
  public:
    config_error(std::string field, const std::string &what)
        : std::runtime_error(field + ": " + what), field_(std::move(field))
    {
    }
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

enum class Variant { exact, kronecker, iid };

std::string to_string(Variant v);

/// A uni-modal family with parameters, or a weighted mixture of further specs.
struct PsdSpec {
    std::optional<PsdFamily> family; ///< empty for a mixture
    PsdParams params;
    std::vector<std::pair<double, PsdSpec>> components;

    bool is_mixture() const noexcept { return !family.has_value(); }
};

struct CaseSpec {
    std::string id;
    PsdSpec psd;
};

struct PsdGridRequest {
    std::vector<Variant> variants;
    int resolution = 181;
};

struct Scenario {
    std::string id;
    ArrayGeometry tx_array{{AntennaPosition(0.0, 0.0)}};
    ArrayGeometry rx_array{{AntennaPosition(0.0, 0.0)}};
    int m_t = 0;
    int m_r = 0;
    std::vector<CaseSpec> cases;
    RsMethod method = RsMethod::quadrature;
    RefinementPolicy quadrature;
    std::vector<double> snr_db;
    std::size_t trials = 20000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::vector<Variant> variants;
    std::filesystem::path out_dir = "out";
    std::optional<PsdGridRequest> psd_grid;
    bool correlation_matrices = false;
    nlohmann::json source; ///< the parsed document, echoed into the manifest
};

/// Validates every field before anything is computed; throws config_error.
Scenario parse_scenario(const nlohmann::json &doc);
Scenario load_scenario(const std::filesystem::path &path);

BiAngularPsd build_psd(const PsdSpec &spec, const RefinementPolicy &policy);

/// Channel correlation of one variant: the model built from `psd`, its separable
/// approximation, or the identity for i.i.d. entries.
ChannelCorrelation variant_correlation(const Scenario &scenario, const BiAngularPsd &psd, Variant which);

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::filesystem::path> out_dir;
    std::optional<unsigned> threads;
};

void apply(Scenario &scenario, const RunOverrides &overrides);

struct RunReport {
    std::vector<std::filesystem::path> files;
    std::filesystem::path manifest;
};

/// Capacity curves for every case and variant, optional grids and R matrices, and a manifest.
RunReport run_scenario(const Scenario &scenario, std::ostream &log);

struct GridReport {
    std::filesystem::path file;
    std::string case_id;
    int local_maxima = 0;
};

/// Tabulates the exact or Kronecker density of each case (or only `case_id`).
std::vector<GridReport> export_psd_grids(const Scenario &scenario, Variant which, int resolution,
                                         const std::optional<std::string> &case_id = std::nullopt);

} // namespace nsmimo::cli

#endif

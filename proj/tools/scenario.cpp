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

#include "scenario.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace nsmimo::cli {

using nlohmann::json;

std::string to_string(Variant v)
{
    switch (v) {
    case Variant::exact:
        return "exact";
    case Variant::kronecker:
        return "kronecker";
    case Variant::iid:
        return "iid";
    }
    return "unknown";
}

namespace {

// ---- schema helpers -----------------------------------------------------------------

std::string join(const std::string &path, const std::string &key)
{
    return path.empty() ? key : path + "." + key;
}

std::string item(const std::string &path, std::size_t k)
{
    return path + "[" + std::to_string(k) + "]";
}

void only_keys(const json &obj, const std::string &path, std::initializer_list<const char *> allowed)
{
    if (!obj.is_object())
        throw config_error(path.empty() ? "<root>" : path, "expected an object");
    for (const auto &[key, value] : obj.items()) {
        bool known = false;
        for (const char *a : allowed)
            known = known || key == a;
        if (!known)
            throw config_error(join(path, key), "unknown field");
    }
}

const json &required(const json &obj, const std::string &path, const char *key)
{
    if (!obj.contains(key))
        throw config_error(join(path, key), "missing required field");
    return obj.at(key);
}

double number(const json &v, const std::string &path)
{
    if (!v.is_number())
        throw config_error(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw config_error(path, "must be finite");
    return x;
}

long long integer(const json &v, const std::string &path, long long lo)
{
    if (!v.is_number_integer())
        throw config_error(path, "expected an integer");
    const long long x = v.get<long long>();
    if (x < lo)
        throw config_error(path, "must be at least " + std::to_string(lo));
    return x;
}

std::string text(const json &v, const std::string &path)
{
    if (!v.is_string())
        throw config_error(path, "expected a string");
    return v.get<std::string>();
}

Variant variant_of(const json &v, const std::string &path, bool allow_iid)
{
    const std::string s = text(v, path);
    if (s == "exact")
        return Variant::exact;
    if (s == "kronecker")
        return Variant::kronecker;
    if (s == "iid" && allow_iid)
        return Variant::iid;
    throw config_error(path, "unknown variant '" + s + "'");
}

std::vector<Variant> variant_list(const json &v, const std::string &path, bool allow_iid)
{
    if (!v.is_array() || v.empty())
        throw config_error(path, "expected a non-empty list");
    std::vector<Variant> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Variant x = variant_of(v[k], item(path, k), allow_iid);
        for (Variant seen : out)
            if (seen == x)
                throw config_error(item(path, k), "duplicate variant '" + to_string(x) + "'");
        out.push_back(x);
    }
    return out;
}

// ---- sections -----------------------------------------------------------------------

ArrayGeometry parse_array(const json &obj, const std::string &path)
{
    const std::string type = text(required(obj, path, "type"), join(path, "type"));
    try {
        if (type == "uca") {
            only_keys(obj, path, {"type", "elements", "radius"});
            const auto n = integer(required(obj, path, "elements"), join(path, "elements"), 1);
            const double r = number(required(obj, path, "radius"), join(path, "radius"));
            if (r < 0.0)
                throw config_error(join(path, "radius"), "must be non-negative");
            return uniform_circular_array(static_cast<std::size_t>(n), r);
        }
        if (type == "custom") {
            only_keys(obj, path, {"type", "positions", "aperture_radius"});
            const json &list = required(obj, path, "positions");
            const std::string lp = join(path, "positions");
            if (!list.is_array() || list.empty())
                throw config_error(lp, "expected a non-empty list");
            std::vector<AntennaPosition> positions;
            double widest = 0.0;
            for (std::size_t k = 0; k < list.size(); ++k) {
                const std::string p = item(lp, k);
                only_keys(list[k], p, {"radius", "azimuth_deg"});
                const double r = number(required(list[k], p, "radius"), join(p, "radius"));
                if (r < 0.0)
                    throw config_error(join(p, "radius"), "must be non-negative");
                const double az = number(required(list[k], p, "azimuth_deg"), join(p, "azimuth_deg"));
                positions.emplace_back(r, deg_to_rad(az));
                widest = std::max(widest, r);
            }
            double aperture = widest;
            if (obj.contains("aperture_radius")) {
                aperture = number(obj.at("aperture_radius"), join(path, "aperture_radius"));
                if (aperture < widest)
                    throw config_error(join(path, "aperture_radius"),
                                       "smaller than the outermost antenna radius");
            }
            return ArrayGeometry(std::move(positions), aperture);
        }
    } catch (const nsmimo::invalid_argument &e) {
        throw config_error(path, e.what());
    }
    throw config_error(join(path, "type"), "expected 'uca' or 'custom'");
}

PsdSpec parse_psd(const json &obj, const std::string &path)
{
    const std::string family = text(required(obj, path, "family"), join(path, "family"));
    PsdSpec spec;
    if (family == "mixture") {
        only_keys(obj, path, {"family", "components"});
        const json &list = required(obj, path, "components");
        const std::string lp = join(path, "components");
        if (!list.is_array() || list.empty())
            throw config_error(lp, "expected a non-empty list");
        std::size_t weighted = 0;
        for (std::size_t k = 0; k < list.size(); ++k)
            weighted += list[k].is_object() && list[k].contains("weight") ? 1 : 0;
        if (weighted != 0 && weighted != list.size())
            throw config_error(lp, "give a weight for every component or for none");
        double total = 0.0;
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string p = item(lp, k);
            only_keys(list[k], p, {"weight", "psd"});
            double w = 1.0 / static_cast<double>(list.size());
            if (weighted != 0) {
                w = number(list[k].at("weight"), join(p, "weight"));
                if (!(w > 0.0))
                    throw config_error(join(p, "weight"), "must be positive");
            }
            total += w;
            spec.components.emplace_back(w, parse_psd(required(list[k], p, "psd"), join(p, "psd")));
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw config_error(lp, "weights sum to " + std::to_string(total) + ", expected 1");
        return spec;
    }

    if (family == "uniform-limited")
        spec.family = PsdFamily::uniform_limited;
    else if (family == "gaussian")
        spec.family = PsdFamily::gaussian;
    else if (family == "laplacian")
        spec.family = PsdFamily::laplacian;
    else
        throw config_error(join(path, "family"), "unknown family '" + family + "'");

    only_keys(obj, path, {"family", "mean_departure_deg", "mean_arrival_deg", "spread_t_deg",
                          "spread_r_deg", "rho"});
    auto angle = [&](const char *key) { return deg_to_rad(number(required(obj, path, key), join(path, key))); };
    spec.params.mean_departure = angle("mean_departure_deg");
    spec.params.mean_arrival = angle("mean_arrival_deg");
    spec.params.spread_t = angle("spread_t_deg");
    spec.params.spread_r = angle("spread_r_deg");
    spec.params.rho = number(required(obj, path, "rho"), join(path, "rho"));

    try {
        validate(*spec.family, spec.params);
    } catch (const nsmimo::invalid_argument &e) {
        // module messages start with the parameter name; map it back to the config key
        const std::string msg = e.what();
        static const std::pair<const char *, const char *> keys[] = {
            {"mean_departure", "mean_departure_deg"}, {"mean_arrival", "mean_arrival_deg"},
            {"spread_t", "spread_t_deg"},             {"spread_r", "spread_r_deg"},
            {"rho", "rho"}};
        for (const auto &[param, key] : keys)
            if (msg.rfind(std::string(param) + ":", 0) == 0)
                throw config_error(join(path, key), msg.substr(std::string(param).size() + 2));
        throw config_error(path, msg);
    }
    return spec;
}

json spec_to_json(const PsdSpec &spec)
{
    if (spec.is_mixture()) {
        json list = json::array();
        for (const auto &[w, c] : spec.components)
            list.push_back({{"weight", w}, {"psd", spec_to_json(c)}});
        return {{"family", "mixture"}, {"components", list}};
    }
    return {{"family", std::string(nsmimo::to_string(*spec.family))},
            {"mean_departure_deg", rad_to_deg(spec.params.mean_departure)},
            {"mean_arrival_deg", rad_to_deg(spec.params.mean_arrival)},
            {"spread_t_deg", rad_to_deg(spec.params.spread_t)},
            {"spread_r_deg", rad_to_deg(spec.params.spread_r)},
            {"rho", spec.params.rho}};
}

json array_to_json(const ArrayGeometry &g)
{
    json list = json::array();
    for (const auto &p : g.positions())
        list.push_back({{"radius", p.radius()}, {"azimuth_deg", rad_to_deg(p.azimuth())}});
    return {{"positions", list}, {"aperture_radius", g.aperture_radius()}};
}

// ---- output helpers -----------------------------------------------------------------

std::filesystem::path output_file(const Scenario &s, const std::string &case_id, Variant v,
                                   const char *what)
{
    return s.out_dir / (s.id + "_" + case_id + "_" + to_string(v) + "_" + what + ".csv");
}

template <class Writer>
void write_file(const std::filesystem::path &path, Writer &&writer)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BiAngularPsd variant_psd(const BiAngularPsd &psd, Variant v)
{
    return v == Variant::kronecker ? kronecker_psd(psd) : psd;
}

bool is_valid_id(const std::string &id)
{
    if (id.empty())
        return false;
    for (char c : id)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.'))
            return false;
    return true;
}

} // namespace

// ---- public API -----------------------------------------------------------------------

Scenario parse_scenario(const json &doc)
{
    only_keys(doc, "", {"format_version", "scenario_id", "tx_array", "rx_array", "mode_half_width",
                        "psd", "cases", "method", "quadrature", "snr_db", "trials", "seed",
                        "threads", "variants", "outputs"});
    Scenario s;
    s.source = doc;

    const auto version = integer(required(doc, "", "format_version"), "format_version", 1);
    if (version != config_format_version)
        throw config_error("format_version", "unsupported version " + std::to_string(version) +
                                                 ", expected " + std::to_string(config_format_version));
    s.id = text(required(doc, "", "scenario_id"), "scenario_id");
    if (!is_valid_id(s.id))
        throw config_error("scenario_id", "use letters, digits, '-', '_' or '.'");

    s.tx_array = parse_array(required(doc, "", "tx_array"), "tx_array");
    s.rx_array = parse_array(required(doc, "", "rx_array"), "rx_array");
    s.m_t = mode_count(s.tx_array);
    s.m_r = mode_count(s.rx_array);
    if (doc.contains("mode_half_width")) {
        const json &m = doc.at("mode_half_width");
        only_keys(m, "mode_half_width", {"tx", "rx"});
        if (m.contains("tx"))
            s.m_t = static_cast<int>(integer(m.at("tx"), "mode_half_width.tx", 0));
        if (m.contains("rx"))
            s.m_r = static_cast<int>(integer(m.at("rx"), "mode_half_width.rx", 0));
    }

    if (doc.contains("psd") == doc.contains("cases"))
        throw config_error("psd", "give exactly one of 'psd' or 'cases'");
    if (doc.contains("psd")) {
        s.cases.push_back({"main", parse_psd(doc.at("psd"), "psd")});
    } else {
        const json &list = doc.at("cases");
        if (!list.is_array() || list.empty())
            throw config_error("cases", "expected a non-empty list");
        std::set<std::string> ids;
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string p = item("cases", k);
            only_keys(list[k], p, {"id", "psd"});
            CaseSpec c;
            c.id = text(required(list[k], p, "id"), join(p, "id"));
            if (!is_valid_id(c.id))
                throw config_error(join(p, "id"), "use letters, digits, '-', '_' or '.'");
            if (!ids.insert(c.id).second)
                throw config_error(join(p, "id"), "duplicate case id '" + c.id + "'");
            c.psd = parse_psd(required(list[k], p, "psd"), join(p, "psd"));
            s.cases.push_back(std::move(c));
        }
    }

    if (doc.contains("method")) {
        const std::string m = text(doc.at("method"), "method");
        if (m == "quadrature")
            s.method = RsMethod::quadrature;
        else if (m == "closed-form")
            s.method = RsMethod::closed_form;
        else
            throw config_error("method", "expected 'quadrature' or 'closed-form'");
    }
    if (s.method == RsMethod::closed_form)
        for (std::size_t k = 0; k < s.cases.size(); ++k)
            if (s.cases[k].psd.is_mixture())
                throw config_error("method", "closed form is not available for the mixture in case '" +
                                                 s.cases[k].id + "'");

    if (doc.contains("quadrature")) {
        const json &q = doc.at("quadrature");
        only_keys(q, "quadrature", {"tolerance", "max_level"});
        if (q.contains("tolerance")) {
            s.quadrature.tolerance = number(q.at("tolerance"), "quadrature.tolerance");
            if (!(s.quadrature.tolerance > 0.0))
                throw config_error("quadrature.tolerance", "must be positive");
        }
        if (q.contains("max_level"))
            s.quadrature.max_level = static_cast<int>(integer(q.at("max_level"), "quadrature.max_level", 0));
    }

    if (doc.contains("snr_db")) {
        const json &list = doc.at("snr_db");
        if (!list.is_array() || list.empty())
            throw config_error("snr_db", "expected a non-empty list");
        for (std::size_t k = 0; k < list.size(); ++k)
            s.snr_db.push_back(number(list[k], item("snr_db", k)));
    } else {
        for (int db = 0; db <= 30; db += 5)
            s.snr_db.push_back(db);
    }

    if (doc.contains("trials"))
        s.trials = static_cast<std::size_t>(integer(doc.at("trials"), "trials", 1));
    if (doc.contains("seed"))
        s.seed = static_cast<std::uint64_t>(integer(doc.at("seed"), "seed", 0));
    if (doc.contains("threads"))
        s.threads = static_cast<unsigned>(integer(doc.at("threads"), "threads", 0));

    s.variants = doc.contains("variants") ? variant_list(doc.at("variants"), "variants", true)
                                          : std::vector<Variant>{Variant::exact, Variant::kronecker, Variant::iid};

    if (doc.contains("outputs")) {
        const json &o = doc.at("outputs");
        only_keys(o, "outputs", {"dir", "psd_grid", "correlation_matrices"});
        if (o.contains("dir"))
            s.out_dir = text(o.at("dir"), "outputs.dir");
        if (o.contains("psd_grid")) {
            const json &g = o.at("psd_grid");
            only_keys(g, "outputs.psd_grid", {"variants", "resolution"});
            PsdGridRequest req;
            req.variants = g.contains("variants")
                               ? variant_list(g.at("variants"), "outputs.psd_grid.variants", false)
                               : std::vector<Variant>{Variant::exact, Variant::kronecker};
            if (g.contains("resolution"))
                req.resolution = static_cast<int>(integer(g.at("resolution"), "outputs.psd_grid.resolution", 3));
            s.psd_grid = req;
        }
        if (o.contains("correlation_matrices")) {
            if (!o.at("correlation_matrices").is_boolean())
                throw config_error("outputs.correlation_matrices", "expected true or false");
            s.correlation_matrices = o.at("correlation_matrices").get<bool>();
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("<file>", "cannot read " + path.string());
    json doc;
    try {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error &e) {
        throw config_error("<file>", std::string("malformed JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

BiAngularPsd build_psd(const PsdSpec &spec, const RefinementPolicy &policy)
{
    if (!spec.is_mixture())
        return BiAngularPsd::unimodal(*spec.family, spec.params, policy);
    std::vector<MixtureComponent> parts;
    for (const auto &[w, c] : spec.components)
        parts.push_back({w, build_psd(c, policy)});
    return BiAngularPsd::mixture(parts);
}

ChannelCorrelation variant_correlation(const Scenario &s, const BiAngularPsd &psd, Variant which)
{
    const auto jt = configuration_matrix(s.tx_array, s.m_t, ArraySide::transmitter);
    const auto jr = configuration_matrix(s.rx_array, s.m_r, ArraySide::receiver);
    if (which == Variant::iid) {
        ChannelCorrelation r;
        r.n_t = jt.antennas();
        r.n_r = jr.antennas();
        r.entries = Eigen::MatrixXcd::Identity(r.n_t * r.n_r, r.n_t * r.n_r);
        return r;
    }
    const auto rs = which == Variant::exact ? build_rs(psd, s.m_t, s.m_r, s.method, s.quadrature)
                                            : build_rs_kronecker(psd, s.m_t, s.m_r, s.quadrature);
    return build_r(jt, jr, rs);
}

void apply(Scenario &scenario, const RunOverrides &overrides)
{
    if (overrides.seed)
        scenario.seed = *overrides.seed;
    if (overrides.trials) {
        if (*overrides.trials < 1)
            throw config_error("--trials", "must be at least 1");
        scenario.trials = *overrides.trials;
    }
    if (overrides.out_dir)
        scenario.out_dir = *overrides.out_dir;
    if (overrides.threads)
        scenario.threads = *overrides.threads;
}

RunReport run_scenario(const Scenario &s, std::ostream &log)
{
    const auto started = std::chrono::steady_clock::now();
    std::filesystem::create_directories(s.out_dir);
    RunReport report;

    json cases = json::array();
    for (const auto &c : s.cases) {
        json case_info{{"id", c.id}, {"psd", spec_to_json(c.psd)}};
        const auto psd_start = std::chrono::steady_clock::now();
        const BiAngularPsd psd = build_psd(c.psd, s.quadrature);
        case_info["psd_build_seconds"] = seconds_since(psd_start);

        json variants = json::array();
        for (Variant v : s.variants) {
            const auto t0 = std::chrono::steady_clock::now();
            const ChannelCorrelation r = variant_correlation(s, psd, v);
            const double build_seconds = seconds_since(t0);
            const RealizationEngine engine(r, s.seed);
            const auto t1 = std::chrono::steady_clock::now();
            const auto curve = average_mi(engine, s.snr_db, s.trials, s.id + "/" + c.id + "/" + to_string(v),
                                          s.threads);
            const double mc_seconds = seconds_since(t1);

            const auto file = output_file(s, c.id, v, "capacity");
            write_file(file, [&](std::ostream &out) { write_capacity_csv(out, curve); });
            report.files.push_back(file);

            json info{{"variant", to_string(v)},
                      {"capacity_csv", file.filename().string()},
                      {"correlation_build_seconds", build_seconds},
                      {"monte_carlo_seconds", mc_seconds},
                      {"r_asymmetry", r.asymmetry},
                      {"r_asymmetry_flagged", r.asymmetry_flagged()},
                      {"sqrt_min_eigenvalue", engine.root().min_eigenvalue},
                      {"sqrt_max_eigenvalue", engine.root().max_eigenvalue},
                      {"sqrt_clamped_eigenvalues", engine.root().clamped}};
            if (s.correlation_matrices) {
                const auto rfile = output_file(s, c.id, v, "R");
                write_file(rfile, [&](std::ostream &out) { write_matrix_csv(out, r.entries); });
                report.files.push_back(rfile);
                info["correlation_csv"] = rfile.filename().string();
            }
            variants.push_back(std::move(info));
            log << s.id << '/' << c.id << '/' << to_string(v) << ": " << curve.snr_db.size()
                << " SNR points x " << curve.trials << " trials\n";
        }
        case_info["variants"] = std::move(variants);

        if (s.psd_grid) {
            json grids = json::array();
            for (Variant v : s.psd_grid->variants) {
                const auto grid = tabulate_psd(variant_psd(psd, v), s.psd_grid->resolution);
                const auto gfile = output_file(s, c.id, v, "psd");
                write_file(gfile, [&](std::ostream &out) { write_psd_grid_csv(out, grid); });
                report.files.push_back(gfile);
                grids.push_back({{"variant", to_string(v)},
                                 {"psd_csv", gfile.filename().string()},
                                 {"local_maxima", count_local_maxima(grid)}});
            }
            case_info["psd_grids"] = std::move(grids);
        }
        cases.push_back(std::move(case_info));
    }

    json variants = json::array();
    for (Variant v : s.variants)
        variants.push_back(to_string(v));
    json manifest{
        {"tool", "nsmimo"},
        {"version", nsmimo::version},
        {"config_format_version", config_format_version},
        {"scenario_id", s.id},
        {"seed", s.seed},
        {"trials", s.trials},
        {"threads_requested", s.threads},
        {"snr_db", s.snr_db},
        {"variants", variants},
        {"method", s.method == RsMethod::quadrature ? "quadrature" : "closed-form"},
        {"mode_half_width", {{"tx", s.m_t}, {"rx", s.m_r}}},
        {"tx_array", array_to_json(s.tx_array)},
        {"rx_array", array_to_json(s.rx_array)},
        {"numerics",
         {{"quadrature_tolerance", s.quadrature.tolerance},
          {"quadrature_max_level", s.quadrature.max_level},
          {"quadrature_panel_nodes", static_cast<int>(panel_rule().nodes.size())},
          {"normalization_floor", 1e-12},
          {"mixture_weight_tolerance", 1e-12},
          {"sqrt_eigenvalue_clamp_relative", 1e-9},
          {"hermitian_tolerance", 1e-9},
          {"local_maximum_threshold_relative", 0.01},
          {"psd_grid_resolution", s.psd_grid ? s.psd_grid->resolution : 0}}},
        {"rng",
         {{"engine", "std::mt19937_64"},
          {"stream", "std::seed_seq(seed low, seed high, trial low, trial high) per trial"},
          {"common_random_numbers", true}}},
        {"build",
         {{"compiler", __VERSION__},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}},
        {"cases", cases},
        {"config", s.source},
    };
    manifest["total_seconds"] = seconds_since(started);
    report.manifest = s.out_dir / (s.id + "_manifest.json");
    write_file(report.manifest, [&](std::ostream &out) { out << manifest.dump(2) << '\n'; });
    return report;
}

std::vector<GridReport> export_psd_grids(const Scenario &s, Variant which, int resolution,
                                         const std::optional<std::string> &case_id)
{
    if (which == Variant::iid)
        throw config_error("--variant", "grid export supports 'exact' or 'kronecker'");
    if (resolution < 3)
        throw config_error("--resolution", "must be at least 3");
    std::filesystem::create_directories(s.out_dir);
    std::vector<GridReport> out;
    for (const auto &c : s.cases) {
        if (case_id && c.id != *case_id)
            continue;
        const auto psd = variant_psd(build_psd(c.psd, s.quadrature), which);
        const auto grid = tabulate_psd(psd, resolution);
        GridReport r;
        r.file = output_file(s, c.id, which, "psd");
        r.case_id = c.id;
        r.local_maxima = count_local_maxima(grid);
        write_file(r.file, [&](std::ostream &o) { write_psd_grid_csv(o, grid); });
        out.push_back(std::move(r));
    }
    if (out.empty())
        throw config_error("--case", "no case named '" + case_id.value_or("") + "'");
    return out;
}

} // namespace nsmimo::cli

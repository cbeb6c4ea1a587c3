// SPDX-License-Identifier: Apache-2.0
//
// notchdepth: notch depth simulation and models for diagonally loaded MVDR beamformers
// Copyright (C) 2026 The notchdepth authors
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

#include "cli_commands.hpp"
#include "grid.hpp"

#include "notchdepth/notchdepth.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace notchdepth::cli {

namespace {

using nlohmann::ordered_json;

struct RuntimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mirrors the sweep parameters plus output handling. Every field can come
// from a flag or from the --config JSON document (flags win).
struct RunConfig {
    int n_sensors = 50;
    double spacing = 0.5;
    double u0 = 0.0;
    double u1 = 0.06;
    double delta = 0.5;
    std::optional<double> inr_db;
    std::optional<double> inr;
    std::optional<int> snapshots;
    std::string l_grid = "10:10000:log10";
    std::string inr_grid_db = "-20:40:2";
    int trials = 500;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    std::string averaging = "linear";
    std::string scm = "snapshots";
    int workers = 1;
    bool emit_model_only = false;
    std::string config;
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double v) { return 10.0 * std::log10(v); }

void check(ndm_status status) {
    if (status != NDM_OK)
        throw RuntimeError(std::string(ndm_status_string(status)) + ": " + ndm_last_error());
}

ndm_scenario scenario_of(const RunConfig &cfg) {
    ndm_scenario s;
    s.n_sensors = cfg.n_sensors;
    s.spacing_wavelengths = cfg.spacing;
    s.look_u = cfg.u0;
    s.interferer_u = cfg.u1;
    s.delta = cfg.delta;
    return s;
}

ordered_json scenario_json(const RunConfig &cfg) {
    return ordered_json{{"n_sensors", cfg.n_sensors},
                        {"spacing_wavelengths", cfg.spacing},
                        {"u0", cfg.u0},
                        {"u1", cfg.u1},
                        {"delta", cfg.delta}};
}

// Linear INR from either --inr or --inr-db.
double required_inr(const RunConfig &cfg) {
    if (cfg.inr)
        return *cfg.inr;
    if (cfg.inr_db)
        return db_to_linear(*cfg.inr_db);
    throw UsageError("an INR is required (--inr-db or --inr)");
}

double inr_db_of(const RunConfig &cfg) {
    return cfg.inr_db ? *cfg.inr_db : linear_to_db(required_inr(cfg));
}

int required_snapshots(const RunConfig &cfg) {
    if (!cfg.snapshots)
        throw UsageError("a snapshot count is required (--l)");
    return *cfg.snapshots;
}

ndm_averaging averaging_of(const RunConfig &cfg) {
    return cfg.averaging == "db" ? NDM_AVERAGE_DB : NDM_AVERAGE_LINEAR;
}

ndm_scm_method scm_of(const RunConfig &cfg) {
    if (cfg.scm == "wishart")
        return NDM_SCM_WISHART;
    if (cfg.scm == "auto")
        return NDM_SCM_AUTOMATIC;
    return NDM_SCM_SNAPSHOTS;
}

// Six significant digits; empty field for values that are not finite
// numbers (model-only Monte Carlo columns).
std::string fmt(double v) {
    if (std::isnan(v))
        return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ordered_json num(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json warning_list(std::uint32_t flags) {
    ordered_json out = ordered_json::array();
    if (flags & NDM_WARN_SHORT_ARRAY)
        out.push_back("short_array");
    if (flags & NDM_WARN_WEAK_INTERFERER)
        out.push_back("weak_interferer");
    if (flags & NDM_WARN_MAINLOBE)
        out.push_back("mainlobe");
    if (flags & NDM_WARN_LOW_LOADING)
        out.push_back("low_loading");
    return out;
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    if (cfg.out.empty() || cfg.out == "-") {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file)
        throw RuntimeError("cannot open output file '" + cfg.out + "'");
    file << text;
    if (!file)
        throw RuntimeError("failed writing output file '" + cfg.out + "'");
}

struct CurveDeleter {
    void operator()(ndm_curve *c) const { ndm_curve_free(c); }
};
using CurveHandle = std::unique_ptr<ndm_curve, CurveDeleter>;

struct SweepRows {
    std::vector<ndm_curve_point> points;
    std::vector<double> keys; // printed axis values (L or INR in dB)
};

SweepRows run_curve(const RunConfig &cfg, ndm_axis axis, const std::vector<double> &axis_values,
                    double fixed_value) {
    ndm_sweep_spec spec{};
    spec.scenario = scenario_of(cfg);
    spec.axis = axis;
    spec.axis_values = axis_values.data();
    spec.n_axis_values = axis_values.size();
    spec.fixed_value = fixed_value;
    spec.trials = cfg.trials;
    spec.master_seed = cfg.seed;
    spec.averaging = averaging_of(cfg);
    spec.scm_method = scm_of(cfg);
    spec.workers = cfg.workers;
    spec.model_only = cfg.emit_model_only ? 1 : 0;

    ndm_curve *raw = nullptr;
    check(ndm_sweep_run(&spec, &raw));
    CurveHandle curve(raw);
    SweepRows rows;
    for (std::size_t i = 0; i < ndm_curve_size(curve.get()); ++i) {
        ndm_curve_point p;
        check(ndm_curve_point_at(curve.get(), i, &p));
        rows.points.push_back(p);
    }
    return rows;
}

std::string render_sweep(const RunConfig &cfg, const std::string &command, const std::string &key,
                         const SweepRows &rows, const ordered_json &fixed) {
    static const char *columns[] = {"mc_mean_db", "mc_stderr_db", "model_db", "ensemble_db"};
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << key;
        for (const char *c : columns)
            os << ',' << c;
        os << '\n';
        for (std::size_t i = 0; i < rows.points.size(); ++i) {
            const auto &p = rows.points[i];
            os << fmt(rows.keys[i]) << ',' << fmt(p.mc_mean_db) << ',' << fmt(p.mc_stderr_db) << ','
               << fmt(p.model_db) << ',' << fmt(p.ensemble_db) << '\n';
        }
        return os.str();
    }

    ordered_json doc;
    doc["command"] = command;
    doc["scenario"] = scenario_json(cfg);
    doc["fixed"] = fixed;
    doc["trials"] = cfg.trials;
    doc["master_seed"] = cfg.seed;
    doc["averaging"] = cfg.averaging;
    doc["model_only"] = cfg.emit_model_only;
    doc["columns"] = ordered_json::array({key, columns[0], columns[1], columns[2], columns[3]});
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < rows.points.size(); ++i) {
        const auto &p = rows.points[i];
        points.push_back(ordered_json{{key, rows.keys[i]},
                                      {"mc_mean_db", num(p.mc_mean_db)},
                                      {"mc_stderr_db", num(p.mc_stderr_db)},
                                      {"model_db", num(p.model_db)},
                                      {"ensemble_db", num(p.ensemble_db)},
                                      {"model_warnings", warning_list(p.model_warnings)}});
    }
    doc["points"] = points;
    return doc.dump(2) + "\n";
}

void note_warnings(const SweepRows &rows, std::ostream &err) {
    std::uint32_t all = 0;
    for (const auto &p : rows.points)
        all |= p.model_warnings;
    if (all != 0)
        err << "note: model assumptions not met at some points: " << warning_list(all).dump() << '\n';
}

void cmd_sweep_snapshots(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const double inr = required_inr(cfg);
    const std::vector<double> grid = snapshot_grid(parse_grid(cfg.l_grid));
    SweepRows rows = run_curve(cfg, NDM_AXIS_SNAPSHOTS, grid, inr);
    rows.keys = grid;
    note_warnings(rows, err);
    emit(cfg, render_sweep(cfg, "sweep-snapshots", "L", rows, {{"inr_db", inr_db_of(cfg)}, {"inr", inr}}),
         out);
}

void cmd_sweep_inr(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const int snapshots = required_snapshots(cfg);
    const std::vector<double> grid_db = parse_grid(cfg.inr_grid_db);
    std::vector<double> grid;
    for (double db : grid_db)
        grid.push_back(db_to_linear(db));
    SweepRows rows = run_curve(cfg, NDM_AXIS_INR, grid, snapshots);
    rows.keys = grid_db;
    note_warnings(rows, err);
    emit(cfg, render_sweep(cfg, "sweep-inr", "inr_db", rows, {{"L", snapshots}}), out);
}

void cmd_breakpoints(const RunConfig &cfg, std::ostream &out) {
    const double inr = required_inr(cfg);
    const int snapshots = required_snapshots(cfg);
    const ndm_scenario sc = scenario_of(cfg);
    ndm_breakpoints bp;
    check(ndm_breakpoints_compute(&sc, inr, snapshots, &bp));
    ndm_angles angles;
    check(ndm_angles_compute(&sc, &angles));

    auto l_entry = [](double v) { return ordered_json{{"linear", v}, {"log10", std::log10(v)}}; };
    auto inr_entry = [](double v) { return ordered_json{{"linear", v}, {"db", linear_to_db(v)}}; };
    ordered_json doc;
    doc["scenario"] = scenario_json(cfg);
    doc["inr"] = inr;
    doc["inr_db"] = inr_db_of(cfg);
    doc["L"] = snapshots;
    doc["c"] = static_cast<double>(cfg.n_sensors) / snapshots;
    doc["cos_sq"] = angles.cos_sq;
    doc["L1"] = l_entry(bp.l1);
    doc["L2"] = l_entry(bp.l2);
    doc["L3"] = l_entry(bp.l3);
    doc["INR1"] = inr_entry(bp.inr1);
    doc["INR2"] = inr_entry(bp.inr2);
    emit(cfg, doc.dump(2) + "\n", out);
}

void cmd_validate_rmt(const RunConfig &cfg, std::ostream &out) {
    const double inr = required_inr(cfg);
    const int snapshots = required_snapshots(cfg);
    const ndm_scenario sc = scenario_of(cfg);
    ndm_rmt_validation v;
    check(ndm_validate_rmt(&sc, static_cast<size_t>(snapshots), inr, cfg.trials, cfg.seed, &v));

    ordered_json doc;
    doc["scenario"] = scenario_json(cfg);
    doc["L"] = snapshots;
    doc["inr"] = inr;
    doc["inr_db"] = inr_db_of(cfg);
    doc["trials"] = cfg.trials;
    doc["master_seed"] = cfg.seed;
    doc["empirical_mean"] = v.empirical_mean;
    doc["model"] = v.model;
    doc["gap"] = std::abs(v.empirical_mean - v.model);
    doc["empirical_perp_mean"] = num(v.empirical_perp_mean);
    doc["model_perp"] = num(v.model_perp);
    doc["below_transition"] = v.below_transition != 0;
    emit(cfg, doc.dump(2) + "\n", out);
}

void cmd_ensemble_nd(const RunConfig &cfg, std::ostream &out, bool grid_requested) {
    const ndm_scenario sc = scenario_of(cfg);
    if (!grid_requested) {
        const double inr = required_inr(cfg);
        double nd = 0.0;
        check(ndm_ensemble_notch_depth(&sc, inr, &nd));
        ordered_json doc;
        doc["scenario"] = scenario_json(cfg);
        doc["inr"] = inr;
        doc["inr_db"] = inr_db_of(cfg);
        doc["ensemble_linear"] = nd;
        doc["ensemble_db"] = num(linear_to_db(nd));
        emit(cfg, doc.dump(2) + "\n", out);
        return;
    }

    const std::vector<double> grid_db = parse_grid(cfg.inr_grid_db);
    std::vector<double> nd_db;
    for (double db : grid_db) {
        double nd = 0.0;
        check(ndm_ensemble_notch_depth(&sc, db_to_linear(db), &nd));
        nd_db.push_back(linear_to_db(nd));
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "inr_db,ensemble_db\n";
        for (std::size_t i = 0; i < grid_db.size(); ++i)
            os << fmt(grid_db[i]) << ',' << fmt(nd_db[i]) << '\n';
        emit(cfg, os.str(), out);
        return;
    }
    ordered_json doc;
    doc["scenario"] = scenario_json(cfg);
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < grid_db.size(); ++i)
        points.push_back(ordered_json{{"inr_db", grid_db[i]}, {"ensemble_db", num(nd_db[i])}});
    doc["points"] = points;
    emit(cfg, doc.dump(2) + "\n", out);
}

// Turns a --config JSON document into flag tokens placed ahead of the user's
// own flags; with last-wins option policy the command line overrides.
std::vector<std::string> config_tokens(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object())
        throw UsageError("config file '" + path + "' must hold a JSON object");

    std::vector<std::string> tokens;
    for (const auto &[key, value] : doc.items()) {
        std::string flag = "--" + key;
        for (char &ch : flag)
            if (ch == '_')
                ch = '-';
        if (value.is_boolean()) {
            if (value.get<bool>())
                tokens.push_back(flag);
        } else if (value.is_string()) {
            tokens.push_back(flag);
            tokens.push_back(value.get<std::string>());
        } else if (value.is_number()) {
            tokens.push_back(flag);
            tokens.push_back(value.dump());
        } else {
            throw UsageError("config key '" + key + "' must be a string, number or boolean");
        }
    }
    return tokens;
}

std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (!path || args.empty())
        return args;
    std::vector<std::string> out{args.front()};
    for (auto &t : config_tokens(*path))
        out.push_back(std::move(t));
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

void add_scenario_options(CLI::App &cmd, RunConfig &cfg) {
    cmd.add_option("--n", cfg.n_sensors, "Number of sensors")->check(CLI::PositiveNumber);
    cmd.add_option("--spacing", cfg.spacing, "Element spacing in wavelengths")->check(CLI::PositiveNumber);
    cmd.add_option("--u0", cfg.u0, "Look direction cosine")->check(CLI::Range(-1.0, 1.0));
    cmd.add_option("--u1", cfg.u1, "Interferer direction cosine")->check(CLI::Range(-1.0, 1.0));
    cmd.add_option("--delta", cfg.delta, "Diagonal loading level")->check(CLI::NonNegativeNumber);
    cmd.add_option("--config", cfg.config, "JSON file with default option values");
}

void add_inr_options(CLI::App &cmd, RunConfig &cfg) {
    auto *db = cmd.add_option("--inr-db", cfg.inr_db, "Interferer-to-noise ratio in dB");
    cmd.add_option("--inr", cfg.inr, "Interferer-to-noise ratio, linear")
        ->check(CLI::NonNegativeNumber)
        ->excludes(db);
}

void add_run_options(CLI::App &cmd, RunConfig &cfg) {
    cmd.add_option("--trials", cfg.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    cmd.add_option("--seed", cfg.seed, "Master seed");
    cmd.add_option("--averaging", cfg.averaging, "Trial averaging domain")
        ->check(CLI::IsMember({"linear", "db"}));
    cmd.add_option("--scm", cfg.scm, "Sample covariance generation")
        ->check(CLI::IsMember({"snapshots", "wishart", "auto"}));
    cmd.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd.add_flag("--emit-model-only", cfg.emit_model_only, "Skip the Monte Carlo");
}

void add_output_options(CLI::App &cmd, RunConfig &cfg) {
    cmd.add_option("--out", cfg.out, "Output file (stdout when omitted)");
    cmd.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Notch depth simulation and models for diagonally loaded MVDR beamformers", "notchdepth"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    auto *snap = app.add_subcommand("sweep-snapshots", "Mean notch depth versus snapshot count");
    add_scenario_options(*snap, cfg);
    add_inr_options(*snap, cfg);
    snap->add_option("--l-grid", cfg.l_grid, "Snapshot grid, e.g. 25:1000:log10 or 25,50,100");
    add_run_options(*snap, cfg);
    add_output_options(*snap, cfg);

    auto *inr = app.add_subcommand("sweep-inr", "Mean notch depth versus INR");
    add_scenario_options(*inr, cfg);
    inr->add_option("--l", cfg.snapshots, "Snapshot count")->check(CLI::PositiveNumber);
    inr->add_option("--inr-grid-db", cfg.inr_grid_db, "INR grid in dB, e.g. -20:40:2");
    add_run_options(*inr, cfg);
    add_output_options(*inr, cfg);

    auto *bp = app.add_subcommand("breakpoints", "Model breakpoints L1, L2, L3, INR1, INR2 as JSON");
    add_scenario_options(*bp, cfg);
    add_inr_options(*bp, cfg);
    bp->add_option("--l", cfg.snapshots, "Snapshot count (sets c = N/L)")->check(CLI::PositiveNumber);
    add_output_options(*bp, cfg);

    auto *rmt = app.add_subcommand("validate-rmt", "Sample vs ensemble principal eigenvector overlap");
    add_scenario_options(*rmt, cfg);
    add_inr_options(*rmt, cfg);
    rmt->add_option("--l", cfg.snapshots, "Snapshot count")->check(CLI::PositiveNumber);
    rmt->add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    rmt->add_option("--seed", cfg.seed, "Master seed");
    add_output_options(*rmt, cfg);

    auto *ens = app.add_subcommand("ensemble-nd", "Ensemble notch depth for a known covariance");
    add_scenario_options(*ens, cfg);
    add_inr_options(*ens, cfg);
    auto *ens_grid = ens->add_option("--inr-grid-db", cfg.inr_grid_db, "INR grid in dB");
    add_output_options(*ens, cfg);

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (snap->parsed())
            cmd_sweep_snapshots(cfg, out, err);
        else if (inr->parsed())
            cmd_sweep_inr(cfg, out, err);
        else if (bp->parsed())
            cmd_breakpoints(cfg, out);
        else if (rmt->parsed())
            cmd_validate_rmt(cfg, out);
        else if (ens->parsed())
            cmd_ensemble_nd(cfg, out, ens_grid->count() > 0);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const RuntimeError &e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_ok;
}

} // namespace notchdepth::cli

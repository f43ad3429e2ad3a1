// Copyright 2026 The qduality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qduality/cli.h"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qduality/bell.h"
#include "qduality/errors.h"
#include "qduality/filtering.h"
#include "qduality/harness.h"
#include "qduality/json_io.h"
#include "qduality/knowledge.h"

namespace qduality {

namespace {

enum class OutputFormat { Json, Csv, Pretty };

struct RunConfig {
    std::string command;
    std::string family;
    std::optional<double> r;
    std::optional<double> r1;
    std::optional<double> r2;
    std::vector<double> p;
    std::optional<double> schmidt;
    std::string path;
    int rank = 4;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1000;
    double tol = 1e-8;
    std::size_t max_iter = 200;
    OutputFormat format = OutputFormat::Json;
};

struct ResolvedState {
    TwoQubitState state;
    std::string descriptor;
};

std::uint64_t resolve_seed(const RunConfig &cfg) {
    if (cfg.seed) {
        return *cfg.seed;
    }
    if (const char *env = std::getenv("QDUALITY_SEED")) {
        try {
            std::size_t used = 0;
            std::uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw BadParameterError(std::string("QDUALITY_SEED is not an unsigned integer: '") + env + "'");
    }
    return 1;
}

double require(const std::optional<double> &v, const char *flag, const std::string &family) {
    if (!v) {
        throw BadParameterError("--state " + family + " requires " + flag);
    }
    return *v;
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss << std::setprecision(17) << x;
    return ss.str();
}

ResolvedState resolve_state(const RunConfig &cfg) {
    const std::string &f = cfg.family;
    if (f.empty()) {
        throw BadParameterError("a state is required (--state)");
    }
    if (f == "werner") {
        double r = require(cfg.r, "--R", f);
        return {werner(r), "werner(R=" + fmt(r) + ")"};
    }
    if (f == "depolarized") {
        double r1 = require(cfg.r1, "--R1", f);
        double r2 = require(cfg.r2, "--R2", f);
        return {depolarized_state(r1, r2), "depolarized(R1=" + fmt(r1) + ",R2=" + fmt(r2) + ")"};
    }
    if (f == "bell-mixture") {
        if (cfg.p.size() != 4) {
            throw BadParameterError("--state bell-mixture requires --p with four comma-separated weights");
        }
        std::array<double, 4> p{cfg.p[0], cfg.p[1], cfg.p[2], cfg.p[3]};
        return {bell_mixture(p), "bell-mixture(" + fmt(p[0]) + "," + fmt(p[1]) + "," + fmt(p[2]) + "," +
                                     fmt(p[3]) + ")"};
    }
    if (f == "pure") {
        double lam = require(cfg.schmidt, "--schmidt", f);
        return {schmidt_state(lam), "pure(schmidt=" + fmt(lam) + ")"};
    }
    if (f == "singlet") {
        return {singlet(), "singlet"};
    }
    if (f == "mixed") {
        return {maximally_mixed(), "mixed"};
    }
    if (f == "random") {
        std::uint64_t seed = resolve_seed(cfg);
        return {random_state(seed, cfg.rank),
                "random(seed=" + std::to_string(seed) + ",rank=" + std::to_string(cfg.rank) + ")"};
    }
    if (f == "file") {
        if (cfg.path.empty()) {
            throw BadParameterError("--state file requires --path");
        }
        try {
            return {load_state_file(cfg.path), "file(" + cfg.path + ")"};
        } catch (const FormatError &) {
            throw;
        } catch (const NotDensityMatrixError &e) {
            throw FormatError(std::string("state file does not hold a density matrix: ") + e.what());
        }
    }
    throw BadParameterError("unknown state family '" + f + "'");
}

// Flattens a JSON document into "key.sub,value" rows.
void flatten(const json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
        }
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); k++) {
            flatten(j[k], prefix + "[" + std::to_string(k) + "]", rows);
        }
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void emit(const json &doc, OutputFormat format, std::ostream &out) {
    switch (format) {
        case OutputFormat::Json:
            out << doc.dump(2) << "\n";
            break;
        case OutputFormat::Csv: {
            std::vector<std::pair<std::string, std::string>> rows;
            flatten(doc, "", rows);
            out << "key,value\n";
            for (const auto &[k, v] : rows) {
                out << k << "," << v << "\n";
            }
            break;
        }
        case OutputFormat::Pretty: {
            std::vector<std::pair<std::string, std::string>> rows;
            flatten(doc, "", rows);
            std::size_t width = 0;
            for (const auto &row : rows) {
                width = std::max(width, row.first.size());
            }
            for (const auto &[k, v] : rows) {
                out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
            }
            break;
        }
    }
}

bool bell_diagonal(const BlochForm &b, double tol) {
    double off = 0;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            if (r != c) {
                off = std::max(off, std::abs(b.t(r, c)));
            }
        }
    }
    return norm(b.n) + norm(b.m) <= tol && off <= tol;
}

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
    ResolvedState rs = resolve_state(cfg);
    const TwoQubitState &s = rs.state;
    BlochForm b = bloch_decompose(s);
    NormalForm nf = normal_form(b);
    MeasurementAxis a(nf.s_axis(0));
    MeasurementAxis a_prime(nf.s_axis(1));
    double bmax = bell_max(s);
    double pt = partial_transpose_min_eigenvalue(s);

    json doc = {
        {"state", rs.descriptor},
        {"rho", state_to_json(s)},
        {"bloch", to_json(b)},
        {"normal_form", to_json(nf)},
        {"b_max", bmax},
        {"dD", distinguishability_excess(s, a)},
        {"dD_prime", distinguishability_excess(s, a_prime)},
        {"axes", {{"a_s", axis_to_json(a)}, {"a_s_prime", axis_to_json(a_prime)}}},
        {"flags",
         {
             {"violates_bell", bmax > 2},
             {"entangled", pt < -1e-12},
             {"bell_diagonal", bell_diagonal(b, 1e-12)},
         }},
    };
    emit(doc, cfg.format, out);
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.trials < 1) {
        throw BadParameterError("--trials must be at least 1");
    }
    std::uint64_t seed = resolve_seed(cfg);

    std::vector<std::string> csv_rows;
    auto collector = [&](const char *sweep) {
        return [&csv_rows, sweep](std::size_t t, const DualityReport &r) {
            std::ostringstream row;
            row << std::setprecision(17) << sweep << "," << t << "," << r.dk << "," << r.dk_prime << "," << r.lhs
                << "," << r.rhs << "," << r.slack << "," << (r.holds ? 1 : 0);
            csv_rows.push_back(row.str());
        };
    };
    TrialCallback rand_cb, opt_cb, same_cb;
    if (cfg.format == OutputFormat::Csv) {
        rand_cb = collector("random_axes");
        opt_cb = collector("optimal_axes");
        same_cb = collector("same_meter");
    }

    SweepSummary random_axes = sweep_random(cfg.trials, seed, AxisMode::RandomAxes, rand_cb);
    SweepSummary optimal_axes = sweep_random(cfg.trials, seed, AxisMode::OptimalAxes, opt_cb);
    SweepSummary same_meter = same_meter_sweep(cfg.trials, seed, same_cb);
    bool ok = random_axes.violations == 0 && optimal_axes.violations == 0 && same_meter.violations == 0;

    if (cfg.format == OutputFormat::Csv) {
        out << "sweep,trial,dK,dK_prime,lhs,rhs,slack,holds\n";
        for (const auto &row : csv_rows) {
            out << row << "\n";
        }
    } else {
        json doc = {
            {"seed", seed},
            {"trials", cfg.trials},
            {"random_axes", to_json(random_axes)},
            {"optimal_axes", to_json(optimal_axes)},
            {"same_meter", to_json(same_meter)},
            {"ok", ok},
        };
        emit(doc, cfg.format, out);
    }
    if (!ok) {
        for (const auto *sum : {&random_axes, &optimal_axes, &same_meter}) {
            if (sum->violations > 0 && sum->worst) {
                err << "violation at trial " << sum->worst_trial << ":\n"
                    << json{{"report", to_json(*sum->worst)}, {"state", matrix_to_json(sum->worst_state)}}.dump(2)
                    << "\n";
            }
        }
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_filter(const RunConfig &cfg, std::ostream &out) {
    ResolvedState rs = resolve_state(cfg);
    if (!(cfg.tol > 0) || cfg.max_iter < 1) {
        throw BadParameterError("--tol must be positive and --max-iter at least 1");
    }
    FilterOutcome f = filter_to_bell_diagonal(rs.state, {cfg.tol, cfg.max_iter});
    auto p = bell_weights(f.state);
    json doc = to_json(f);
    doc["input"] = rs.descriptor;
    doc["bell_weights"] = {{"p1", p[0]}, {"p2", p[1]}, {"p3", p[2]}, {"p4", p[3]}};
    emit(doc, cfg.format, out);
    return kExitOk;
}

void add_state_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--state", cfg.family,
                    "State family: werner, depolarized, bell-mixture, pure, singlet, mixed, random, file");
    cmd->add_option("--R", cfg.r, "Werner weight R in [0,1]");
    cmd->add_option("--R1", cfg.r1, "Depolarized-state parameter R1 in [0,1]");
    cmd->add_option("--R2", cfg.r2, "Depolarized-state parameter R2 in [0,1]");
    cmd->add_option("--p", cfg.p, "Bell-mixture weights p1,p2,p3,p4")->delimiter(',')->expected(4);
    cmd->add_option("--schmidt", cfg.schmidt, "Weight lambda of sqrt(lambda)|VH> - sqrt(1-lambda)|HV>");
    cmd->add_option("--path", cfg.path, "JSON state file with fields re and im");
    cmd->add_option("--rank", cfg.rank, "Rank of a random state (1..4)");
}

void add_common_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--seed", cfg.seed, "RNG seed (falls back to QDUALITY_SEED)");
    cmd->add_option("--format", cfg.format, "Output format: json, csv, pretty")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{
                {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"pretty", OutputFormat::Pretty}},
            CLI::ignore_case));
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Knowledge-excess duality and Bell violation toolkit for two-qubit states", "qduality"};
    app.require_subcommand(1);

    auto *analyze = app.add_subcommand("analyze", "Bloch form, normal form, Bell factor and excesses of a state");
    add_state_options(analyze, cfg);
    add_common_options(analyze, cfg);

    auto *verify = app.add_subcommand("verify", "Monte Carlo check of the duality inequalities");
    verify->add_option("--trials", cfg.trials, "Number of random trials per sweep");
    add_common_options(verify, cfg);

    auto *filter = app.add_subcommand("filter", "Local filtering to Bell-diagonal form");
    add_state_options(filter, cfg);
    add_common_options(filter, cfg);
    filter->add_option("--tol", cfg.tol, "Convergence tolerance on |n| + |m|");
    filter->add_option("--max-iter", cfg.max_iter, "Iteration cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitBadParameter;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out, err);
        }
        return cmd_filter(cfg, out);
    } catch (const FormatError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadStateFile;
    } catch (const SingularMarginalError &e) {
        err << "error: " << e.what() << "\n";
        return kExitSingularMarginal;
    } catch (const BadParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadParameter;
    } catch (const BadProbabilitiesError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadParameter;
    }
}

}  // namespace qduality

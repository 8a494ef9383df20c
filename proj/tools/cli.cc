// Copyright 2026 The qmix Authors
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

#include "cli.h"

#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qmix/cnot_analysis.h"
#include "qmix/density_state.h"
#include "qmix/error.h"
#include "qmix/figures.h"
#include "qmix/json_io.h"
#include "qmix/quantum_operation.h"
#include "qmix/verify.h"

namespace qmix::cli {

namespace {

constexpr int kExitError = 2;

struct Options {
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
    double tol = kDefaultTolerance;
    std::size_t steps = 10;
    std::string out_path;
    std::vector<std::string> files;
    std::size_t m = 2;
    std::size_t k = 2;
};

DensityOperator load_state(const std::string &path, double tol) {
    auto matrix = matrix_from_json(read_json_file(path));
    if (!matrix.is_square()) {
        throw Error(ErrorKind::NotDensity, path + ": state matrix must be square");
    }
    if (auto why = density_violation(matrix, tol)) {
        throw Error(ErrorKind::NotDensity, path + ": " + *why);
    }
    return DensityOperator(std::move(matrix), std::nullopt, tol);
}

/// Writes to --out when given, otherwise to the data stream.
void emit(const Options &opts, std::ostream &out, const std::string &text) {
    if (opts.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        throw Error(ErrorKind::InvalidArgument, "cannot write " + opts.out_path);
    }
    file << text;
}

std::string csv_number(double v) {
    return fmt::format("{:.12g}", v);
}

int cmd_prob(const Options &opts, std::ostream &out) {
    auto rho = load_state(opts.files.at(0), opts.tol);
    emit(opts, out, fmt::format("{:.12f}\n", probability(rho)));
    return 0;
}

int cmd_decompose(const Options &opts, std::ostream &out) {
    auto rho = load_state(opts.files.at(0), opts.tol);
    auto report = is_factorizable(rho, opts.m, opts.k, opts.tol);
    emit(opts, out, to_json(report).dump(2) + "\n");
    return 0;
}

int cmd_apply_cnot(const Options &opts, std::ostream &out) {
    std::optional<DensityOperator> input;
    if (opts.files.size() == 1) {
        input.emplace(load_state(opts.files[0], opts.tol));
    } else {
        auto control = load_state(opts.files[0], opts.tol);
        auto target = load_state(opts.files[1], opts.tol);
        if (control.dim() != 2 || target.dim() != 2) {
            throw Error(ErrorKind::DimensionMismatch, "control and target must both be 2x2");
        }
        input.emplace(kron(control.matrix(), target.matrix()));
    }
    auto result = apply(cnot_channel(), *input);
    emit(opts, out, to_json(result.matrix()).dump(2) + "\n");
    return 0;
}

int cmd_surface(const Options &opts, std::ostream &out) {
    std::string csv = "x,y,p\n";
    for (const auto &pt : cnot_surface(opts.steps)) {
        csv += csv_number(pt.x) + "," + csv_number(pt.y) + "," + csv_number(pt.p) + "\n";
    }
    emit(opts, out, csv);
    return 0;
}

int cmd_werner_sweep(const Options &opts, std::ostream &out) {
    std::string csv = "alpha,p_total,p_fuzzy,incidence\n";
    for (const auto &pt : werner_sweep(opts.steps)) {
        csv += csv_number(pt.alpha) + "," + csv_number(pt.p_total) + "," + csv_number(pt.p_fuzzy) + "," +
               csv_number(pt.incidence) + "\n";
    }
    emit(opts, out, csv);
    return 0;
}

int cmd_classify(const Options &opts, std::ostream &out) {
    auto rho = load_state(opts.files.at(0), opts.tol);
    auto sigma = load_state(opts.files.at(1), opts.tol);
    auto verdict = classify_preservation(rho, sigma, opts.tol);
    emit(opts, out, to_json(verdict).dump(2) + "\n");
    return verdict.preserved ? 0 : 1;
}

int cmd_verify(const Options &opts, std::ostream &out) {
    if (opts.samples < 1) {
        throw Error(ErrorKind::InvalidArgument, "--samples must be at least 1");
    }
    if (!(opts.tol > 0)) {
        throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
    }
    auto results = run_verification({opts.seed, opts.samples, opts.tol});
    std::string text = fmt::format("seed={} samples={} tol={:.3e}\n", opts.seed, opts.samples, opts.tol);
    bool all_ok = true;
    for (const auto &r : results) {
        all_ok = all_ok && r.ok();
        text += fmt::format(
            "{:<26} {:>7}/{:<7} {}={:.3e}  {}\n",
            r.name,
            r.passed,
            r.total,
            r.metric_name,
            r.metric,
            r.ok() ? "PASS" : "FAIL");
    }
    text += all_ok ? "overall: PASS\n" : "overall: FAIL\n";
    emit(opts, out, text);
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opts;
    CLI::App app{"Mixed-state quantum computation toolkit: CNOT analysis, decompositions, fuzzy semantics."};
    app.require_subcommand(1);

    auto add_tol = [&](CLI::App *cmd) {
        cmd->add_option("--tol", opts.tol, "Tolerance for validation and equality checks")->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App *cmd) {
        cmd->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
    };

    auto *prob = app.add_subcommand("prob", "Print the truth probability Tr(P1 rho) of a state file");
    prob->add_option("state", opts.files, "Matrix JSON file")->required()->expected(1);
    add_tol(prob);
    add_out(prob);

    auto *decompose = app.add_subcommand("decompose", "Split a bipartite state into rho_a (x) rho_b + M(rho)");
    decompose->add_option("state", opts.files, "Matrix JSON file")->required()->expected(1);
    decompose->add_option("--m", opts.m, "Dimension of the first factor")->check(CLI::PositiveNumber);
    decompose->add_option("--k", opts.k, "Dimension of the second factor")->check(CLI::PositiveNumber);
    add_tol(decompose);
    add_out(decompose);

    auto *apply_cnot = app.add_subcommand("apply-cnot", "Apply the CNOT channel to a 4x4 state or a control/target pair");
    apply_cnot->add_option("states", opts.files, "One 4x4 state, or control and target 2x2 states")
        ->required()
        ->expected(1, 2);
    add_tol(apply_cnot);
    add_out(apply_cnot);

    auto *surface = app.add_subcommand("surface", "CSV grid of the CNOT fuzzy polynomial over [0,1]^2");
    surface->add_option("--steps", opts.steps, "Grid intervals per axis (>= 2)");
    add_out(surface);

    auto *sweep = app.add_subcommand("werner-sweep", "CSV of CNOT probabilities over the Werner family");
    sweep->add_option("--steps", opts.steps, "Grid intervals over alpha in [0,1] (>= 1)");
    add_out(sweep);

    auto *classify = app.add_subcommand("classify", "Decide whether CNOT keeps rho (x) sigma factorizable");
    classify->add_option("states", opts.files, "Control and target 2x2 state files")->required()->expected(2);
    add_tol(classify);
    add_out(classify);

    auto *verify = app.add_subcommand("verify", "Run the seeded randomized property campaigns");
    verify->add_option("--seed", opts.seed, "Random seed");
    verify->add_option("--samples", opts.samples, "Samples per suite")->check(CLI::PositiveNumber);
    add_tol(verify);
    add_out(verify);

    std::vector<const char *> argv{"qmix"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << e.what() << "\n";
        return kExitError;
    }

    try {
        if (prob->parsed()) {
            return cmd_prob(opts, out);
        }
        if (decompose->parsed()) {
            return cmd_decompose(opts, out);
        }
        if (apply_cnot->parsed()) {
            return cmd_apply_cnot(opts, out);
        }
        if (surface->parsed()) {
            return cmd_surface(opts, out);
        }
        if (sweep->parsed()) {
            return cmd_werner_sweep(opts, out);
        }
        if (classify->parsed()) {
            return cmd_classify(opts, out);
        }
        return cmd_verify(opts, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace qmix::cli

// Copyright 2026 The cvd Authors
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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cvd/experiments.hpp"
#include "cvd/state_io.hpp"

namespace {

struct Flags {
    std::optional<std::string> config, experiment, network, grid, r, db, alpha, out, format, kind, dump_state;
    std::optional<int> modes, g, g_prime, trials, cutoff;
    std::optional<std::uint64_t> seed;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw cvd::Error(cvd::ErrorCode::InvalidConfig, "cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw cvd::Error(cvd::ErrorCode::InvalidConfig, "cannot write '" + path + "'");
    }
    out << text;
}

std::uint64_t parse_seed(const std::string &s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw cvd::Error(cvd::ErrorCode::InvalidConfig, "seed must be a non-negative integer, got '" + s + "'");
    }
    return v;
}

// Precedence, lowest first: built-in defaults, --config, CVD_SEED (seed only), flags.
cvd::RunConfig build_config(const Flags &f) {
    cvd::RunConfig cfg;
    if (f.config) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(*f.config));
        } catch (const nlohmann::json::parse_error &e) {
            throw cvd::Error(cvd::ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
        }
        cfg = cvd::config_from_json(doc);
    }
    if (const char *env = std::getenv("CVD_SEED"); env != nullptr && *env != '\0') {
        cfg.seed = parse_seed(env);
    }
    if (f.experiment) cfg.experiment = cvd::parse_experiment(*f.experiment);
    if (f.network) cfg.network = cvd::parse_network(*f.network);
    if (f.modes) cfg.modes = *f.modes;
    if (f.grid) {
        const auto dims = cvd::detail::split(*f.grid, 'x');
        if (dims.size() != 2) {
            throw cvd::Error(cvd::ErrorCode::InvalidConfig, "--grid must look like 3x3");
        }
        cfg.grid_shape = std::pair{static_cast<int>(cvd::parse_real(dims[0])),
                                   static_cast<int>(cvd::parse_real(dims[1]))};
    }
    if (f.r && f.db) {
        throw cvd::Error(cvd::ErrorCode::InvalidConfig, "--r and --db are mutually exclusive");
    }
    if (f.r) {
        if (cfg.network != cvd::NetworkKind::Chain) {
            throw cvd::Error(cvd::ErrorCode::InvalidConfig, "--r applies to chain networks; use --db for graphs");
        }
        cfg.grid = cvd::parse_grid(*f.r);
    }
    if (f.db) {
        if (cfg.network != cvd::NetworkKind::Graph) {
            throw cvd::Error(cvd::ErrorCode::InvalidConfig, "--db applies to graph networks; use --r for chains");
        }
        cfg.grid = cvd::parse_grid(*f.db);
    }
    if (f.alpha) cfg.alphas = cvd::parse_alphas(*f.alpha);
    if (f.g) cfg.g = *f.g;
    if (f.g_prime) cfg.g_prime = *f.g_prime;
    if (f.seed) cfg.seed = *f.seed;
    if (f.trials) cfg.trials = *f.trials;
    if (f.cutoff) cfg.cutoff = *f.cutoff;
    if (f.out) cfg.out = *f.out;
    if (f.format) cfg.format = cvd::parse_format(*f.format);
    if (f.kind) cfg.kind = cvd::parse_kind(*f.kind);
    if (cfg.trials < 1) {
        throw cvd::Error(cvd::ErrorCode::InvalidConfig, "trials must be at least 1");
    }
    if (cfg.cutoff && *cfg.cutoff < 2) {
        throw cvd::Error(cvd::ErrorCode::InvalidConfig, "cutoff must be at least 2");
    }
    return cfg;
}

int run(const Flags &flags) {
    const cvd::RunConfig cfg = build_config(flags);
    if (flags.dump_state) {
        cvd::RunConfig point = cfg;
        point.grid.resize(std::min<std::size_t>(point.grid.size(), 1));
        point.alphas.resize(std::min<std::size_t>(point.alphas.size(), 1));
        const auto [x, alpha] = cvd::single_point(point);
        const cvd::NetworkSetup net = cvd::resolve_network(cfg);
        write_file(*flags.dump_state, cvd::state_to_json(net.state(x, alpha)).dump(2) + "\n");
    }
    const cvd::ExperimentResult result = cvd::run_experiment(cfg);
    const std::string text = cvd::render(result, cfg.format);
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
    } else {
        write_file(cfg.out, text);
    }
    if (result.violations > 0) {
        std::cerr << "cvd: " << result.violations << " row(s) exceed the log 2 bound\n";
    } else if (!result.passed) {
        std::cerr << "cvd: verification failed\n";
    }
    return cvd::exit_code_for(result);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement change from single-photon subtraction or addition on Gaussian networks"};
    Flags f;
    app.add_option("--config", f.config, "JSON config file; flags override its fields");
    app.add_option("--experiment", f.experiment, "sweep-squeezing | scan-bipartitions | verify-bounds | oracle-check");
    app.add_option("--network", f.network, "chain | graph");
    app.add_option("--modes", f.modes, "number of modes (chain length)");
    app.add_option("--grid", f.grid, "graph lattice shape, e.g. 3x3");
    app.add_option("--r", f.r, "chain squeezing: list 0,0.5,1 or range start:stop:step");
    app.add_option("--db", f.db, "graph squeezing in dB: list or range");
    app.add_option("--alpha", f.alpha, "displacements of mode g, e.g. 0,0.5,0.3+0.2j");
    app.add_option("--g", f.g, "operated mode (0-based)");
    app.add_option("--g-prime", f.g_prime, "second single-mode partition for sweeps");
    app.add_option("--seed", f.seed, "RNG seed (overrides CVD_SEED)");
    app.add_option("--trials", f.trials, "random draws for verify-bounds");
    app.add_option("--out", f.out, "output path (default stdout)");
    app.add_option("--format", f.format, "csv | json");
    app.add_option("--kind", f.kind, "subtract | add");
    app.add_option("--cutoff", f.cutoff, "fixed Fock cutoff for oracle-check");
    app.add_option("--dump-state", f.dump_state, "write the Gaussian network state as JSON");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    try {
        return run(f);
    } catch (const cvd::Error &e) {
        std::cerr << "cvd: " << e.what() << "\n";
        return cvd::exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "cvd: " << e.what() << "\n";
        return 3;
    }
}

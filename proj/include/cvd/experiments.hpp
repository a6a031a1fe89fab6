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

// Experiment runner behind the cvd command-line tool. Every experiment is a
// pure function of its RunConfig and returns either a table or a JSON
// summary, so the same entry points serve the CLI and the test suite.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cvd/error.hpp"
#include "cvd/fock_oracle.hpp"
#include "cvd/gaussian_state.hpp"
#include "cvd/networks.hpp"
#include "cvd/photon_ops.hpp"
#include "cvd/symplectic.hpp"

namespace cvd {

enum class Experiment { SweepSqueezing, ScanBipartitions, VerifyBounds, OracleCheck };
enum class NetworkKind { Chain, Graph };
enum class OutputFormat { Csv, Json };

/// Slack allowed above log 2 before a row counts as a bound violation.
inline constexpr double kBoundSlack = 1e-9;
/// Ratios below 1/2 by more than this count as violations.
inline constexpr double kRatioSlack = 1e-12;
inline constexpr double kOracleTol = 1e-6;
inline constexpr double kTraceTol = 1e-8;
inline constexpr double kTwoPathTol = 1e-8;
inline constexpr double kOracleLeakTol = 1e-10;
inline constexpr int kMaxScanModes = 20;

inline const char *to_string(Experiment e) {
    switch (e) {
        case Experiment::SweepSqueezing: return "sweep-squeezing";
        case Experiment::ScanBipartitions: return "scan-bipartitions";
        case Experiment::VerifyBounds: return "verify-bounds";
        case Experiment::OracleCheck: return "oracle-check";
    }
    return "unknown";
}

inline Experiment parse_experiment(const std::string &s) {
    for (Experiment e : {Experiment::SweepSqueezing, Experiment::ScanBipartitions, Experiment::VerifyBounds,
                         Experiment::OracleCheck}) {
        if (s == to_string(e)) {
            return e;
        }
    }
    throw Error(ErrorCode::InvalidConfig, "unknown experiment '" + s + "'");
}

inline NetworkKind parse_network(const std::string &s) {
    if (s == "chain") {
        return NetworkKind::Chain;
    }
    if (s == "graph") {
        return NetworkKind::Graph;
    }
    throw Error(ErrorCode::InvalidConfig, "network must be chain or graph, got '" + s + "'");
}

inline PhotonOp parse_kind(const std::string &s) {
    if (s == "subtract") {
        return PhotonOp::Subtract;
    }
    if (s == "add") {
        return PhotonOp::Add;
    }
    throw Error(ErrorCode::InvalidConfig, "kind must be subtract or add, got '" + s + "'");
}

inline OutputFormat parse_format(const std::string &s) {
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    throw Error(ErrorCode::InvalidConfig, "format must be csv or json, got '" + s + "'");
}

/// 12 significant digits.
inline std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

inline double round_real(double x) {
    return std::strtod(format_real(x).c_str(), nullptr);
}

/// "0.5", "0.3+0.2j", "-0.1j".
inline std::string format_complex(Complex z) {
    if (z.imag() == 0.0) {
        return format_real(z.real());
    }
    const std::string im = format_real(z.imag()) + "j";
    if (z.real() == 0.0) {
        return im;
    }
    return format_real(z.real()) + (z.imag() > 0 ? "+" : "") + im;
}

inline double parse_real(const std::string &s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidConfig, "not a number: '" + s + "'");
    }
    return v;
}

inline Complex parse_complex(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) {
        throw Error(ErrorCode::InvalidConfig, "empty complex number");
    }
    if (s.back() != 'j' && s.back() != 'i') {
        return parse_real(s);
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [](const std::string &t) {
        if (t.empty() || t == "+") {
            return 1.0;
        }
        if (t == "-") {
            return -1.0;
        }
        return parse_real(t);
    };
    if (split == std::string::npos) {
        return {0.0, imag_part(s)};
    }
    return {parse_real(s.substr(0, split)), imag_part(s.substr(split))};
}

namespace detail {

inline std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

}  // namespace detail

/// "0.1,0.5,1" or the inclusive range "start:stop:step".
inline std::vector<double> parse_grid(const std::string &s) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        const auto parts = detail::split(s, ':');
        if (parts.size() != 3) {
            throw Error(ErrorCode::InvalidConfig, "range must be start:stop:step");
        }
        const double start = parse_real(parts[0]), stop = parse_real(parts[1]), step = parse_real(parts[2]);
        if (!(step > 0.0) || stop < start) {
            throw Error(ErrorCode::InvalidConfig, "range needs step > 0 and stop >= start");
        }
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        for (long k = 0; k <= count; ++k) {
            out.push_back(round_real(start + static_cast<double>(k) * step));
        }
        return out;
    }
    for (const auto &part : detail::split(s, ',')) {
        out.push_back(parse_real(part));
    }
    return out;
}

inline std::vector<Complex> parse_alphas(const std::string &s) {
    std::vector<Complex> out;
    for (const auto &part : detail::split(s, ',')) {
        out.push_back(parse_complex(part));
    }
    return out;
}

/// Fields left unset fall back to per-experiment defaults in resolve_network
/// and the experiment functions.
struct RunConfig {
    Experiment experiment = Experiment::SweepSqueezing;
    NetworkKind network = NetworkKind::Chain;
    std::optional<int> modes;
    std::optional<std::pair<int, int>> grid_shape;
    std::optional<Matrix> adjacency;
    std::vector<double> grid;  // r for chains, dB for graphs
    std::vector<Complex> alphas;
    std::optional<int> g;
    std::optional<int> g_prime;
    PhotonOp kind = PhotonOp::Subtract;
    std::uint64_t seed = 42;
    int trials = 10000;
    std::optional<int> cutoff;
    std::string out;
    OutputFormat format = OutputFormat::Csv;
};

namespace detail {

inline std::vector<double> json_grid(const nlohmann::json &j) {
    if (j.is_string()) {
        return parse_grid(j.get<std::string>());
    }
    if (j.is_number()) {
        return {j.get<double>()};
    }
    return j.get<std::vector<double>>();
}

inline Complex json_complex(const nlohmann::json &j) {
    if (j.is_string()) {
        return parse_complex(j.get<std::string>());
    }
    if (j.is_array()) {
        const auto v = j.get<std::vector<double>>();
        if (v.size() != 2) {
            throw Error(ErrorCode::InvalidConfig, "complex pair must be [re, im]");
        }
        return {v[0], v[1]};
    }
    return j.get<double>();
}

inline void parse_network_json(const nlohmann::json &j, RunConfig &cfg) {
    if (j.is_string()) {
        cfg.network = parse_network(j.get<std::string>());
        return;
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "type") {
            cfg.network = parse_network(value.get<std::string>());
        } else if (key == "modes") {
            cfg.modes = value.get<int>();
        } else if (key == "grid") {
            const auto shape = value.get<std::vector<int>>();
            if (shape.size() != 2) {
                throw Error(ErrorCode::InvalidConfig, "network grid must be [rows, cols]");
            }
            cfg.grid_shape = std::pair{shape[0], shape[1]};
        } else if (key == "adjacency") {
            const auto rows = value.get<std::vector<std::vector<double>>>();
            Matrix adj(rows.size(), rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != rows.size()) {
                    throw Error(ErrorCode::InvalidAdjacency, "adjacency matrix must be square");
                }
                for (std::size_t c = 0; c < rows.size(); ++c) {
                    adj(r, c) = rows[r][c];
                }
            }
            cfg.adjacency = adj;
        } else {
            throw Error(ErrorCode::InvalidConfig, "unknown network field '" + key + "'");
        }
    }
}

}  // namespace detail

/// Parse a JSON config document on top of `base`. Unknown keys are rejected.
inline RunConfig config_from_json(const nlohmann::json &j, RunConfig base = {}) {
    if (!j.is_object()) {
        throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    }
    RunConfig &cfg = base;
    try {
        std::optional<std::string> grid_key;
        for (const auto &[key, value] : j.items()) {
            if (key == "experiment") {
                cfg.experiment = parse_experiment(value.get<std::string>());
            } else if (key == "network") {
                detail::parse_network_json(value, cfg);
            } else if (key == "kind") {
                cfg.kind = parse_kind(value.get<std::string>());
            } else if (key == "r_grid" || key == "db_grid") {
                cfg.grid = detail::json_grid(value);
                grid_key = key;
            } else if (key == "alpha" || key == "alphas") {
                cfg.alphas.clear();
                if (value.is_array()) {
                    for (const auto &a : value) {
                        cfg.alphas.push_back(detail::json_complex(a));
                    }
                } else {
                    cfg.alphas.push_back(detail::json_complex(value));
                }
            } else if (key == "modes") {
                cfg.modes = value.get<int>();
            } else if (key == "g") {
                cfg.g = value.get<int>();
            } else if (key == "g_prime") {
                cfg.g_prime = value.get<int>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "trials") {
                cfg.trials = value.get<int>();
            } else if (key == "cutoff") {
                cfg.cutoff = value.get<int>();
            } else if (key == "out") {
                cfg.out = value.get<std::string>();
            } else if (key == "format") {
                cfg.format = parse_format(value.get<std::string>());
            } else {
                throw Error(ErrorCode::InvalidConfig, "unknown config field '" + key + "'");
            }
        }
        if (grid_key) {
            const bool want_db = cfg.network == NetworkKind::Graph;
            if ((*grid_key == "db_grid") != want_db) {
                throw Error(ErrorCode::InvalidConfig, *grid_key + " does not match the network type");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidConfig, std::string("bad config value: ") + e.what());
    }
    return cfg;
}

/// Network with every default filled in.
struct NetworkSetup {
    NetworkKind kind = NetworkKind::Chain;
    int modes = 0;
    Matrix adjacency;
    int g = 0;
    int g_prime = 0;

    std::vector<CircuitElement> circuit(double x, Complex alpha) const {
        if (kind == NetworkKind::Chain) {
            return chain_circuit(ChainSpec{modes, x, g, alpha});
        }
        return graph_circuit(GraphSpec{adjacency, x, g, alpha});
    }

    GaussianState state(double x, Complex alpha) const {
        const auto elements = circuit(x, alpha);
        return evolve(vacuum(modes), elements);
    }
};

inline NetworkSetup resolve_network(const RunConfig &cfg) {
    NetworkSetup net;
    net.kind = cfg.network;
    if (cfg.network == NetworkKind::Chain) {
        if (cfg.grid_shape || cfg.adjacency) {
            throw Error(ErrorCode::InvalidConfig, "grid and adjacency apply to graph networks only");
        }
        net.modes = cfg.modes.value_or(10);
        if (net.modes < 2) {
            throw Error(ErrorCode::InvalidConfig, "a chain needs at least two modes");
        }
        net.adjacency = chain_adjacency(net.modes);
        net.g = cfg.g.value_or(default_subtraction_mode(net.modes));
    } else {
        if (cfg.adjacency) {
            validate_adjacency(*cfg.adjacency);
            net.adjacency = *cfg.adjacency;
        } else if (cfg.grid_shape) {
            net.adjacency = grid_adjacency(cfg.grid_shape->first, cfg.grid_shape->second);
        } else if (cfg.modes) {
            net.adjacency = chain_adjacency(*cfg.modes);
        } else {
            net.adjacency = grid_adjacency(3, 3);
        }
        net.modes = static_cast<int>(net.adjacency.rows());
        if (cfg.modes && *cfg.modes != net.modes) {
            throw Error(ErrorCode::InvalidConfig, "modes disagrees with the graph size");
        }
        net.g = cfg.g.value_or(std::min(1, net.modes - 1));
    }
    if (net.g < 0 || net.g >= net.modes) {
        throw Error(ErrorCode::InvalidConfig, "g outside the network");
    }
    if (cfg.g_prime) {
        net.g_prime = *cfg.g_prime;
    } else {
        net.g_prime = first_neighbour(net.adjacency, net.g);
        if (net.g_prime < 0) {
            throw Error(ErrorCode::InvalidConfig, "g has no neighbour to use as g_prime");
        }
    }
    if (net.g_prime < 0 || net.g_prime >= net.modes || net.g_prime == net.g) {
        throw Error(ErrorCode::InvalidConfig, "g_prime must be a different mode of the network");
    }
    return net;
}

inline void check_grid(const std::vector<double> &grid) {
    if (grid.empty()) {
        throw Error(ErrorCode::InvalidConfig, "grid must not be empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw Error(ErrorCode::InvalidConfig, "grid must be strictly increasing");
        }
    }
}

inline std::vector<double> sweep_grid(const RunConfig &cfg) {
    if (!cfg.grid.empty()) {
        return cfg.grid;
    }
    return cfg.network == NetworkKind::Chain ? parse_grid("0:2:0.1") : parse_grid("0:15:1");
}

/// Grid value and displacement used by scan-bipartitions and --dump-state.
inline std::pair<double, Complex> single_point(const RunConfig &cfg) {
    if (cfg.grid.size() > 1 || cfg.alphas.size() > 1) {
        throw Error(ErrorCode::InvalidConfig, "scan-bipartitions takes a single grid value and alpha");
    }
    const double x = cfg.grid.empty() ? (cfg.network == NetworkKind::Chain ? 1.0 : 10.0) : cfg.grid.front();
    const Complex alpha = cfg.alphas.empty() ? Complex(0.5) : cfg.alphas.front();
    return {x, alpha};
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Exactly one of `table` and `summary` is filled.
struct ExperimentResult {
    std::optional<Table> table;
    std::optional<nlohmann::ordered_json> summary;
    int violations = 0;
    bool passed = true;
};

namespace detail {

inline std::string csv_cell(const std::string &cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

inline nlohmann::ordered_json json_cell(const std::string &cell) {
    char *end = nullptr;
    const long long i = std::strtoll(cell.c_str(), &end, 10);
    if (!cell.empty() && end == cell.c_str() + cell.size()) {
        return i;
    }
    const double v = std::strtod(cell.c_str(), &end);
    if (!cell.empty() && end == cell.c_str() + cell.size()) {
        return v;
    }
    return cell;
}

inline void flatten(const nlohmann::ordered_json &j, const std::string &prefix, Table &t) {
    for (const auto &[key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, name, t);
            continue;
        }
        t.header.push_back(name);
        if (value.is_number_float()) {
            t.rows[0].push_back(format_real(value.get<double>()));
        } else if (value.is_string()) {
            t.rows[0].push_back(value.get<std::string>());
        } else {
            t.rows[0].push_back(value.dump());
        }
    }
}

}  // namespace detail

inline std::string to_csv(const Table &t) {
    std::string out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += (i ? "," : "") + detail::csv_cell(cells[i]);
        }
        out += '\n';
    };
    line(t.header);
    for (const auto &row : t.rows) {
        line(row);
    }
    return out;
}

inline nlohmann::ordered_json to_json(const Table &t) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            obj[t.header[i]] = detail::json_cell(row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

/// Serialise a result in the requested format. Summaries in CSV become a
/// single row with dotted column names.
inline std::string render(const ExperimentResult &result, OutputFormat format) {
    if (result.table) {
        return format == OutputFormat::Csv ? to_csv(*result.table) : to_json(*result.table).dump(2) + "\n";
    }
    if (format == OutputFormat::Json) {
        return result.summary->dump(2) + "\n";
    }
    Table t;
    t.rows.emplace_back();
    detail::flatten(*result.summary, "", t);
    return to_csv(t);
}

namespace detail {

inline constexpr const char *kVacuumTag = "VacuumModeSubtraction";

/// e_before, e_after, delta_e cells for one bipartition; counts bound violations.
inline std::vector<std::string> entanglement_cells(const GaussianState &state, const SubsystemBasis &side, int g,
                                                   PhotonOp op, int &violations) {
    try {
        const EntanglementChange ec = entanglement_increase(state, side, g, op);
        if (ec.delta > kLog2 + kBoundSlack) {
            ++violations;
        }
        return {format_real(ec.before), format_real(ec.after), format_real(ec.delta)};
    } catch (const Error &e) {
        if (e.code() != ErrorCode::VacuumModeSubtraction) {
            throw;
        }
        return {format_real(renyi2_entanglement_pure(state, side)), kVacuumTag, kVacuumTag};
    }
}

}  // namespace detail

/// Rows (r, alpha_g, partition, e_before, e_after, delta_e) with partition
/// g meaning A = {g} and g_prime meaning A = {g'}. For graphs the r column
/// carries the squeezing in dB.
inline ExperimentResult sweep_squeezing(const RunConfig &cfg) {
    const NetworkSetup net = resolve_network(cfg);
    const std::vector<double> grid = sweep_grid(cfg);
    check_grid(grid);
    const std::vector<Complex> alphas = cfg.alphas.empty() ? std::vector<Complex>{0.0, 0.5} : cfg.alphas;

    ExperimentResult result;
    Table t{{"r", "alpha_g", "partition", "e_before", "e_after", "delta_e"}, {}};
    for (double x : grid) {
        for (Complex alpha : alphas) {
            const GaussianState state = net.state(x, alpha);
            const std::pair<const char *, int> parts[] = {{"g", net.g}, {"g_prime", net.g_prime}};
            for (const auto &[label, mode] : parts) {
                std::vector<std::string> row{format_real(x), format_complex(alpha), label};
                const auto cells = detail::entanglement_cells(state, SubsystemBasis(net.modes, {mode}), net.g,
                                                              cfg.kind, result.violations);
                row.insert(row.end(), cells.begin(), cells.end());
                t.rows.push_back(std::move(row));
            }
        }
    }
    result.table = std::move(t);
    result.passed = result.violations == 0;
    return result;
}

/// One row per subsystem containing g, ordered by bitmask (bit i = mode i).
inline ExperimentResult scan_bipartitions(const RunConfig &cfg) {
    const NetworkSetup net = resolve_network(cfg);
    if (net.modes > kMaxScanModes) {
        throw Error(ErrorCode::TooManyModes, "bipartition scan supports at most 20 modes");
    }
    const auto [x, alpha] = single_point(cfg);
    const GaussianState state = net.state(x, alpha);

    ExperimentResult result;
    Table t{{"mask", "m_a", "e_before", "e_after", "delta_e"}, {}};
    const std::uint64_t gbit = std::uint64_t{1} << net.g;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << net.modes); ++mask) {
        if (!(mask & gbit)) {
            continue;
        }
        std::vector<std::string> row{std::to_string(mask), std::to_string(std::popcount(mask))};
        const auto cells = detail::entanglement_cells(state, SubsystemBasis::from_mask(net.modes, mask), net.g,
                                                      cfg.kind, result.violations);
        row.insert(row.end(), cells.begin(), cells.end());
        t.rows.push_back(std::move(row));
    }
    result.table = std::move(t);
    result.passed = result.violations == 0;
    return result;
}

/// Mixed Gaussian state: random symplectic (log-squeezing in [-2, 2]) applied
/// to thermal occupations in [1, 10], displaced by |alpha| <= 2 on every mode.
inline GaussianState random_mixed_state(int m, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> occ(1.0, 10.0), radius(0.0, 2.0),
        phase(0.0, 2.0 * std::numbers::pi);
    Vector nu(2 * m);
    for (int i = 0; i < m; ++i) {
        nu(i) = nu(m + i) = occ(rng);
    }
    const Matrix S = random_symplectic(m, rng(), 2.0);
    GaussianState state{Vector::Zero(2 * m), S * nu.asDiagonal() * S.transpose()};
    for (int i = 0; i < m; ++i) {
        const Complex a = std::polar(radius(rng), phase(rng));
        state.mean(i) = 2.0 * a.real();
        state.mean(m + i) = 2.0 * a.imag();
    }
    return state;
}

/// Pure Gaussian state: random symplectic with log-squeezing in
/// [-squeeze_bound, squeeze_bound] on vacuum, displaced by |alpha| <= 2.
inline GaussianState random_pure_state(int m, std::mt19937_64 &rng, double squeeze_bound = 1.0) {
    std::uniform_real_distribution<double> radius(0.0, 2.0), phase(0.0, 2.0 * std::numbers::pi);
    const Matrix S = random_symplectic(m, rng(), squeeze_bound);
    GaussianState state{Vector::Zero(2 * m), S * S.transpose()};
    for (int i = 0; i < m; ++i) {
        const Complex a = std::polar(radius(rng), phase(rng));
        state.mean(i) = 2.0 * a.real();
        state.mean(m + i) = 2.0 * a.imag();
    }
    return state;
}

/// Closed-form relative purity of a random mixed state for `trials` draws.
inline ExperimentResult verify_bounds(const RunConfig &cfg) {
    if (cfg.trials < 1) {
        throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> mode_count(1, 5);
    double min_ratio = INFINITY, max_delta = -INFINITY;
    int violations = 0, skipped = 0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const int m = mode_count(rng);
        const GaussianState state = random_mixed_state(m, rng);
        const int g = std::uniform_int_distribution<int>(0, m - 1)(rng);
        const WilliamsonDecomposition decomp = williamson(state);
        double ratio = 0.0;
        try {
            ratio = relative_purity_closed_form(decomp, bogoliubov_row(decomp, g), cfg.kind);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::VacuumModeSubtraction) {
                throw;
            }
            ++skipped;
            continue;
        }
        min_ratio = std::min(min_ratio, ratio);
        max_delta = std::max(max_delta, -std::log(ratio));
        if (ratio < 0.5 - kRatioSlack || -std::log(ratio) > kLog2 + kBoundSlack) {
            ++violations;
        }
    }
    nlohmann::ordered_json s;
    s["kind"] = to_string(cfg.kind);
    s["max_delta_E"] = round_real(max_delta);
    s["min_ratio"] = round_real(min_ratio);
    s["seed"] = cfg.seed;
    s["skipped"] = skipped;
    s["trials"] = cfg.trials;
    s["violations"] = violations;
    ExperimentResult result;
    result.summary = std::move(s);
    result.violations = violations;
    result.passed = violations == 0;
    return result;
}

/// |a - b| / max(|b|, 1e-3): relative to the reference b, absolute near zero.
inline double relative_error(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-3);
}

/// Analytic purity, relative purity and entanglement change of one chain
/// configuration against the truncated-Fock oracle, for every subsystem
/// containing g and both operations.
struct OracleComparison {
    int cutoff = 0;
    double leakage = 0.0;
    int cases = 0;
    double max_rel_err = 0.0;
    std::string worst;
};

inline OracleComparison compare_chain_with_oracle(int m, double r, Complex alpha, int g, int cutoff) {
    const auto elements = chain_circuit(ChainSpec{m, r, g, alpha});
    const GaussianState gauss = evolve(vacuum(m), elements);
    const FockState fock = apply_circuit_fock(FockState::vacuum(m, cutoff), elements, kOracleLeakTol);
    const LadderResult sub = annihilate(fock, g);
    const LadderResult add = create(fock, g, kOracleLeakTol);

    OracleComparison out;
    out.cutoff = cutoff;
    out.leakage = std::max(fock.leakage, add.state.leakage);
    auto record = [&](double value, double reference, const std::string &what) {
        const double err = relative_error(value, reference);
        ++out.cases;
        if (err > out.max_rel_err || out.worst.empty()) {
            out.max_rel_err = std::max(out.max_rel_err, err);
            out.worst = what;
        }
    };
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (!(mask & (std::uint64_t{1} << g))) {
            continue;
        }
        const SubsystemBasis side = SubsystemBasis::from_mask(m, mask);
        const std::string tag = "m=" + std::to_string(m) + " r=" + format_real(r) +
                                " alpha=" + format_complex(alpha) + " mask=" + std::to_string(mask);
        const GaussianState reduced = reduce(gauss, side);
        const double mu = purity(reduced);
        const double mu_oracle = reduced_purity(fock, side.modes());
        record(mu, mu_oracle, tag + " purity");

        const WilliamsonDecomposition decomp = williamson(reduced);
        const BogoliubovRow row = bogoliubov_row(decomp, side.local_index(g));
        for (PhotonOp op : {PhotonOp::Subtract, PhotonOp::Add}) {
            const FockState &after = op == PhotonOp::Subtract ? sub.state : add.state;
            const double ratio_oracle = reduced_purity(after, side.modes()) / mu_oracle;
            const std::string opt = tag + " " + to_string(op);
            record(relative_purity_closed_form(decomp, row, op), ratio_oracle, opt + " closed-form ratio");
            if (op == PhotonOp::Subtract) {
                record(purity_of_subtracted(subtract_reduced_wigner(gauss, g, side)) / mu, ratio_oracle,
                       opt + " wigner ratio");
            }
            record(entanglement_increase(gauss, side, g, op).delta, -std::log(ratio_oracle), opt + " delta_e");
        }
    }
    return out;
}

/// Mean photon number of a Gaussian state.
inline double mean_photons(const GaussianState &state) {
    return (state.cov.trace() - 2.0 * state.modes() + state.mean.squaredNorm()) / 4.0;
}

/// Thermal cutoff at which the discarded Bose-Einstein tail is below 1e-18.
inline int thermal_cutoff(double n) {
    const double x = (n - 1) / (n + 1);
    if (x <= 0.0) {
        return 4;
    }
    return static_cast<int>(std::ceil(std::log(1e-18) / std::log(x))) + 10;
}

/// Max relative error of the eight closed-form thermal traces against the
/// thermal density matrix.
inline double thermal_trace_error(double n) {
    const ThermalTraceSet exact = thermal_traces(n);
    const ThermalTraceSet fock = thermal_traces_fock(n, thermal_cutoff(n));
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.t.size(); ++i) {
        worst = std::max(worst, relative_error(exact.t[i], fock.t[i]));
    }
    return worst;
}

/// Subtraction ratio through the closed form and through the Wigner moments
/// for `count` random pure configurations; returns the largest relative gap.
inline double two_path_discrepancy(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mode_count(2, 5);
    double worst = 0.0;
    for (int k = 0; k < count; ++k) {
        const int m = mode_count(rng);
        const GaussianState state = random_pure_state(m, rng);
        const int g = std::uniform_int_distribution<int>(0, m - 1)(rng);
        std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << m) - 1)(rng);
        mask |= std::uint64_t{1} << g;
        const SubsystemBasis side = SubsystemBasis::from_mask(m, mask);
        const GaussianState reduced = reduce(state, side);
        const WilliamsonDecomposition decomp = williamson(reduced);
        const double closed =
            relative_purity_closed_form(decomp, bogoliubov_row(decomp, side.local_index(g)), PhotonOp::Subtract);
        const double wigner = purity_of_subtracted(subtract_reduced_wigner(state, g, side)) / purity(reduced);
        worst = std::max(worst, std::abs(wigner - closed) / std::abs(closed));
    }
    return worst;
}

/// Three blocks: analytic vs oracle on small chains, thermal traces, and
/// closed form vs Wigner moments.
inline ExperimentResult oracle_check(const RunConfig &cfg) {
    ExperimentResult result;
    nlohmann::ordered_json s;

    std::vector<int> mode_counts = {2, 3};
    if (cfg.modes) {
        if (*cfg.modes < 2 || *cfg.modes > 3) {
            throw Error(ErrorCode::InvalidConfig, "oracle-check runs chains of 2 or 3 modes");
        }
        mode_counts = {*cfg.modes};
    }
    const std::vector<double> rs = cfg.grid.empty() ? std::vector<double>{0.1, 0.4, 0.8} : cfg.grid;
    check_grid(rs);
    const std::vector<Complex> alphas = cfg.alphas.empty() ? std::vector<Complex>{0.0, 0.5} : cfg.alphas;

    double max_err = 0.0, max_leak = 0.0;
    int cases = 0;
    std::string worst;
    auto failures = nlohmann::ordered_json::array();
    for (int m : mode_counts) {
        const int g = default_subtraction_mode(m);
        for (double r : rs) {
            for (Complex alpha : alphas) {
                const double photons = mean_photons(build_chain(ChainSpec{m, r, g, alpha}));
                int cutoff = cfg.cutoff.value_or(suggested_cutoff(photons));
                const int cap = cfg.cutoff ? cutoff : 48;
                while (true) {
                    try {
                        const OracleComparison c = compare_chain_with_oracle(m, r, alpha, g, cutoff);
                        cases += c.cases;
                        max_leak = std::max(max_leak, c.leakage);
                        if (c.max_rel_err >= max_err) {
                            max_err = c.max_rel_err;
                            worst = c.worst;
                        }
                        break;
                    } catch (const Error &e) {
                        if (e.code() != ErrorCode::CutoffTooSmall) {
                            throw;
                        }
                        if (cutoff + 8 > cap) {
                            failures.push_back({{"m", m},
                                                {"r", round_real(r)},
                                                {"alpha_g", format_complex(alpha)},
                                                {"cutoff", cutoff},
                                                {"error", to_string(e.code())}});
                            break;
                        }
                        cutoff += 8;
                    }
                }
            }
        }
    }
    const bool oracle_ok = failures.empty() && max_err <= kOracleTol;
    s["analytic_vs_oracle"] = {{"cases", cases},
                               {"failures", failures},
                               {"max_leakage", round_real(max_leak)},
                               {"max_rel_err", round_real(max_err)},
                               {"passed", oracle_ok},
                               {"tolerance", kOracleTol},
                               {"worst_case", worst}};

    double trace_err = 0.0;
    for (double n : {1.5, 2.0, 5.0}) {
        trace_err = std::max(trace_err, thermal_trace_error(n));
    }
    const bool trace_ok = trace_err <= kTraceTol;
    s["thermal_traces"] = {{"max_rel_err", round_real(trace_err)}, {"passed", trace_ok}, {"tolerance", kTraceTol}};

    constexpr int kTwoPathConfigs = 1000;
    const double two_path = two_path_discrepancy(cfg.seed, kTwoPathConfigs);
    const bool two_path_ok = two_path <= kTwoPathTol;
    s["two_path"] = {{"configs", kTwoPathConfigs},
                     {"max_rel_err", round_real(two_path)},
                     {"passed", two_path_ok},
                     {"seed", cfg.seed},
                     {"tolerance", kTwoPathTol}};

    result.passed = oracle_ok && trace_ok && two_path_ok;
    s["passed"] = result.passed;
    result.summary = std::move(s);
    return result;
}

inline ExperimentResult run_experiment(const RunConfig &cfg) {
    switch (cfg.experiment) {
        case Experiment::SweepSqueezing: return sweep_squeezing(cfg);
        case Experiment::ScanBipartitions: return scan_bipartitions(cfg);
        case Experiment::VerifyBounds: return verify_bounds(cfg);
        case Experiment::OracleCheck: return oracle_check(cfg);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown experiment");
}

/// Process exit status: 0 pass, 1 bound violation or oracle mismatch,
/// 2 configuration error, 3 numerical failure.
inline int exit_code_for(const ExperimentResult &result) {
    return result.passed ? 0 : 1;
}

inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::EmptySubsystem:
        case ErrorCode::InvalidOccupation:
        case ErrorCode::InvalidAdjacency:
        case ErrorCode::TooManyModes:
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidConfig: return 2;
        default: return 3;
    }
}

}  // namespace cvd

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

#pragma once

#include <cmath>
#include <vector>

#include "cvd/error.hpp"
#include "cvd/gaussian_state.hpp"
#include "cvd/symplectic.hpp"

namespace cvd {

/// Linear chain of two-mode squeezers S_1 ... S_{m-1} on vacuum, followed by
/// a displacement alpha_g on mode g.
struct ChainSpec {
    int modes = 10;
    double r = 1.0;
    int g = 4;
    Complex alpha_g = 0.0;
};

/// Graph state: p-squeezed vacua entangled by CZ gates along `adjacency`,
/// then displaced by alpha_g on mode g.
struct GraphSpec {
    Matrix adjacency;
    double squeezing_db = 10.0;
    int g = 0;
    Complex alpha_g = 0.0;
};

/// 0-based middle mode, ceil(m/2) - 1.
inline int default_subtraction_mode(int m) {
    return (m + 1) / 2 - 1;
}

inline std::vector<CircuitElement> chain_circuit(const ChainSpec &spec) {
    if (spec.modes < 2) {
        throw Error(ErrorCode::InvalidArgument, "a chain needs at least two modes");
    }
    detail::check_mode(spec.g, spec.modes);
    std::vector<CircuitElement> elements;
    for (int i = 0; i + 1 < spec.modes; ++i) {
        elements.emplace_back(TwoModeSqueezer{i, i + 1, spec.r});
    }
    if (spec.alpha_g != Complex(0.0)) {
        elements.emplace_back(displacement_on(spec.modes, spec.g, spec.alpha_g));
    }
    return elements;
}

inline GaussianState build_chain(const ChainSpec &spec) {
    const auto elements = chain_circuit(spec);
    return evolve(vacuum(spec.modes), elements);
}

inline void validate_adjacency(const Matrix &adjacency) {
    if (adjacency.rows() < 1 || adjacency.rows() != adjacency.cols()) {
        throw Error(ErrorCode::InvalidAdjacency, "adjacency matrix must be square and nonempty");
    }
    if ((adjacency - adjacency.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw Error(ErrorCode::InvalidAdjacency, "adjacency matrix must be symmetric");
    }
    if (adjacency.diagonal().cwiseAbs().maxCoeff() > 0.0) {
        throw Error(ErrorCode::InvalidAdjacency, "adjacency matrix must have a zero diagonal");
    }
}

/// Squeezed-quadrature variance for a squeezing level in dB.
inline double squeezed_variance(double db) {
    return std::pow(10.0, -db / 10.0);
}

inline std::vector<CircuitElement> graph_circuit(const GraphSpec &spec) {
    validate_adjacency(spec.adjacency);
    if (!(spec.squeezing_db >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "squeezing must be non-negative");
    }
    const int m = static_cast<int>(spec.adjacency.rows());
    detail::check_mode(spec.g, m);
    std::vector<CircuitElement> elements;
    // x -> e^{-r} x has variance e^{-2r}; negative r antisqueezes x to s.
    const double r = 0.5 * std::log(squeezed_variance(spec.squeezing_db));
    if (r != 0.0) {
        for (int i = 0; i < m; ++i) {
            elements.emplace_back(SingleModeSqueezer{i, r});
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (spec.adjacency(i, j) != 0.0) {
                elements.emplace_back(ControlledZ{i, j, spec.adjacency(i, j)});
            }
        }
    }
    if (spec.alpha_g != Complex(0.0)) {
        elements.emplace_back(displacement_on(m, spec.g, spec.alpha_g));
    }
    return elements;
}

inline GaussianState build_graph(const GraphSpec &spec) {
    const auto elements = graph_circuit(spec);
    return evolve(vacuum(static_cast<int>(spec.adjacency.rows())), elements);
}

/// Nearest-neighbour square lattice; mode index = row * cols + col.
inline Matrix grid_adjacency(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw Error(ErrorCode::InvalidArgument, "grid dimensions must be positive");
    }
    const int m = rows * cols;
    Matrix adj = Matrix::Zero(m, m);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int here = r * cols + c;
            if (c + 1 < cols) {
                adj(here, here + 1) = adj(here + 1, here) = 1.0;
            }
            if (r + 1 < rows) {
                adj(here, here + cols) = adj(here + cols, here) = 1.0;
            }
        }
    }
    return adj;
}

/// Lowest-index mode coupled to g, or -1 when g is isolated.
inline int first_neighbour(const Matrix &adjacency, int g) {
    for (int j = 0; j < adjacency.rows(); ++j) {
        if (j != g && adjacency(g, j) != 0.0) {
            return j;
        }
    }
    return -1;
}

inline Matrix chain_adjacency(int m) {
    return grid_adjacency(1, m);
}

}  // namespace cvd

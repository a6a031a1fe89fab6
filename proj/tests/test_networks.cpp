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

#include <cmath>

#include <gtest/gtest.h>

#include "cvd/networks.hpp"

namespace {

using namespace cvd;

int edge_count(const Matrix &adj) {
    return static_cast<int>(adj.sum() / 2);
}

TEST(Chain, ZeroSqueezingIsVacuum) {
    const GaussianState s = build_chain(ChainSpec{2, 0.0, 0, 0.0});
    EXPECT_EQ(s.cov, Matrix::Identity(4, 4));
    EXPECT_EQ(s.mean, Vector::Zero(4));
}

TEST(Chain, TenModeConfigurationIsPure) {
    const ChainSpec spec{10, 1.0, default_subtraction_mode(10), 0.5};
    EXPECT_EQ(spec.g, 4);
    const GaussianState s = build_chain(spec);
    EXPECT_EQ(s.cov.rows(), 20);
    EXPECT_NEAR(s.cov.determinant(), 1.0, 1e-8);
    EXPECT_DOUBLE_EQ(s.mean(4), 1.0);  // x_g = 2 Re alpha
    EXPECT_DOUBLE_EQ(s.mean(14), 0.0);
}

TEST(Chain, DisplacementUsesLadderUnits) {
    const GaussianState s = build_chain(ChainSpec{3, 0.3, 2, Complex(0.25, -0.5)});
    EXPECT_DOUBLE_EQ(s.mean(2), 0.5);
    EXPECT_DOUBLE_EQ(s.mean(5), -1.0);
}

TEST(Chain, WeakSqueezingBarelyEntangles) {
    const GaussianState s = build_chain(ChainSpec{3, 0.01, 1, 0.0});
    for (std::uint64_t mask = 1; mask < 7; ++mask) {
        EXPECT_LE(renyi2_entanglement_pure(s, SubsystemBasis::from_mask(3, mask)), 1e-3);
    }
}

TEST(Chain, Validation) {
    EXPECT_THROW(build_chain(ChainSpec{1, 1.0, 0, 0.0}), Error);
    EXPECT_THROW(build_chain(ChainSpec{4, 1.0, 4, 0.0}), Error);
    EXPECT_EQ(default_subtraction_mode(3), 1);
    EXPECT_EQ(default_subtraction_mode(2), 0);
    EXPECT_EQ(default_subtraction_mode(9), 4);
}

TEST(Graph, NoEdgesNoSqueezingIsVacuum) {
    const GaussianState s = build_graph(GraphSpec{Matrix::Zero(3, 3), 0.0, 0, 0.0});
    EXPECT_LT((s.cov - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Graph, ThreeByThreeClusterIsPure) {
    const GraphSpec spec{grid_adjacency(3, 3), 10.0, 1, 0.5};
    const GaussianState s = build_graph(spec);
    EXPECT_NEAR(s.cov.determinant(), 1.0, 1e-8);
    EXPECT_NEAR(squeezed_variance(10.0), 0.1, 1e-15);
    EXPECT_DOUBLE_EQ(s.mean(1), 1.0);
}

TEST(Graph, SingleEdgeKeepsPositionBlock) {
    const GaussianState s = build_graph(GraphSpec{chain_adjacency(2), 10.0, 0, 0.0});
    Matrix x_block = Matrix::Identity(2, 2) * 10.0;  // antisqueezed x
    EXPECT_LT((s.cov.topLeftCorner(2, 2) - x_block).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Graph, NullifierVariance) {
    for (double db : {3.0, 10.0, 15.0}) {
        const Matrix adj = grid_adjacency(3, 3);
        const GaussianState s = build_graph(GraphSpec{adj, db, 0, 0.0});
        // Nullifier p - A x, as a linear map on the quadrature vector.
        Matrix N(9, 18);
        N << -adj, Matrix::Identity(9, 9);
        const Matrix cov = N * s.cov * N.transpose();
        for (int i = 0; i < 9; ++i) {
            EXPECT_NEAR(cov(i, i), squeezed_variance(db), 1e-9) << db << " dB, mode " << i;
        }
    }
}

TEST(Graph, InvalidAdjacency) {
    auto code_of = [](const Matrix &adj) {
        try {
            build_graph(GraphSpec{adj, 10.0, 0, 0.0});
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InvalidConfig;
    };
    Matrix asym = Matrix::Zero(2, 2);
    asym(0, 1) = 1.0;
    EXPECT_EQ(code_of(asym), ErrorCode::InvalidAdjacency);
    Matrix loop = Matrix::Zero(2, 2);
    loop(0, 0) = 1.0;
    EXPECT_EQ(code_of(loop), ErrorCode::InvalidAdjacency);
    EXPECT_EQ(code_of(Matrix::Zero(2, 3)), ErrorCode::InvalidAdjacency);
    EXPECT_THROW(build_graph(GraphSpec{grid_adjacency(2, 2), -1.0, 0, 0.0}), Error);
}

TEST(GridAdjacency, EdgeCounts) {
    Matrix pair(2, 2);
    pair << 0, 1, 1, 0;
    EXPECT_EQ(grid_adjacency(1, 2), pair);
    EXPECT_EQ(edge_count(grid_adjacency(3, 3)), 12);
    EXPECT_EQ(edge_count(grid_adjacency(2, 2)), 4);
    for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= 4; ++c) {
            EXPECT_EQ(edge_count(grid_adjacency(r, c)), 2 * r * c - r - c);
        }
    }
    EXPECT_THROW(grid_adjacency(0, 3), Error);
}

TEST(GridAdjacency, FirstNeighbour) {
    const Matrix adj = grid_adjacency(3, 3);
    EXPECT_EQ(first_neighbour(adj, 1), 0);
    EXPECT_EQ(first_neighbour(adj, 0), 1);
    EXPECT_EQ(first_neighbour(adj, 4), 1);
    EXPECT_EQ(first_neighbour(Matrix::Zero(2, 2), 0), -1);
    EXPECT_EQ(first_neighbour(chain_adjacency(10), 4), 3);
}

}  // namespace

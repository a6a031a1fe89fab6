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
#include <vector>

#include <gtest/gtest.h>

#include "cvd/gaussian_state.hpp"
#include "cvd/symplectic.hpp"

namespace {

using namespace cvd;

double max_abs(const Matrix &m) {
    return m.cwiseAbs().maxCoeff();
}

TEST(SymplecticForm, SquaresToMinusIdentity) {
    const Matrix omega = symplectic_form(3);
    EXPECT_EQ(omega.rows(), 6);
    EXPECT_LT(max_abs(omega * omega + Matrix::Identity(6, 6)), 1e-15);
    EXPECT_EQ(omega(0, 3), 1.0);
    EXPECT_EQ(omega(3, 0), -1.0);
    EXPECT_THROW(symplectic_form(0), Error);
}

TEST(ElementToSymplectic, ZeroSqueezingIsIdentity) {
    const AffineSymplectic a = element_to_symplectic(TwoModeSqueezer{0, 1, 0.0}, 2);
    EXPECT_LT(max_abs(a.S - Matrix::Identity(4, 4)), 1e-15);
    EXPECT_EQ(a.shift.norm(), 0.0);
}

TEST(ElementToSymplectic, ControlledZCouplesMomentaToPositions) {
    const Matrix S = element_to_symplectic(ControlledZ{0, 1, 1.0}, 2).S;
    Matrix expected = Matrix::Identity(4, 4);
    expected(2, 1) = 1.0;  // p0 <- x1
    expected(3, 0) = 1.0;  // p1 <- x0
    EXPECT_EQ(S, expected);
}

TEST(ElementToSymplectic, DisplacementIsPureShift) {
    const Displacement d = displacement_on(2, 1, {0.25, -0.5});
    const AffineSymplectic a = element_to_symplectic(d, 2);
    EXPECT_EQ(a.S, Matrix::Identity(4, 4));
    EXPECT_DOUBLE_EQ(a.shift(1), 0.5);
    EXPECT_DOUBLE_EQ(a.shift(3), -1.0);
    EXPECT_EQ(a.shift(0), 0.0);
    EXPECT_EQ(a.shift(2), 0.0);
}

TEST(ElementToSymplectic, TwoModeSqueezerOnVacuumGivesCoshMarginal) {
    // Frozen from the Fock oracle: <x0^2> = <p0^2> = cosh 1 for r = 1.
    const GaussianState s = evolve(vacuum(2), TwoModeSqueezer{0, 1, 1.0});
    EXPECT_NEAR(s.cov(0, 0), 1.5430806348152437, 1e-12);
    EXPECT_NEAR(s.cov(2, 2), 1.5430806348152437, 1e-12);
    EXPECT_NEAR(s.cov(0, 2), 0.0, 1e-15);
    // x0 x1 anti-correlated, p0 p1 correlated.
    EXPECT_NEAR(s.cov(0, 1), -std::sinh(1.0), 1e-12);
    EXPECT_NEAR(s.cov(2, 3), std::sinh(1.0), 1e-12);
}

TEST(ElementToSymplectic, EveryElementIsSymplectic) {
    const std::vector<CircuitElement> elements = {
        TwoModeSqueezer{0, 2, 0.7}, SingleModeSqueezer{1, -0.4}, Beamsplitter{2, 1, 0.3},
        ControlledZ{0, 1, -1.7},    displacement_on(3, 2, {1.0, 2.0}),
    };
    for (const auto &e : elements) {
        const Matrix S = element_to_symplectic(e, 3).S;
        EXPECT_LE(symplectic_residual(S), 1e-12);
        EXPECT_TRUE(is_symplectic(S));
    }
}

TEST(ElementToSymplectic, BadIndicesThrow) {
    auto code_of = [](const CircuitElement &e, int m) {
        try {
            element_to_symplectic(e, m);
        } catch (const Error &err) {
            return err.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code_of(TwoModeSqueezer{0, 2, 1.0}, 2), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of(TwoModeSqueezer{1, 1, 1.0}, 2), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of(SingleModeSqueezer{-1, 1.0}, 2), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of(Displacement{Vector::Zero(3)}, 2), ErrorCode::IndexOutOfRange);
}

TEST(ElementToSymplectic, SqueezerInverseIsNegatedParameter) {
    for (double r : {0.1, 0.9, 2.5}) {
        const Matrix fwd = element_to_symplectic(TwoModeSqueezer{1, 3, r}, 4).S;
        const Matrix back = element_to_symplectic(TwoModeSqueezer{1, 3, -r}, 4).S;
        EXPECT_LT(max_abs(fwd.inverse() - back), 1e-12) << "r = " << r;
    }
}

TEST(ElementToSymplectic, ControlledZAndDisplacementKeepXBlock) {
    std::mt19937_64 rng(7);
    const Matrix S = random_symplectic(3, 11, 1.0);
    const GaussianState s{Vector::Zero(6), S * S.transpose()};
    const GaussianState t = evolve(evolve(s, ControlledZ{0, 2, 0.8}), displacement_on(3, 1, {0.3, 0.1}));
    EXPECT_LT(max_abs(t.cov.topLeftCorner(3, 3) - s.cov.topLeftCorner(3, 3)), 1e-14);
}

TEST(Compose, EmptyIsIdentity) {
    const AffineSymplectic a = compose({}, 3);
    EXPECT_EQ(a.S, Matrix::Identity(6, 6));
    EXPECT_EQ(a.shift, Vector::Zero(6));
}

TEST(Compose, ForwardThenBackwardCancels) {
    const std::vector<CircuitElement> pair = {TwoModeSqueezer{0, 1, 0.8}, TwoModeSqueezer{0, 1, -0.8}};
    EXPECT_LT(max_abs(compose(pair, 2).S - Matrix::Identity(4, 4)), 1e-12);
}

TEST(Compose, TemporalOrder) {
    // Squeeze then displace: the shift must not be squeezed.
    const std::vector<CircuitElement> seq = {SingleModeSqueezer{0, 1.0}, displacement_on(1, 0, {1.0, 0.0})};
    EXPECT_NEAR(compose(seq, 1).shift(0), 2.0, 1e-15);
    const std::vector<CircuitElement> rev = {displacement_on(1, 0, {1.0, 0.0}), SingleModeSqueezer{0, 1.0}};
    EXPECT_NEAR(compose(rev, 1).shift(0), 2.0 * std::exp(-1.0), 1e-15);
}

TEST(Compose, TenModeChainIsSymplectic) {
    std::vector<CircuitElement> chain;
    for (int i = 0; i < 9; ++i) {
        chain.emplace_back(TwoModeSqueezer{i, i + 1, 1.0});
    }
    const Matrix S = compose(chain, 10).S;
    EXPECT_EQ(S.rows(), 20);
    EXPECT_LE(symplectic_residual(S), 1e-9);
}

TEST(RandomSymplectic, DeterministicForSeed) {
    EXPECT_EQ(random_symplectic(4, 123, 1.5), random_symplectic(4, 123, 1.5));
    EXPECT_NE(random_symplectic(4, 123, 1.5), random_symplectic(4, 124, 1.5));
}

TEST(RandomSymplectic, SeedFortyTwoThreeModes) {
    EXPECT_TRUE(is_symplectic(random_symplectic(3, 42, 1.0)));
}

TEST(RandomSymplectic, ZeroBoundIsOrthogonal) {
    const Matrix S = random_symplectic(4, 5, 0.0);
    EXPECT_LT(max_abs(S.transpose() * S - Matrix::Identity(8, 8)), 1e-9);
    EXPECT_LE(symplectic_residual(S), 1e-9);
}

TEST(RandomSymplectic, PropertySweep) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int m = 1 + static_cast<int>(seed % 6);
        const Matrix S = random_symplectic(m, seed, 2.0);
        ASSERT_LE(symplectic_residual(S), 1e-9) << "seed " << seed;
        // Log-squeezing bounded by 2 per factor: singular values within [e^-2, e^2].
        Eigen::JacobiSVD<Matrix> svd(S);
        EXPECT_LE(svd.singularValues().maxCoeff(), std::exp(2.0) * (1 + 1e-9));
        EXPECT_GE(svd.singularValues().minCoeff(), std::exp(-2.0) * (1 - 1e-9));
    }
    EXPECT_THROW(random_symplectic(2, 1, -1.0), Error);
}

}  // namespace

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
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cvd/experiments.hpp"
#include "cvd/networks.hpp"
#include "cvd/photon_ops.hpp"

namespace {

using namespace cvd;

// Entanglement changes frozen from the truncated Fock simulator.
constexpr double kTmsvSubtractGain = 0.3425083783959174;     // r = 1, A = {0}, g = 0, cutoff 30
constexpr double kDisplacedSubtractGain = 0.004424976639364576;  // r = 0.5, alpha = 0.5
constexpr double kDisplacedAddGain = 0.07257756060442917;

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InvalidConfig;
}

GaussianState thermal_mode(double n) {
    const std::vector<double> nu = {n};
    return thermal_state(nu);
}

WilliamsonDecomposition single_thermal_frame(double n) {
    return WilliamsonDecomposition{Matrix::Identity(2, 2), Vector::Constant(1, n), Vector::Zero(2)};
}

TEST(SubtractReducedWigner, VacuumIsRejected) {
    EXPECT_EQ(code_of([] { subtract_reduced_wigner(vacuum(2), 0, SubsystemBasis(2, {0})); }),
              ErrorCode::VacuumModeSubtraction);
    EXPECT_EQ(code_of([] { subtract_reduced_wigner(vacuum(2), 0, SubsystemBasis(2, {1})); }),
              ErrorCode::InvalidArgument);
}

TEST(SubtractReducedWigner, IllConditionedIsRejected) {
    const GaussianState s = evolve(vacuum(1), SingleModeSqueezer{0, 14.0});
    EXPECT_EQ(code_of([&] { subtract_reduced_wigner(s, 0, SubsystemBasis(1, {0})); }),
              ErrorCode::SingularCovariance);
}

TEST(SubtractReducedWigner, PureGlobalStaysPure) {
    const GaussianState s = evolve(vacuum(2), TwoModeSqueezer{0, 1, 1.0});
    const SubtractedReducedState w = subtract_reduced_wigner(s, 0, SubsystemBasis(2, {0, 1}));
    EXPECT_NEAR(w.total_weight(), 1.0, 1e-12);
    EXPECT_NEAR(purity_of_subtracted(w), 1.0, 1e-12);
}

TEST(SubtractReducedWigner, ThermalModeRatio) {
    const GaussianState th = thermal_mode(2.0);
    const SubtractedReducedState w = subtract_reduced_wigner(th, 0, SubsystemBasis(1, {0}));
    EXPECT_NEAR(purity_of_subtracted(w), 5.0 / 16.0, 1e-14);
    EXPECT_NEAR(purity_of_subtracted(w) / purity(th), 5.0 / 8.0, 1e-14);
}

TEST(SubtractReducedWigner, NormalisedForRandomStates) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + trial % 4;
        const GaussianState s = random_mixed_state(m, rng);
        const int g = static_cast<int>(rng() % static_cast<unsigned>(m));
        const std::uint64_t mask = (rng() % (std::uint64_t{1} << m)) | (std::uint64_t{1} << g);
        const SubtractedReducedState w = subtract_reduced_wigner(s, g, SubsystemBasis::from_mask(m, mask));
        ASSERT_NEAR(w.total_weight(), 1.0, 1e-9) << "trial " << trial;
        const double mu = purity_of_subtracted(w);
        EXPECT_GT(mu, 0.0);
        EXPECT_LE(mu, 1.0 + 1e-9);
    }
}

// Brute-force phase-space quadrature of the single-mode Wigner function:
// its integral must be 1 and 4 pi times the integral of its square the purity.
TEST(SubtractReducedWigner, SingleModeQuadrature) {
    const std::vector<CircuitElement> circuit = {TwoModeSqueezer{0, 1, 0.9}, Beamsplitter{0, 1, 0.4},
                                                 displacement_on(2, 0, {0.4, -0.3})};
    const GaussianState s = evolve(vacuum(2), circuit);
    const SubtractedReducedState w = subtract_reduced_wigner(s, 0, SubsystemBasis(2, {0}));
    const double half = 12.0, h = 0.04;
    double total = 0.0, square = 0.0;
    Vector beta(2);
    for (double x = -half; x <= half; x += h) {
        for (double p = -half; p <= half; p += h) {
            beta << w.base.mean(0) + x, w.base.mean(1) + p;
            const double v = w.wigner(beta);
            total += v;
            square += v * v;
        }
    }
    total *= h * h;
    square *= h * h * 4.0 * std::numbers::pi;
    EXPECT_NEAR(total, 1.0, 1e-8);
    EXPECT_NEAR(square, purity_of_subtracted(w), 1e-8);
}

TEST(ClosedForm, PureStatesAreFixedPoints) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + trial % 5;
        const WilliamsonDecomposition w{random_symplectic(m, rng(), 2.0), Vector::Ones(m),
                                        Vector::Random(2 * m)};
        const int g = static_cast<int>(rng() % static_cast<unsigned>(m));
        const BogoliubovRow row = bogoliubov_row(w, g);
        EXPECT_NEAR(relative_purity_closed_form(w, row, PhotonOp::Subtract), 1.0, 1e-10);
        EXPECT_NEAR(relative_purity_closed_form(w, row, PhotonOp::Add), 1.0, 1e-10);
    }
}

TEST(ClosedForm, ThermalModeSaturation) {
    for (double n : {2.0, 10.0, 100.0}) {
        const WilliamsonDecomposition w = single_thermal_frame(n);
        const double ratio = relative_purity_closed_form(w, bogoliubov_row(w, 0), PhotonOp::Subtract);
        EXPECT_NEAR(ratio, (n * n + 1) / (2 * n * n), 1e-12) << "n = " << n;
    }
    const WilliamsonDecomposition w = single_thermal_frame(2.0);
    EXPECT_NEAR(relative_purity_closed_form(w, bogoliubov_row(w, 0), PhotonOp::Subtract), 0.625, 1e-15);
    const WilliamsonDecomposition big = single_thermal_frame(100.0);
    EXPECT_NEAR(relative_purity_closed_form(big, bogoliubov_row(big, 0), PhotonOp::Subtract), 0.50005, 1e-12);
}

TEST(ClosedForm, VacuumDenominator) {
    const WilliamsonDecomposition w = single_thermal_frame(1.0);
    EXPECT_EQ(code_of([&] { relative_purity_closed_form(w, bogoliubov_row(w, 0), PhotonOp::Subtract); }),
              ErrorCode::VacuumModeSubtraction);
    // Adding to vacuum is always allowed.
    EXPECT_NEAR(relative_purity_closed_form(w, bogoliubov_row(w, 0), PhotonOp::Add), 1.0, 1e-15);
}

TEST(ClosedForm, MatchesWignerPath) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 2 + trial % 4;
        const GaussianState s = random_pure_state(m, rng);
        const int g = static_cast<int>(rng() % static_cast<unsigned>(m));
        const std::uint64_t mask = (rng() % (std::uint64_t{1} << m)) | (std::uint64_t{1} << g);
        const SubsystemBasis side = SubsystemBasis::from_mask(m, mask);
        const GaussianState reduced = reduce(s, side);
        const WilliamsonDecomposition w = williamson(reduced);
        const double closed =
            relative_purity_closed_form(w, bogoliubov_row(w, side.local_index(g)), PhotonOp::Subtract);
        const double wigner = purity_of_subtracted(subtract_reduced_wigner(s, g, side)) / purity(reduced);
        EXPECT_NEAR(wigner / closed, 1.0, 1e-8) << "trial " << trial;
    }
}

TEST(ClosedForm, HalfBoundOnRandomMixedStates) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 1 + trial % 5;
        const WilliamsonDecomposition w = williamson(random_mixed_state(m, rng));
        const BogoliubovRow row = bogoliubov_row(w, trial % m);
        ASSERT_GE(relative_purity_closed_form(w, row, PhotonOp::Subtract), 0.5 - 1e-12);
        ASSERT_GE(relative_purity_closed_form(w, row, PhotonOp::Add), 0.5 - 1e-12);
    }
}

TEST(EntanglementIncrease, TwoModeSqueezedVacuum) {
    const GaussianState s = evolve(vacuum(2), TwoModeSqueezer{0, 1, 1.0});
    const EntanglementChange sub = entanglement_increase(s, SubsystemBasis(2, {0}), 0, PhotonOp::Subtract);
    EXPECT_NEAR(sub.delta, kTmsvSubtractGain, 1e-6 * kTmsvSubtractGain);
    EXPECT_GE(sub.delta, 0.0);
    EXPECT_LE(sub.delta, kLog2);
    EXPECT_NEAR(sub.before, std::log(std::cosh(1.0)), 1e-12);
    EXPECT_NEAR(sub.after - sub.before, sub.delta, 1e-15);
    // A two-mode squeezed vacuum is symmetric under swapping a and b^dag.
    const EntanglementChange add = entanglement_increase(s, SubsystemBasis(2, {0}), 0, PhotonOp::Add);
    EXPECT_NEAR(add.delta, kTmsvSubtractGain, 1e-6 * kTmsvSubtractGain);
}

TEST(EntanglementIncrease, DisplacedSqueezedPair) {
    const GaussianState s = build_chain(ChainSpec{2, 0.5, 0, 0.5});
    const SubsystemBasis a(2, {0});
    EXPECT_NEAR(entanglement_increase(s, a, 0, PhotonOp::Subtract).delta, kDisplacedSubtractGain,
                1e-6 * kDisplacedSubtractGain);
    EXPECT_NEAR(entanglement_increase(s, a, 0, PhotonOp::Add).delta, kDisplacedAddGain,
                1e-6 * kDisplacedAddGain);
}

TEST(EntanglementIncrease, BellLimit) {
    const GaussianState s = build_chain(ChainSpec{3, 0.01, 1, 0.0});
    const double delta = entanglement_increase(s, SubsystemBasis(3, {0}), 1, PhotonOp::Subtract).delta;
    EXPECT_GE(delta, 0.99 * kLog2);
    EXPECT_LE(delta, kLog2 + 1e-9);
}

TEST(EntanglementIncrease, OperatedModeOutsideSubsystemUsesComplement) {
    const GaussianState s = build_chain(ChainSpec{4, 0.6, 1, Complex(0.2, 0.1)});
    for (PhotonOp op : {PhotonOp::Subtract, PhotonOp::Add}) {
        const double outside = entanglement_increase(s, SubsystemBasis(4, {0, 3}), 1, op).delta;
        const double inside = entanglement_increase(s, SubsystemBasis(4, {1, 2}), 1, op).delta;
        EXPECT_NEAR(outside, inside, 1e-12);
    }
}

TEST(EntanglementIncrease, Errors) {
    EXPECT_EQ(code_of([] { entanglement_increase(vacuum(2), SubsystemBasis(2, {0}), 0, PhotonOp::Subtract); }),
              ErrorCode::VacuumModeSubtraction);
    const std::vector<double> nu = {2.0, 1.0};
    EXPECT_EQ(
        code_of([&] { entanglement_increase(thermal_state(nu), SubsystemBasis(2, {0}), 0, PhotonOp::Subtract); }),
        ErrorCode::GlobalStateNotPure);
}

TEST(ThermalTraces, VacuumLimit) {
    const ThermalTraceSet t = thermal_traces(1.0);
    const std::array<double, 8> expected = {0, 1, 0, 1, 0, 0, 1, 0};
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_DOUBLE_EQ(t.t[i], expected[i]) << "trace " << i + 1;
    }
}

TEST(ThermalTraces, KnownValuesAtTwo) {
    const ThermalTraceSet t = thermal_traces(2.0);
    EXPECT_DOUBLE_EQ(t.t[0], 0.5);
    EXPECT_DOUBLE_EQ(t.t[2], 5.0 / 64.0);
    EXPECT_DOUBLE_EQ(t.t[4], 9.0 / 64.0);
}

TEST(ThermalTraces, CommutatorIdentities) {
    for (double n : {1.0, 1.5, 7.0}) {
        const ThermalTraceSet t = thermal_traces(n);
        EXPECT_NEAR(t.t[1] - t.t[0], 1.0, 1e-15);
        EXPECT_NEAR(t.t[6] - t.t[5], 1.0 / n, 1e-15);
    }
    EXPECT_EQ(code_of([] { thermal_traces(0.9); }), ErrorCode::InvalidOccupation);
}

}  // namespace

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

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace cvd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Phase-space vectors use the layout (x_1, ..., x_m, p_1, ..., p_m) with
// x = a + a^dagger and p = -i(a - a^dagger). The vacuum covariance is the
// identity and <a> = (<x> + i<p>) / 2.
inline constexpr int x_index(int /*m*/, int mode) {
    return mode;
}
inline constexpr int p_index(int m, int mode) {
    return m + mode;
}

/// Upper bound on the Renyi-2 entanglement gained from one photon (natural log).
inline constexpr double kLog2 = std::numbers::ln2;

}  // namespace cvd

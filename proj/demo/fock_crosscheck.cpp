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

// Build the same two-mode squeezed state in phase space and in a truncated
// Fock basis, add a photon to mode 0 in both, and compare.

#include <cmath>
#include <cstdio>
#include <vector>

#include "cvd/fock_oracle.hpp"
#include "cvd/photon_ops.hpp"

int main() {
    using namespace cvd;
    const std::vector<CircuitElement> circuit = {TwoModeSqueezer{0, 1, 0.8}, displacement_on(2, 0, {0.3, -0.2})};
    const GaussianState gauss = evolve(vacuum(2), circuit);
    const FockState fock = apply_circuit_fock(FockState::vacuum(2, 30), circuit);

    const SubsystemBasis side(2, {0});
    const double mu = reduced_purity(fock, {0});
    const double mu_plus = reduced_purity(create(fock, 0).state, {0});
    const double analytic = entanglement_increase(gauss, side, 0, PhotonOp::Add).delta;
    std::printf("purity   phase space %.12f  Fock %.12f\n", purity(reduce(gauss, side)), mu);
    std::printf("delta E  phase space %.12f  Fock %.12f\n", analytic, -std::log(mu_plus / mu));
    std::printf("Fock leakage %.3g\n", fock.leakage);
    return 0;
}

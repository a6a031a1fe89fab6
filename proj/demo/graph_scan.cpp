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

// Scan every cut of a 3x3 cluster state that keeps mode 1 on one side and
// report the largest entanglement gain per subsystem size.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "cvd/networks.hpp"
#include "cvd/photon_ops.hpp"

int main() {
    using namespace cvd;
    const GraphSpec spec{grid_adjacency(3, 3), 10.0, 1, 0.5};
    const GaussianState state = build_graph(spec);
    const int m = state.modes();

    std::vector<double> best(static_cast<std::size_t>(m + 1), 0.0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (!(mask & (std::uint64_t{1} << spec.g))) {
            continue;
        }
        const auto side = SubsystemBasis::from_mask(m, mask);
        const double delta = entanglement_increase(state, side, spec.g, PhotonOp::Subtract).delta;
        auto &slot = best[static_cast<std::size_t>(std::popcount(mask))];
        slot = std::max(slot, delta);
    }
    for (int size = 1; size <= m; ++size) {
        std::printf("|A| = %d  max delta = %.6f\n", size, best[static_cast<std::size_t>(size)]);
    }
    return 0;
}

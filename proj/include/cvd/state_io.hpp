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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cvd/error.hpp"
#include "cvd/gaussian_state.hpp"

namespace cvd {

/// {"m": m, "mean": [2m], "cov": [4m^2, row-major]}
inline nlohmann::ordered_json state_to_json(const GaussianState &state) {
    const int m = state.modes();
    nlohmann::ordered_json j;
    j["m"] = m;
    j["mean"] = std::vector<double>(state.mean.data(), state.mean.data() + state.mean.size());
    std::vector<double> cov;
    cov.reserve(static_cast<std::size_t>(4 * m * m));
    for (int r = 0; r < 2 * m; ++r) {
        for (int c = 0; c < 2 * m; ++c) {
            cov.push_back(state.cov(r, c));
        }
    }
    j["cov"] = std::move(cov);
    return j;
}

inline GaussianState state_from_json(const nlohmann::json &j) {
    try {
        const int m = j.at("m").get<int>();
        if (m < 1) {
            throw Error(ErrorCode::InvalidConfig, "state snapshot needs m >= 1");
        }
        const auto mean = j.at("mean").get<std::vector<double>>();
        const auto cov = j.at("cov").get<std::vector<double>>();
        if (mean.size() != static_cast<std::size_t>(2 * m) || cov.size() != static_cast<std::size_t>(4 * m * m)) {
            throw Error(ErrorCode::InvalidConfig, "state snapshot has inconsistent lengths");
        }
        GaussianState state{Vector(2 * m), Matrix(2 * m, 2 * m)};
        for (int i = 0; i < 2 * m; ++i) {
            state.mean(i) = mean[static_cast<std::size_t>(i)];
            for (int c = 0; c < 2 * m; ++c) {
                state.cov(i, c) = cov[static_cast<std::size_t>(i * 2 * m + c)];
            }
        }
        return state;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidConfig, std::string("malformed state snapshot: ") + e.what());
    }
}

}  // namespace cvd

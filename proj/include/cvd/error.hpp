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

#include <stdexcept>
#include <string>

namespace cvd {

enum class ErrorCode {
    IndexOutOfRange,
    EmptySubsystem,
    UnphysicalState,
    NumericalFailure,
    VacuumModeSubtraction,
    SingularCovariance,
    GlobalStateNotPure,
    InvalidOccupation,
    CutoffTooSmall,
    ZeroNorm,
    InvalidAdjacency,
    TooManyModes,
    InvalidArgument,
    InvalidConfig,
};

inline const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EmptySubsystem: return "EmptySubsystem";
        case ErrorCode::UnphysicalState: return "UnphysicalState";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
        case ErrorCode::VacuumModeSubtraction: return "VacuumModeSubtraction";
        case ErrorCode::SingularCovariance: return "SingularCovariance";
        case ErrorCode::GlobalStateNotPure: return "GlobalStateNotPure";
        case ErrorCode::InvalidOccupation: return "InvalidOccupation";
        case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
        case ErrorCode::ZeroNorm: return "ZeroNorm";
        case ErrorCode::InvalidAdjacency: return "InvalidAdjacency";
        case ErrorCode::TooManyModes: return "TooManyModes";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace cvd

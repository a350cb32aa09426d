// Copyright 2026 The orbitdim Authors
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
#include <string_view>

namespace orbitdim {

enum class ErrorCode {
    ZeroKet,
    BadIndex,
    BadRational,
    DuplicateIndex,
    BadDocument,
    UnknownName,
    QubitOutOfRange,
    DimensionMismatch,
    AmbiguousRank,
    RankMismatch,
    SamplingFailed,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroKet: return "ZeroKet";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::BadDocument: return "BadDocument";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbiguousRank: return "AmbiguousRank";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// that front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace orbitdim

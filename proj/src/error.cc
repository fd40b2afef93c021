// Copyright 2026 The symf Authors
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

#include "symf/error.h"

namespace symf {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::OddDimension: return "OddDimension";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::NotAFrame: return "NotAFrame";
        case ErrorCode::ZeroRank: return "ZeroRank";
        case ErrorCode::OddRankDetected: return "OddRankDetected";
        case ErrorCode::ZeroMatrix: return "ZeroMatrix";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::NotEquiangular: return "NotEquiangular";
        case ErrorCode::RoundingFailure: return "RoundingFailure";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EqualIndices: return "EqualIndices";
        case ErrorCode::NonIntegerResult: return "NonIntegerResult";
        case ErrorCode::EvenN: return "EvenN";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidSeidel: return "InvalidSeidel";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotSquareEtf: return "NotSquareEtf";
        case ErrorCode::NotCoreEtf: return "NotCoreEtf";
        case ErrorCode::NotSkewHadamard: return "NotSkewHadamard";
        case ErrorCode::NotSkewConference: return "NotSkewConference";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::FlatKernelMissing: return "FlatKernelMissing";
        case ErrorCode::InvalidB: return "InvalidB";
        case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorCode::InvalidSignature: return "InvalidSignature";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

SymfError::SymfError(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {
}

}  // namespace symf

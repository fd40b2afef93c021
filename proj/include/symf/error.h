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

#ifndef SYMF_ERROR_H
#define SYMF_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace symf {

enum class ErrorCode {
    NotSquare,
    NotSkewSymmetric,
    NonFinite,
    OddDimension,
    BadDimension,
    BadParameters,
    NotAFrame,
    ZeroRank,
    OddRankDetected,
    ZeroMatrix,
    InvalidOrder,
    NotEquiangular,
    RoundingFailure,
    IndexOutOfRange,
    EqualIndices,
    NonIntegerResult,
    EvenN,
    LengthMismatch,
    InvalidSeidel,
    NotNormalized,
    NotSquareEtf,
    NotCoreEtf,
    NotSkewHadamard,
    NotSkewConference,
    OrderTooSmall,
    FlatKernelMissing,
    InvalidB,
    UnsupportedOrder,
    InvalidSignature,
    NotPSD,
    RankMismatch,
    TooLarge,
    VerificationFailed,
    MalformedInput,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every symf operation. The code identifies the
/// failed precondition; the message carries the numeric detail.
class SymfError : public std::runtime_error {
   public:
    SymfError(ErrorCode code, const std::string &detail);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace symf

#endif

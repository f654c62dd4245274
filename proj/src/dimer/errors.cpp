// Copyright 2026 The Dimer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimer/errors.hpp"

namespace dimer {

const char* ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInvalidMap: return "InvalidMap";
    case ErrorCode::kDegenerateBasis: return "DegenerateBasis";
    case ErrorCode::kDegeneratePairing: return "DegeneratePairing";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kSingularGram: return "SingularGram";
    case ErrorCode::kOddVertexCount: return "OddVertexCount";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kUnequalColorClasses: return "UnequalColorClasses";
    case ErrorCode::kNotGenusOne: return "NotGenusOne";
    case ErrorCode::kInvalidWindings: return "InvalidWindings";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kDegeneratePolynomial: return "DegeneratePolynomial";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kOddM: return "OddM";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace dimer

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

#ifndef DIMER_ERRORS_HPP_
#define DIMER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dimer {

// Domain errors raised by the core. The numeric values are part of the C API.
enum class ErrorCode {
  kOk = 0,
  kParse = 1,
  kInvalidArgument = 2,
  kCapExceeded = 3,
  kDisconnected = 4,
  kInvalidMap = 5,
  kDegenerateBasis = 6,
  kDegeneratePairing = 7,
  kOddDegree = 8,
  kSingularGram = 9,
  kOddVertexCount = 10,
  kNotBipartite = 11,
  kUnequalColorClasses = 12,
  kNotGenusOne = 13,
  kInvalidWindings = 14,
  kZeroPolynomial = 15,
  kDegeneratePolynomial = 16,
  kNoConvergence = 17,
  kOddM = 18,
  kInternal = 19,
};

const char* ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dimer

#endif  // DIMER_ERRORS_HPP_

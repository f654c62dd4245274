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

#ifndef DIMER_VERIFY_HPP_
#define DIMER_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dimer/surface_map.hpp"

namespace dimer {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr int kCriterionCount = 13;
inline constexpr double kCatalan = 0.915965594177219015054603514932384110774;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
  bool passed() const { return checks_passed && seconds < budget_seconds; }
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

// Criteria are numbered 1..kCriterionCount.
CriterionResult RunCriterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> RunAcceptance(std::uint64_t seed = kDefaultSeed,
                                           const CriterionCallback& on_result = {});

// The 25 seeded genus-0 maps with at most 14 vertices and weights in [1, 5].
std::vector<CombinatorialMap> RandomPlanarFixtures(std::uint64_t seed);

}  // namespace dimer

#endif  // DIMER_VERIFY_HPP_

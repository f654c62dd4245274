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

#ifndef DIMER_FREE_ENERGY_HPP_
#define DIMER_FREE_ENERGY_HPP_

#include <array>
#include <optional>
#include <vector>

#include "dimer/laurent.hpp"

namespace dimer {

// Average of log|P(u,v)| over u^n = (-1)^theta, v^n = (-1)^tau. Returns
// -infinity when a lattice point is a zero of P.
double RiemannSum(const LaurentPoly2& p, int theta, int tau, int n);

// Families are indexed theta + 2 tau.
struct FreeEnergyLevel {
  int n = 0;
  std::array<double, 4> sums{};
};

struct FreeEnergyResult {
  double value = 0.0;
  std::vector<FreeEnergyLevel> table;
  std::vector<int> selected;             // families whose median is `value`
  std::optional<int> diverging_family;   // a family left out, if any
};

inline constexpr double kDefaultFreeEnergyTol = 1e-6;
inline constexpr int kFreeEnergyStartN = 16;
inline constexpr int kFreeEnergyMaxN = 4096;

// Doubles n until at least three finite families agree pairwise within
// `tol` and their median moved by less than `tol` since the previous level.
// Throws NoConvergence beyond `max_n`.
FreeEnergyResult FreeEnergy(const LaurentPoly2& p, double tol = kDefaultFreeEnergyTol,
                            int start_n = kFreeEnergyStartN, int max_n = kFreeEnergyMaxN);

}  // namespace dimer

#endif  // DIMER_FREE_ENERGY_HPP_

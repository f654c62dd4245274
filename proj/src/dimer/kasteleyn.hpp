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

#ifndef DIMER_KASTELEYN_HPP_
#define DIMER_KASTELEYN_HPP_

#include <optional>
#include <vector>

#include "dimer/gf2.hpp"
#include "dimer/graph.hpp"
#include "dimer/surface_map.hpp"

namespace dimer {

// Number of darts of `c` running against K.
int CountAgainst(const Orientation& k, const OrientedCycle& c);

// Dual spanning tree peeling. Non-tree edges point to the higher vertex
// index; each face is then fixed leaf-first through its tree edge.
// Throws OddVertexCount.
Orientation ConstructKasteleyn(const CombinatorialMap& map);

struct KasteleynCheck {
  bool ok = true;
  std::vector<int> violating_faces;
};

KasteleynCheck CheckKasteleyn(const CombinatorialMap& map, const Orientation& k);

// One Kasteleyn orientation per equivalence class: K0 flipped along every
// subset of the cocycle basis, subsets in ascending bitmask order.
std::vector<Orientation> ClassRepresentatives(const CombinatorialMap& map, const Orientation& k0);
std::vector<Orientation> ClassRepresentatives(const Homology& homology, const Orientation& k0);

// Vertices of c whose D-dimer leaves c strictly to its left.
int CountLeftDimers(const CombinatorialMap& map, const DimerConfiguration& d,
                    const OrientedCycle& c);

// q(x) for x in basis coordinates: sum x_i q(e_i) + sum_{i<j} x_i x_j e_i.e_j.
struct QuadraticFormTable {
  std::vector<int> basis_values;
  Gf2Matrix gram;

  int dimension() const { return static_cast<int>(basis_values.size()); }
  int Evaluate(Gf2Vector x) const;
};

// q(e_i) = n^K(e_i) + ℓ_D0(e_i) + 1 over the homology basis.
QuadraticFormTable QuadraticForm(const CombinatorialMap& map, const Orientation& k,
                                 const DimerConfiguration& d0);
QuadraticFormTable QuadraticForm(const CombinatorialMap& map, const Homology& homology,
                                 const Orientation& k, const DimerConfiguration& d0);

// Symplectic reduction to hyperbolic pairs (a_i, b_i); Arf = sum q(a_i)q(b_i).
// Throws SingularGram.
int Arf(const QuadraticFormTable& q);

struct ClassTerm {
  Gf2Vector cocycle_subset = 0;
  Orientation orientation;
  int arf = 0;
  int matching_sign = 1;  // ε^K(D0)
  Rational pfaffian;      // Pf(A^K)

  // ε^K(D0) Pf(A^K), unchanged by vertex flips.
  Rational NormalizedPfaffian() const { return matching_sign * pfaffian; }
};

struct PfaffianFormula {
  int genus = 0;
  std::optional<DimerConfiguration> d0;
  std::vector<ClassTerm> terms;
  Rational z;
};

// Z = 2^-g sum over classes of (-1)^Arf ε^K(D0) Pf(A^K). Throws OddVertexCount.
PfaffianFormula EvaluatePfaffianFormula(const CombinatorialMap& map);
Rational PartitionFunction(const CombinatorialMap& map);

// Same formula with floating-point Pfaffians.
double PartitionFunctionFloat(const CombinatorialMap& map);

}  // namespace dimer

#endif  // DIMER_KASTELEYN_HPP_

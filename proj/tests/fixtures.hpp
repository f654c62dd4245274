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

// Small hand-built graphs and cycles shared by the tests.

#ifndef DIMER_TESTS_FIXTURES_HPP_
#define DIMER_TESTS_FIXTURES_HPP_

#include <vector>

#include "dimer/graph.hpp"
#include "dimer/surface_map.hpp"

namespace fixture {

using dimer::Rational;

// Four vertices; nu1, nu2 join 0 and 1, nu3 joins 2 and 1, nu5 joins 1 and 3,
// nu4 joins 2 and 3. Edges are stored in that order with ids 1, 2, 3, 5, 4
// and each is oriented u to v.
inline dimer::WeightedGraph FourVertex(const Rational& n1, const Rational& n2, const Rational& n3,
                                 const Rational& n4, const Rational& n5) {
  return dimer::WeightedGraph(4, {{1, 0, 1, n1}, {2, 0, 1, n2}, {3, 2, 1, n3}, {5, 1, 3, n5},
                                  {4, 2, 3, n4}});
}

inline dimer::WeightedGraph YGraph() {
  return dimer::WeightedGraph(4, {{0, 0, 1, 1}, {1, 0, 2, 1}, {2, 0, 3, 1}});
}

inline int GridVertex(int m, int i, int j) { return j * m + i; }
inline int GridHorizontal(int m, int i, int j) { return j * (m - 1) + i; }
inline int GridVertical(int m, int n, int i, int j) { return (m - 1) * n + j * m + i; }

// Counterclockwise boundary of the rectangle [i0, i1] x [j0, j1] on
// SquarePlanar(m, n).
inline dimer::OrientedCycle GridRectangle(const dimer::CombinatorialMap& map, int m, int n, int i0,
                                          int j0, int i1, int j1) {
  std::vector<int> darts;
  for (int i = i0; i < i1; ++i) darts.push_back(dimer::DartOf(GridHorizontal(m, i, j0), false));
  for (int j = j0; j < j1; ++j) darts.push_back(dimer::DartOf(GridVertical(m, n, i1, j), false));
  for (int i = i1 - 1; i >= i0; --i) darts.push_back(dimer::DartOf(GridHorizontal(m, i, j1), true));
  for (int j = j1 - 1; j >= j0; --j) darts.push_back(dimer::DartOf(GridVertical(m, n, i0, j), true));
  return dimer::MakeCycle(map, darts);
}

}  // namespace fixture

#endif  // DIMER_TESTS_FIXTURES_HPP_

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

#ifndef DIMER_LATTICES_HPP_
#define DIMER_LATTICES_HPP_

#include <cstdint>
#include <random>

#include "dimer/graph.hpp"
#include "dimer/surface_map.hpp"
#include "dimer/toric.hpp"

namespace dimer {

// m columns by n rows; vertex (i, j) has index j*m + i. Horizontal edges
// (weight x) come first, row by row, then vertical edges (weight y).
CombinatorialMap SquarePlanar(int m, int n, const Rational& x = 1, const Rational& y = 1);

// Same layout wrapped on the torus: every vertex has an east and a north
// edge, so 2mn edges. Requires m, n >= 2.
CombinatorialMap SquareTorus(int m, int n, const Rational& x = 1, const Rational& y = 1);

// Horizontal edges point east; vertical edges point north in even columns
// and south in odd ones. Kasteleyn on SquarePlanar, and on SquareTorus
// when m is even.
Orientation ColumnAlternatingOrientation(const CombinatorialMap& grid, int m, int n);

// Unit hexagonal fundamental domain: white 0, black 1, edges a, b, c with
// windings (0,0), (1,0), (0,1); every edge oriented white to black.
TorusDimerModel HexTorus(const Rational& a = 1, const Rational& b = 1, const Rational& c = 1);

// 2x2 fundamental domain of the bipartite square lattice (SquareTorus(2,2)
// checkerboard coloured, white at (0,0)).
TorusDimerModel BipartiteSquareTorus(const Rational& x = 1, const Rational& y = 1);

// K_{3,3} (whites 0-2, blacks 3-5) with a genus-1 rotation system.
CombinatorialMap K33Torus();

// 4x3 grid plus two edges joining corners of distinct faces: 12 vertices,
// 19 edges, genus 2.
CombinatorialMap Genus2Fixture();

// Inserts an edge from the corner just counterclockwise of `corner_a` to
// the corner just counterclockwise of `corner_b`. Corners of one face split
// it; corners of different faces merge them and add a handle.
CombinatorialMap InsertEdge(const CombinatorialMap& map, int corner_a, int corner_b,
                            const Rational& weight);

// Random tree with shuffled rotations, then `chords` face-splitting edges
// and `handles` face-merging edges; genus equals `handles`. Integer weights
// in [1, max_weight]. Requires chords >= handles.
CombinatorialMap RandomSurfaceMap(std::mt19937_64& rng, int vertices, int chords, int handles,
                                  int max_weight);

double ClosedFormZSquare(int m, int n, double x, double y);
double ClosedFormLogZSquare(int m, int n, double x, double y);

enum class ToricReading {
  kAsPrinted,  // x^2 sin^2(..) * y^2 sin^2(..) under the root
  kSum,        // x^2 sin^2(..) + y^2 sin^2(..) under the root
};

double ClosedFormToricP(int eps1, int eps2, int m, int n, double x, double y,
                        ToricReading reading = ToricReading::kAsPrinted);

// 1/2 (P00 + P10 + P01 - P11) for the given reading.
double ClosedFormToricZ(int m, int n, double x, double y, ToricReading reading);

}  // namespace dimer

#endif  // DIMER_LATTICES_HPP_

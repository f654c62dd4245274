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

#ifndef DIMER_SURFACE_MAP_HPP_
#define DIMER_SURFACE_MAP_HPP_

#include <span>
#include <vector>

#include "dimer/gf2.hpp"
#include "dimer/graph.hpp"

namespace dimer {

// Edge e owns darts 2e (u->v, written "e+") and 2e+1 (v->u, written "e-").
inline int DartOf(int edge, bool reversed) { return 2 * edge + (reversed ? 1 : 0); }
inline int EdgeOfDart(int dart) { return dart >> 1; }
inline int Twin(int dart) { return dart ^ 1; }

// A connected graph cellularly embedded in a closed orientable surface, given
// by the counterclockwise cyclic order of outgoing darts at every vertex.
//
// Faces are the orbits of d -> PrevCcw(Twin(d)): each orbit keeps its face on
// the left, so it is the counterclockwise boundary of that face.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  // rotation[v] lists the darts whose tail is v, counterclockwise.
  CombinatorialMap(WeightedGraph graph, std::vector<std::vector<int>> rotation);

  const WeightedGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  int dart_count() const { return 2 * graph_.edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int genus() const { return genus_; }

  int Tail(int dart) const {
    const Edge& e = graph_.edge(EdgeOfDart(dart));
    return (dart & 1) ? e.v : e.u;
  }
  int Head(int dart) const { return Tail(Twin(dart)); }
  // The outgoing dart of `edge` at endpoint `v`.
  int DartFrom(int edge, int v) const { return DartOf(edge, graph_.edge(edge).u != v); }

  int NextCcw(int dart) const;
  int PrevCcw(int dart) const;
  int FaceNext(int dart) const { return PrevCcw(Twin(dart)); }

  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int FaceOf(int dart) const { return face_of_[dart]; }

  // True iff `dart` lies strictly after `from` and strictly before `to` when
  // turning counterclockwise around their common tail.
  bool StrictlyCcwBetween(int dart, int from, int to) const;

 private:
  WeightedGraph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
  int genus_ = 0;
};

std::vector<std::vector<int>> Faces(const CombinatorialMap& map);
int Genus(const CombinatorialMap& map);

// Closed walk through pairwise distinct vertices, as consecutive darts.
struct OrientedCycle {
  std::vector<int> darts;
};

// Validates consecutiveness and simplicity; throws InvalidArgument.
OrientedCycle MakeCycle(const CombinatorialMap& map, std::vector<int> darts);
OrientedCycle Reversed(const OrientedCycle& c);
std::vector<int> CycleEdges(const OrientedCycle& c);

struct TreeCotree {
  std::vector<int> tree;      // spanning tree of the graph
  std::vector<int> cotree;    // spanning tree of the dual, disjoint from `tree`
  std::vector<int> leftover;  // remaining 2g edges
};

TreeCotree ComputeTreeCotree(const CombinatorialMap& map);

// Mod-2 intersection number of two simple cycles, computed by pushing c2 off
// every maximal segment it shares with c1 and checking whether it leaves on
// the side it came from.
int IntersectionNumber(const CombinatorialMap& map, const OrientedCycle& c1,
                       const OrientedCycle& c2);

// Homology data derived from one tree-cotree decomposition: fundamental
// cycles of the leftover edges through the tree, and the dual fundamental
// cycles (cocycles) of the same edges through the cotree.
class Homology {
 public:
  explicit Homology(const CombinatorialMap& map);

  int dimension() const { return static_cast<int>(basis_.size()); }
  const TreeCotree& tree_cotree() const { return split_; }
  const std::vector<OrientedCycle>& basis() const { return basis_; }
  const std::vector<std::vector<int>>& cocycles() const { return cocycles_; }
  const Gf2Matrix& gram() const { return gram_; }
  // pairing(j, i) = |cocycle_j ∩ basis cycle_i| mod 2.
  const Gf2Matrix& pairing() const { return pairing_; }

  // Coordinates of an even-degree edge set in the cycle basis.
  Gf2Vector ClassOf(std::span<const int> edge_set) const;

 private:
  TreeCotree split_;
  std::vector<OrientedCycle> basis_;
  std::vector<std::vector<int>> cocycles_;
  Gf2Matrix gram_;
  Gf2Matrix pairing_;
  Gf2Matrix pairing_inverse_;
  std::vector<Gf2Vector> edge_cocycle_mask_;
  std::vector<std::pair<int, int>> endpoints_;
  int vertex_count_ = 0;
};

std::vector<OrientedCycle> HomologyBasis(const CombinatorialMap& map);
std::vector<std::vector<int>> CocycleBasis(const CombinatorialMap& map);
Gf2Vector HomologyClass(const CombinatorialMap& map, std::span<const int> edge_set);

// Permutation form of a map over darts 0..2E-1 with the fixed involution
// d -> d^1. Vertices are the orbits of `next_ccw`; the dual map uses the face
// successor as its rotation, so its vertices are the primal faces. Dual maps
// may contain loops, which is why this is not a CombinatorialMap.
struct DartPermutationMap {
  std::vector<int> next_ccw;

  std::vector<std::vector<int>> VertexOrbits() const;
  std::vector<std::vector<int>> FaceOrbits() const;
  DartPermutationMap Dual() const;
  // Vertex-orbit index of every dart.
  std::vector<int> VertexOfDart() const;
};

DartPermutationMap AsPermutations(const CombinatorialMap& map);

}  // namespace dimer

#endif  // DIMER_SURFACE_MAP_HPP_

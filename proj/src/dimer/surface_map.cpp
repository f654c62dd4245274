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

#include "dimer/surface_map.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {
namespace {

std::vector<std::vector<int>> Orbits(const std::vector<int>& perm) {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(perm.size(), 0);
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int d = static_cast<int>(start); !seen[d]; d = perm[d]) {
      seen[d] = 1;
      orbit.push_back(d);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

CombinatorialMap::CombinatorialMap(WeightedGraph graph,
                                   std::vector<std::vector<int>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const int v_count = graph_.vertex_count();
  const int darts = dart_count();
  if (static_cast<int>(rotation_.size()) != v_count) {
    throw Error(ErrorCode::kInvalidMap, "rotation system must list every vertex");
  }
  position_.assign(darts, -1);
  for (int v = 0; v < v_count; ++v) {
    const auto& around = rotation_[v];
    for (size_t i = 0; i < around.size(); ++i) {
      int d = around[i];
      if (d < 0 || d >= darts) {
        throw Error(ErrorCode::kInvalidMap, "dart out of range at vertex " + std::to_string(v));
      }
      if (Tail(d) != v) {
        throw Error(ErrorCode::kInvalidMap, "dart listed at vertex " + std::to_string(v) +
                                                " does not start there");
      }
      if (position_[d] >= 0) {
        throw Error(ErrorCode::kInvalidMap, "dart listed twice at vertex " + std::to_string(v));
      }
      position_[d] = static_cast<int>(i);
    }
  }
  if (std::find(position_.begin(), position_.end(), -1) != position_.end()) {
    throw Error(ErrorCode::kInvalidMap, "some dart is missing from the rotation system");
  }
  if (v_count == 0) throw Error(ErrorCode::kInvalidMap, "empty map");
  if (!graph_.IsConnected()) throw Error(ErrorCode::kDisconnected, "map graph is disconnected");

  face_of_.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (face_of_[start] >= 0) continue;
    std::vector<int> orbit;
    for (int d = start; face_of_[d] < 0; d = FaceNext(d)) {
      face_of_[d] = static_cast<int>(faces_.size());
      orbit.push_back(d);
    }
    faces_.push_back(std::move(orbit));
  }
  // A lone vertex is the sphere with one face and no darts.
  const int f_count = darts == 0 ? 1 : face_count();
  const int twice_genus = 2 - v_count + graph_.edge_count() - f_count;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorCode::kInvalidMap, "Euler characteristic is not of a closed orientable surface");
  }
  genus_ = twice_genus / 2;
}

int CombinatorialMap::NextCcw(int dart) const {
  const auto& around = rotation_[Tail(dart)];
  return around[(position_[dart] + 1) % around.size()];
}

int CombinatorialMap::PrevCcw(int dart) const {
  const auto& around = rotation_[Tail(dart)];
  return around[(position_[dart] + around.size() - 1) % around.size()];
}

bool CombinatorialMap::StrictlyCcwBetween(int dart, int from, int to) const {
  const int k = static_cast<int>(rotation_[Tail(from)].size());
  auto offset = [&](int d) { return (position_[d] - position_[from] + k) % k; };
  const int od = offset(dart);
  return od > 0 && od < offset(to);
}

std::vector<std::vector<int>> Faces(const CombinatorialMap& map) { return map.faces(); }

int Genus(const CombinatorialMap& map) { return map.genus(); }

OrientedCycle MakeCycle(const CombinatorialMap& map, std::vector<int> darts) {
  if (darts.empty()) throw Error(ErrorCode::kInvalidArgument, "empty cycle");
  std::vector<char> visited(map.vertex_count(), 0);
  for (size_t i = 0; i < darts.size(); ++i) {
    int d = darts[i];
    if (d < 0 || d >= map.dart_count()) {
      throw Error(ErrorCode::kInvalidArgument, "cycle dart out of range");
    }
    int next = darts[(i + 1) % darts.size()];
    if (map.Head(d) != map.Tail(next)) {
      throw Error(ErrorCode::kInvalidArgument, "cycle darts are not consecutive");
    }
    if (visited[map.Tail(d)]++) {
      throw Error(ErrorCode::kInvalidArgument, "cycle repeats a vertex");
    }
  }
  if (darts.size() == 2 && EdgeOfDart(darts[0]) == EdgeOfDart(darts[1])) {
    throw Error(ErrorCode::kInvalidArgument, "cycle backtracks along one edge");
  }
  return OrientedCycle{std::move(darts)};
}

OrientedCycle Reversed(const OrientedCycle& c) {
  OrientedCycle r;
  r.darts.reserve(c.darts.size());
  for (auto it = c.darts.rbegin(); it != c.darts.rend(); ++it) r.darts.push_back(Twin(*it));
  return r;
}

std::vector<int> CycleEdges(const OrientedCycle& c) {
  std::vector<int> edges;
  edges.reserve(c.darts.size());
  for (int d : c.darts) edges.push_back(EdgeOfDart(d));
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

// Rooted BFS forest data for either the primal tree or the dual cotree.
struct RootedTree {
  std::vector<int> parent;       // parent node, -1 at the root
  std::vector<int> parent_edge;  // edge to the parent, -1 at the root
  std::vector<int> depth;

  // Edges on the tree path between a and b.
  std::vector<int> PathEdges(int a, int b) const {
    std::vector<int> from_a, from_b;
    while (depth[a] > depth[b]) { from_a.push_back(parent_edge[a]); a = parent[a]; }
    while (depth[b] > depth[a]) { from_b.push_back(parent_edge[b]); b = parent[b]; }
    while (a != b) {
      from_a.push_back(parent_edge[a]);
      a = parent[a];
      from_b.push_back(parent_edge[b]);
      b = parent[b];
    }
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
  }
};

struct Decomposition {
  TreeCotree split;
  RootedTree tree;
  RootedTree cotree;
};

Decomposition Decompose(const CombinatorialMap& map) {
  const WeightedGraph& g = map.graph();
  Decomposition out;
  std::vector<char> in_tree(g.edge_count(), 0);

  RootedTree& t = out.tree;
  t.parent.assign(g.vertex_count(), -1);
  t.parent_edge.assign(g.vertex_count(), -1);
  t.depth.assign(g.vertex_count(), -1);
  std::deque<int> queue = {0};
  t.depth[0] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.incident(v)) {
      int w = g.Other(e, v);
      if (t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      in_tree[e] = 1;
      out.split.tree.push_back(e);
      queue.push_back(w);
    }
  }

  const int f_count = map.face_count();
  std::vector<std::vector<int>> dual_incident(f_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    int f1 = map.FaceOf(DartOf(e, false));
    int f2 = map.FaceOf(DartOf(e, true));
    if (f1 == f2) continue;
    dual_incident[f1].push_back(e);
    dual_incident[f2].push_back(e);
  }
  std::vector<char> in_cotree(g.edge_count(), 0);
  RootedTree& c = out.cotree;
  c.parent.assign(f_count, -1);
  c.parent_edge.assign(f_count, -1);
  c.depth.assign(f_count, -1);
  if (f_count > 0) {
    c.depth[0] = 0;
    queue = {0};
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int e : dual_incident[f]) {
      int f1 = map.FaceOf(DartOf(e, false));
      int h = f1 == f ? map.FaceOf(DartOf(e, true)) : f1;
      if (c.depth[h] >= 0) continue;
      c.depth[h] = c.depth[f] + 1;
      c.parent[h] = f;
      c.parent_edge[h] = e;
      in_cotree[e] = 1;
      out.split.cotree.push_back(e);
      queue.push_back(h);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!in_tree[e] && !in_cotree[e]) out.split.leftover.push_back(e);
  }
  if (static_cast<int>(out.split.leftover.size()) != 2 * map.genus()) {
    throw Error(ErrorCode::kInternal, "tree-cotree leftover count differs from 2g");
  }
  std::sort(out.split.tree.begin(), out.split.tree.end());
  std::sort(out.split.cotree.begin(), out.split.cotree.end());
  return out;
}

// Is `dart` (outgoing at the cycle vertex with index i) on the left of c?
bool LeftOfCycleAt(const CombinatorialMap& map, const OrientedCycle& c, size_t i, int dart) {
  const size_t k = c.darts.size();
  int out = c.darts[i];
  int back = Twin(c.darts[(i + k - 1) % k]);
  return map.StrictlyCcwBetween(dart, out, back);
}

}  // namespace

TreeCotree ComputeTreeCotree(const CombinatorialMap& map) { return Decompose(map).split; }

int IntersectionNumber(const CombinatorialMap& map, const OrientedCycle& c1,
                       const OrientedCycle& c2) {
  std::vector<int> index_on_c1(map.vertex_count(), -1);
  for (size_t i = 0; i < c1.darts.size(); ++i) index_on_c1[map.Tail(c1.darts[i])] = static_cast<int>(i);
  std::vector<char> edge_on_c1(map.edge_count(), 0);
  for (int d : c1.darts) edge_on_c1[EdgeOfDart(d)] = 1;

  const int m = static_cast<int>(c2.darts.size());
  auto shared = [&](int i) { return edge_on_c1[EdgeOfDart(c2.darts[((i % m) + m) % m])] != 0; };
  int start = -1;
  for (int i = 0; i < m; ++i) {
    if (!shared(i - 1)) {
      start = i;
      break;
    }
  }
  // Every edge of c2 lies on c1, so the two simple cycles coincide.
  if (start < 0) return 0;

  int crossings = 0;
  for (int j = 0; j < m;) {
    const int p = start + j;
    const int v = map.Tail(c2.darts[p % m]);
    if (index_on_c1[v] < 0) {
      ++j;
      continue;
    }
    // c2 enters c1 at v along a non-shared edge and rides shared edges.
    const int enter = Twin(c2.darts[(p - 1 + m) % m]);
    int q = p;
    while (shared(q)) ++q;
    const int exit = c2.darts[q % m];
    const int w = map.Tail(exit);
    bool left_in = LeftOfCycleAt(map, c1, index_on_c1[v], enter);
    bool left_out = LeftOfCycleAt(map, c1, index_on_c1[w], exit);
    if (left_in != left_out) crossings ^= 1;
    j += q - p + 1;
  }
  return crossings;
}

Homology::Homology(const CombinatorialMap& map) {
  Decomposition dec = Decompose(map);
  split_ = dec.split;
  const WeightedGraph& g = map.graph();
  const int n = static_cast<int>(split_.leftover.size());
  for (int x : split_.leftover) {
    const Edge& e = g.edge(x);
    // Dart x+ from u to v, then the tree path from v back to u.
    std::vector<int> darts = {DartOf(x, false)};
    int at = e.v;
    for (int te : dec.tree.PathEdges(e.v, e.u)) {
      int d = map.DartFrom(te, at);
      darts.push_back(d);
      at = map.Head(d);
    }
    basis_.push_back(MakeCycle(map, std::move(darts)));

    std::vector<int> cocycle = dec.cotree.PathEdges(map.FaceOf(DartOf(x, false)),
                                                    map.FaceOf(DartOf(x, true)));
    cocycle.push_back(x);
    std::sort(cocycle.begin(), cocycle.end());
    cocycles_.push_back(std::move(cocycle));
  }

  edge_cocycle_mask_.assign(g.edge_count(), 0);
  for (int j = 0; j < n; ++j) {
    for (int e : cocycles_[j]) edge_cocycle_mask_[e] ^= Gf2Vector{1} << j;
  }
  vertex_count_ = g.vertex_count();
  endpoints_.reserve(g.edge_count());
  for (const Edge& e : g.edges()) endpoints_.emplace_back(e.u, e.v);

  pairing_ = Gf2Matrix(n);
  gram_ = Gf2Matrix(n);
  for (int i = 0; i < n; ++i) {
    Gf2Vector y = 0;
    for (int d : basis_[i].darts) y ^= edge_cocycle_mask_[EdgeOfDart(d)];
    for (int j = 0; j < n; ++j) pairing_.set(j, i, Bit(y, j));
    for (int j = 0; j < n; ++j) {
      gram_.set(i, j, i == j ? 0 : IntersectionNumber(map, basis_[i], basis_[j]));
    }
  }
  auto inverse = pairing_.Inverse();
  if (!inverse) throw Error(ErrorCode::kDegeneratePairing, "cocycle pairing is singular");
  pairing_inverse_ = *inverse;
  if (gram_.Rank() != n) {
    throw Error(ErrorCode::kDegenerateBasis, "intersection form of the cycle basis is singular");
  }
}

Gf2Vector Homology::ClassOf(std::span<const int> edge_set) const {
  std::vector<int> degree(vertex_count_, 0);
  Gf2Vector y = 0;
  for (int e : edge_set) {
    y ^= edge_cocycle_mask_[e];
    ++degree[endpoints_[e].first];
    ++degree[endpoints_[e].second];
  }
  for (int d : degree) {
    if (d % 2 != 0) throw Error(ErrorCode::kOddDegree, "edge set has a vertex of odd degree");
  }
  return pairing_inverse_.Apply(y);
}

std::vector<OrientedCycle> HomologyBasis(const CombinatorialMap& map) {
  return Homology(map).basis();
}

std::vector<std::vector<int>> CocycleBasis(const CombinatorialMap& map) {
  return Homology(map).cocycles();
}

Gf2Vector HomologyClass(const CombinatorialMap& map, std::span<const int> edge_set) {
  return Homology(map).ClassOf(edge_set);
}

std::vector<std::vector<int>> DartPermutationMap::VertexOrbits() const { return Orbits(next_ccw); }

std::vector<std::vector<int>> DartPermutationMap::FaceOrbits() const {
  return Dual().VertexOrbits();
}

DartPermutationMap DartPermutationMap::Dual() const {
  std::vector<int> prev(next_ccw.size());
  for (size_t d = 0; d < next_ccw.size(); ++d) prev[next_ccw[d]] = static_cast<int>(d);
  DartPermutationMap dual;
  dual.next_ccw.resize(next_ccw.size());
  for (size_t d = 0; d < next_ccw.size(); ++d) dual.next_ccw[d] = prev[Twin(static_cast<int>(d))];
  return dual;
}

std::vector<int> DartPermutationMap::VertexOfDart() const {
  std::vector<int> owner(next_ccw.size(), -1);
  auto orbits = VertexOrbits();
  for (size_t i = 0; i < orbits.size(); ++i) {
    for (int d : orbits[i]) owner[d] = static_cast<int>(i);
  }
  return owner;
}

DartPermutationMap AsPermutations(const CombinatorialMap& map) {
  DartPermutationMap p;
  p.next_ccw.resize(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) p.next_ccw[d] = map.NextCcw(d);
  return p;
}

}  // namespace dimer

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

#ifndef DIMER_GRAPH_HPP_
#define DIMER_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dimer/rational.hpp"

namespace dimer {

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  Rational weight = 1;
};

// Finite multigraph with strictly positive edge weights. Edges are kept in
// ascending id order; everything downstream addresses them by that index.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int index) const { return edges_[index]; }
  std::span<const Edge> edges() const { return edges_; }

  // Index of the edge carrying `id`; throws InvalidArgument if absent.
  int IndexOfId(int id) const;

  // Incident edge indices of `v`, ascending.
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  int Other(int edge_index, int v) const {
    const Edge& e = edges_[edge_index];
    return e.u == v ? e.v : e.u;
  }

  bool IsConnected() const;

  // Same graph with every weight replaced by 1.
  WeightedGraph WithUnitWeights() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// A perfect matching, stored as ascending edge indices.
struct DimerConfiguration {
  std::vector<int> edges;

  bool operator==(const DimerConfiguration&) const = default;
  auto operator<=>(const DimerConfiguration&) const = default;
};

bool IsPerfectMatching(const WeightedGraph& g, const DimerConfiguration& d);

// For each vertex, the index of the matching edge covering it.
std::vector<int> MatchedEdgeByVertex(const WeightedGraph& g,
                                     const DimerConfiguration& d);

Rational MatchingWeight(const WeightedGraph& g, const DimerConfiguration& d);

// Backtracking search: the lowest uncovered vertex is matched first, trying
// its edges in ascending id order.
std::optional<DimerConfiguration> FindPerfectMatching(const WeightedGraph& g);

inline constexpr int kDefaultEnumerationCap = 36;

// Visits every perfect matching once, in the same deterministic order as
// FindPerfectMatching explores them. Throws CapExceeded above `cap` vertices.
void ForEachMatching(const WeightedGraph& g,
                     const std::function<void(const DimerConfiguration&)>& visit,
                     int cap = kDefaultEnumerationCap);

std::vector<DimerConfiguration> EnumerateMatchings(
    const WeightedGraph& g, int cap = kDefaultEnumerationCap);

Rational BruteForceZ(const WeightedGraph& g, int cap = kDefaultEnumerationCap);

// Direction bit per edge index: 0 means u->v, 1 means v->u.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int edge_count) : bits_(edge_count, 0) {}
  explicit Orientation(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  int size() const { return static_cast<int>(bits_.size()); }
  bool reversed(int edge) const { return bits_[edge] != 0; }
  void set_reversed(int edge, bool value) { bits_[edge] = value ? 1 : 0; }
  void Flip(int edge) { bits_[edge] ^= 1; }

  int Tail(const WeightedGraph& g, int edge) const {
    return reversed(edge) ? g.edge(edge).v : g.edge(edge).u;
  }
  int Head(const WeightedGraph& g, int edge) const {
    return reversed(edge) ? g.edge(edge).u : g.edge(edge).v;
  }

  // Flips every edge incident to `v`.
  void FlipVertex(const WeightedGraph& g, int v);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  bool operator==(const Orientation&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace dimer

#endif  // DIMER_GRAPH_HPP_

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

#include "dimer/graph.hpp"

#include <algorithm>
#include <string>

#include "dimer/errors.hpp"

namespace dimer {

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  incident_.assign(vertex_count_, {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string where = "edge " + std::to_string(e.id);
    if (e.id < 0) throw Error(ErrorCode::kInvalidArgument, where + ": negative id");
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw Error(ErrorCode::kInvalidArgument, where + ": duplicate id");
    }
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
      throw Error(ErrorCode::kInvalidArgument, where + ": endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::kInvalidArgument, where + ": loop");
    if (sgn(e.weight) <= 0) {
      throw Error(ErrorCode::kInvalidArgument, where + ": weight must be positive");
    }
    incident_[e.u].push_back(static_cast<int>(i));
    incident_[e.v].push_back(static_cast<int>(i));
  }
}

int WeightedGraph::IndexOfId(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) {
    throw Error(ErrorCode::kInvalidArgument, "unknown edge id " + std::to_string(id));
  }
  return static_cast<int>(it - edges_.begin());
}

bool WeightedGraph::IsConnected() const {
  if (vertex_count_ <= 1) return true;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : incident_[v]) {
      int w = Other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

WeightedGraph WeightedGraph::WithUnitWeights() const {
  std::vector<Edge> copy = edges_;
  for (Edge& e : copy) e.weight = 1;
  return WeightedGraph(vertex_count_, std::move(copy));
}

bool IsPerfectMatching(const WeightedGraph& g, const DimerConfiguration& d) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (int e : d.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++cover[g.edge(e).u];
    ++cover[g.edge(e).v];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::vector<int> MatchedEdgeByVertex(const WeightedGraph& g,
                                     const DimerConfiguration& d) {
  std::vector<int> mate(g.vertex_count(), -1);
  for (int e : d.edges) {
    mate[g.edge(e).u] = e;
    mate[g.edge(e).v] = e;
  }
  return mate;
}

Rational MatchingWeight(const WeightedGraph& g, const DimerConfiguration& d) {
  Rational w = 1;
  for (int e : d.edges) w *= g.edge(e).weight;
  return w;
}

namespace {

// Shared backtracking core. `visit` returns false to stop the search.
class MatchingSearch {
 public:
  explicit MatchingSearch(const WeightedGraph& g)
      : g_(g), covered_(g.vertex_count(), 0) {}

  template <class Visit>
  bool Run(Visit&& visit) {
    return Extend(0, visit);
  }

 private:
  template <class Visit>
  bool Extend(int from, Visit& visit) {
    int v = from;
    while (v < g_.vertex_count() && covered_[v]) ++v;
    if (v == g_.vertex_count()) {
      DimerConfiguration d{chosen_};
      std::sort(d.edges.begin(), d.edges.end());
      return visit(d);
    }
    covered_[v] = 1;
    for (int e : g_.incident(v)) {
      int w = g_.Other(e, v);
      if (covered_[w]) continue;
      covered_[w] = 1;
      chosen_.push_back(e);
      bool keep_going = Extend(v + 1, visit);
      chosen_.pop_back();
      covered_[w] = 0;
      if (!keep_going) {
        covered_[v] = 0;
        return false;
      }
    }
    covered_[v] = 0;
    return true;
  }

  const WeightedGraph& g_;
  std::vector<char> covered_;
  std::vector<int> chosen_;
};

}  // namespace

std::optional<DimerConfiguration> FindPerfectMatching(const WeightedGraph& g) {
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  std::optional<DimerConfiguration> found;
  MatchingSearch(g).Run([&](const DimerConfiguration& d) {
    found = d;
    return false;
  });
  return found;
}

void ForEachMatching(const WeightedGraph& g,
                     const std::function<void(const DimerConfiguration&)>& visit,
                     int cap) {
  if (g.vertex_count() > cap) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(g.vertex_count()) + " vertices exceed the enumeration cap of " +
                    std::to_string(cap));
  }
  if (g.vertex_count() % 2 != 0) return;
  MatchingSearch(g).Run([&](const DimerConfiguration& d) {
    visit(d);
    return true;
  });
}

std::vector<DimerConfiguration> EnumerateMatchings(const WeightedGraph& g, int cap) {
  std::vector<DimerConfiguration> all;
  ForEachMatching(g, [&](const DimerConfiguration& d) { all.push_back(d); }, cap);
  return all;
}

Rational BruteForceZ(const WeightedGraph& g, int cap) {
  Rational z = 0;
  ForEachMatching(g, [&](const DimerConfiguration& d) { z += MatchingWeight(g, d); }, cap);
  return z;
}

void Orientation::FlipVertex(const WeightedGraph& g, int v) {
  for (int e : g.incident(v)) Flip(e);
}

}  // namespace dimer

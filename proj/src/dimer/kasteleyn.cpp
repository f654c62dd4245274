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

#include "dimer/kasteleyn.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "dimer/errors.hpp"
#include "dimer/parallel.hpp"
#include "dimer/pfaffian.hpp"

namespace dimer {
namespace {

bool DartAgainst(const Orientation& k, int dart) {
  return ((dart & 1) != 0) != k.reversed(EdgeOfDart(dart));
}

int FaceCountAgainst(const CombinatorialMap& map, const Orientation& k, int face) {
  int count = 0;
  for (int d : map.faces()[face]) count += DartAgainst(k, d) ? 1 : 0;
  return count;
}

}  // namespace

int CountAgainst(const Orientation& k, const OrientedCycle& c) {
  int count = 0;
  for (int d : c.darts) count += DartAgainst(k, d) ? 1 : 0;
  return count;
}

Orientation ConstructKasteleyn(const CombinatorialMap& map) {
  const WeightedGraph& g = map.graph();
  if (g.vertex_count() % 2 != 0) {
    throw Error(ErrorCode::kOddVertexCount,
                std::to_string(g.vertex_count()) + " vertices admit no Kasteleyn orientation");
  }
  Orientation k(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) k.set_reversed(e, g.edge(e).u > g.edge(e).v);

  // BFS spanning tree of the dual rooted at face 0.
  const int f_count = map.face_count();
  std::vector<int> parent_edge(f_count, -1);
  std::vector<char> reached(f_count, 0);
  std::vector<int> order;
  std::deque<int> queue;
  if (f_count > 0) {
    reached[0] = 1;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    order.push_back(f);
    for (int d : map.faces()[f]) {
      int h = map.FaceOf(Twin(d));
      if (reached[h]) continue;
      reached[h] = 1;
      parent_edge[h] = EdgeOfDart(d);
      queue.push_back(h);
    }
  }

  // Leaves first: every other edge of the face is final by then.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    int e = parent_edge[f];
    if (e < 0) continue;
    if (FaceCountAgainst(map, k, f) % 2 == 0) k.Flip(e);
  }
  if (f_count > 0 && FaceCountAgainst(map, k, order.front()) % 2 == 0) {
    throw Error(ErrorCode::kInternal, "root face even despite an even vertex count");
  }
  return k;
}

KasteleynCheck CheckKasteleyn(const CombinatorialMap& map, const Orientation& k) {
  KasteleynCheck check;
  for (int f = 0; f < map.face_count(); ++f) {
    if (FaceCountAgainst(map, k, f) % 2 == 0) {
      check.ok = false;
      check.violating_faces.push_back(f);
    }
  }
  return check;
}

std::vector<Orientation> ClassRepresentatives(const Homology& homology, const Orientation& k0) {
  const int n = homology.dimension();
  std::vector<Orientation> reps;
  reps.reserve(size_t{1} << n);
  for (Gf2Vector subset = 0; subset < (Gf2Vector{1} << n); ++subset) {
    Orientation k = k0;
    for (int j = 0; j < n; ++j) {
      if (!Bit(subset, j)) continue;
      for (int e : homology.cocycles()[j]) k.Flip(e);
    }
    reps.push_back(std::move(k));
  }
  return reps;
}

std::vector<Orientation> ClassRepresentatives(const CombinatorialMap& map, const Orientation& k0) {
  return ClassRepresentatives(Homology(map), k0);
}

int CountLeftDimers(const CombinatorialMap& map, const DimerConfiguration& d,
                    const OrientedCycle& c) {
  const std::vector<int> mate = MatchedEdgeByVertex(map.graph(), d);
  const size_t len = c.darts.size();
  int count = 0;
  for (size_t i = 0; i < len; ++i) {
    const int out = c.darts[i];
    const int in = c.darts[(i + len - 1) % len];
    const int v = map.Tail(out);
    const int dimer = mate[v];
    if (dimer < 0 || dimer == EdgeOfDart(out) || dimer == EdgeOfDart(in)) continue;
    if (map.StrictlyCcwBetween(map.DartFrom(dimer, v), out, Twin(in))) ++count;
  }
  return count;
}

int QuadraticFormTable::Evaluate(Gf2Vector x) const {
  int value = 0;
  const int n = dimension();
  for (int i = 0; i < n; ++i) {
    if (!Bit(x, i)) continue;
    value ^= basis_values[i] & 1;
    for (int j = i + 1; j < n; ++j) {
      if (Bit(x, j)) value ^= gram.at(i, j);
    }
  }
  return value;
}

QuadraticFormTable QuadraticForm(const CombinatorialMap& map, const Homology& homology,
                                 const Orientation& k, const DimerConfiguration& d0) {
  QuadraticFormTable q;
  q.gram = homology.gram();
  for (const OrientedCycle& c : homology.basis()) {
    q.basis_values.push_back((CountAgainst(k, c) + CountLeftDimers(map, d0, c) + 1) % 2);
  }
  return q;
}

QuadraticFormTable QuadraticForm(const CombinatorialMap& map, const Orientation& k,
                                 const DimerConfiguration& d0) {
  return QuadraticForm(map, Homology(map), k, d0);
}

int Arf(const QuadraticFormTable& q) {
  const int n = q.dimension();
  std::vector<Gf2Vector> pending;
  for (int i = 0; i < n; ++i) pending.push_back(Gf2Vector{1} << i);
  auto form = [&](Gf2Vector x, Gf2Vector y) { return q.gram.Form(x, y); };
  int arf = 0;
  while (!pending.empty()) {
    const Gf2Vector a = pending.front();
    pending.erase(pending.begin());
    auto partner = pending.end();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      if (form(a, *it)) {
        partner = it;
        break;
      }
    }
    if (partner == pending.end()) {
      throw Error(ErrorCode::kSingularGram, "intersection form is degenerate");
    }
    const Gf2Vector b = *partner;
    pending.erase(partner);
    for (Gf2Vector& c : pending) {
      const int with_b = form(c, b);
      const int with_a = form(c, a);
      if (with_b) c ^= a;
      if (with_a) c ^= b;
    }
    arf ^= q.Evaluate(a) & q.Evaluate(b);
  }
  return arf;
}

PfaffianFormula EvaluatePfaffianFormula(const CombinatorialMap& map) {
  const WeightedGraph& g = map.graph();
  if (g.vertex_count() % 2 != 0) {
    throw Error(ErrorCode::kOddVertexCount, std::to_string(g.vertex_count()) + " vertices");
  }
  PfaffianFormula formula;
  formula.genus = map.genus();
  formula.d0 = FindPerfectMatching(g);
  formula.z = 0;
  if (!formula.d0) return formula;

  const Homology homology(map);
  const Orientation k0 = ConstructKasteleyn(map);
  std::vector<Orientation> reps = ClassRepresentatives(homology, k0);
  formula.terms.resize(reps.size());
  ParallelFor(static_cast<int>(reps.size()), [&](int i) {
    ClassTerm& t = formula.terms[i];
    t.cocycle_subset = static_cast<Gf2Vector>(i);
    t.orientation = std::move(reps[i]);
    t.arf = Arf(QuadraticForm(map, homology, t.orientation, *formula.d0));
    t.matching_sign = MatchingSign(g, t.orientation, *formula.d0);
    t.pfaffian = Pfaffian(KasteleynMatrix(g, t.orientation));
  });
  Rational sum = 0;
  for (const ClassTerm& t : formula.terms) {
    Rational term = t.NormalizedPfaffian();
    sum += t.arf ? Rational(-term) : term;
  }
  formula.z = sum / Rational(mpz_class(1) << formula.genus);
  return formula;
}

Rational PartitionFunction(const CombinatorialMap& map) { return EvaluatePfaffianFormula(map).z; }

double PartitionFunctionFloat(const CombinatorialMap& map) {
  const WeightedGraph& g = map.graph();
  if (g.vertex_count() % 2 != 0) {
    throw Error(ErrorCode::kOddVertexCount, std::to_string(g.vertex_count()) + " vertices");
  }
  auto d0 = FindPerfectMatching(g);
  if (!d0) return 0.0;
  const Homology homology(map);
  std::vector<Orientation> reps = ClassRepresentatives(homology, ConstructKasteleyn(map));
  std::vector<double> terms(reps.size());
  ParallelFor(static_cast<int>(reps.size()), [&](int i) {
    int sign = MatchingSign(g, reps[i], *d0);
    if (Arf(QuadraticForm(map, homology, reps[i], *d0))) sign = -sign;
    terms[i] = sign * Pfaffian(ToDouble(KasteleynMatrix(g, reps[i])));
  });
  double sum = 0.0;
  for (double t : terms) sum += t;
  return std::ldexp(sum, -map.genus());
}

}  // namespace dimer

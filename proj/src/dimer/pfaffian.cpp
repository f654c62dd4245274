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

#include "dimer/pfaffian.hpp"

#include <string>

namespace dimer {

SkewMatrix<double> ToDouble(const SkewMatrix<Rational>& a) {
  SkewMatrix<double> out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) out.Set(i, j, a.at(i, j).get_d());
  }
  return out;
}

SkewMatrix<Rational> KasteleynMatrix(const WeightedGraph& g, const Orientation& k) {
  SkewMatrix<Rational> a(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    a.Add(k.Tail(g, e), k.Head(g, e), g.edge(e).weight);
  }
  return a;
}

int PermutationSign(const std::vector<int>& sequence) {
  std::vector<char> seen(sequence.size(), 0);
  int sign = 1;
  for (size_t start = 0; start < sequence.size(); ++start) {
    if (seen[start]) continue;
    size_t length = 0;
    for (size_t i = start; !seen[i]; i = static_cast<size_t>(sequence[i])) {
      seen[i] = 1;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

int MatchingSign(const WeightedGraph& g, const Orientation& k, const DimerConfiguration& d) {
  // Listing each dimer from its K-tail makes every ε_{ij}(e) factor +1.
  std::vector<int> sequence;
  sequence.reserve(2 * d.edges.size());
  for (int e : d.edges) {
    sequence.push_back(k.Tail(g, e));
    sequence.push_back(k.Head(g, e));
  }
  if (static_cast<int>(sequence.size()) != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "dimer configuration is not perfect");
  }
  return PermutationSign(sequence);
}

BipartiteReduction BipartiteReduce(const SkewMatrix<Rational>& a, const std::vector<Color>& colors) {
  const int n = a.size();
  if (static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "coloring size differs from matrix size");
  }
  BipartiteReduction r;
  for (int v = 0; v < n; ++v) (colors[v] == Color::kBlack ? r.blacks : r.whites).push_back(v);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (colors[i] == colors[j] && sgn(a.at(i, j)) != 0) {
        throw Error(ErrorCode::kNotBipartite, "entry between vertices " + std::to_string(i) +
                                                  " and " + std::to_string(j) + " of one color");
      }
    }
  }
  if (r.blacks.size() != r.whites.size()) {
    throw Error(ErrorCode::kUnequalColorClasses, std::to_string(r.blacks.size()) + " black vs " +
                                                     std::to_string(r.whites.size()) + " white");
  }
  const int k = static_cast<int>(r.blacks.size());
  r.m = SquareMatrix<Rational>(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) r.m(i, j) = a.at(r.blacks[i], r.whites[j]);
  }
  r.block_sign = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
  std::vector<int> order = r.blacks;
  order.insert(order.end(), r.whites.begin(), r.whites.end());
  // Pf(P A P^T) = det(P) Pf(A) for the reordering P.
  r.pfaffian_sign = r.block_sign * PermutationSign(order);
  return r;
}

}  // namespace dimer

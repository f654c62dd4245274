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

#include "dimer/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

struct GridEdges {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;
};

// Vertex (i, j) is j * m + i. Horizontal edges h(i, j) = (i, j) - (i+1, j)
// come first, row by row, then vertical edges v(i, j) = (i, j) - (i, j+1).
GridEdges BuildGrid(int m, int n, bool wrap, const Rational& x, const Rational& y) {
  auto vertex = [m](int i, int j) { return j * m + i; };
  const int h_cols = wrap ? m : m - 1;
  const int v_rows = wrap ? n : n - 1;
  auto h_index = [&](int i, int j) { return j * h_cols + i; };
  auto v_index = [&](int i, int j) { return n * h_cols + j * m + i; };
  GridEdges grid;
  int id = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < h_cols; ++i) grid.edges.push_back({id++, vertex(i, j), vertex((i + 1) % m, j), x});
  }
  for (int j = 0; j < v_rows; ++j) {
    for (int i = 0; i < m; ++i) grid.edges.push_back({id++, vertex(i, j), vertex(i, (j + 1) % n), y});
  }
  grid.rotation.resize(m * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      auto& rot = grid.rotation[vertex(i, j)];
      if (wrap || i + 1 < m) rot.push_back(DartOf(h_index(i, j), false));
      if (wrap || j + 1 < n) rot.push_back(DartOf(v_index(i, j), false));
      if (wrap || i > 0) rot.push_back(DartOf(h_index((i + m - 1) % m, j), true));
      if (wrap || j > 0) rot.push_back(DartOf(v_index(i, (j + n - 1) % n), true));
    }
  }
  return grid;
}

// sin^2(num * pi / den), exactly zero at multiples of pi.
double SinSquaredPi(int num, int den) {
  if (num % den == 0) return 0.0;
  double s = std::sin(num * std::numbers::pi / den);
  return s * s;
}

double CosSquaredPi(int num, int den) {
  double c = std::cos(num * std::numbers::pi / den);
  return c * c;
}

void RequireEvenM(int m) {
  if (m % 2 != 0) throw Error(ErrorCode::kOddM, "m = " + std::to_string(m) + " must be even");
}

}  // namespace

CombinatorialMap SquarePlanar(int m, int n, const Rational& x, const Rational& y) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kInvalidArgument, "grid sides must be positive");
  GridEdges grid = BuildGrid(m, n, false, x, y);
  return CombinatorialMap(WeightedGraph(m * n, std::move(grid.edges)), std::move(grid.rotation));
}

CombinatorialMap SquareTorus(int m, int n, const Rational& x, const Rational& y) {
  if (m < 2 || n < 2) throw Error(ErrorCode::kInvalidArgument, "torus sides must be at least 2");
  GridEdges grid = BuildGrid(m, n, true, x, y);
  return CombinatorialMap(WeightedGraph(m * n, std::move(grid.edges)), std::move(grid.rotation));
}

Orientation ColumnAlternatingOrientation(const CombinatorialMap& grid, int m, int n) {
  const int horizontal = (m - 1) * n;
  if (grid.edge_count() != horizontal + m * (n - 1)) {
    throw Error(ErrorCode::kInvalidArgument, "map is not a planar m x n grid");
  }
  Orientation k(grid.edge_count());
  for (int e = horizontal; e < grid.edge_count(); ++e) {
    const int column = (e - horizontal) % m;
    k.set_reversed(e, column % 2 == 1);
  }
  return k;
}

TorusDimerModel HexTorus(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<Edge> edges = {{0, 0, 1, a}, {1, 0, 1, b}, {2, 0, 1, c}};
  std::vector<std::vector<int>> rotation = {{0, 2, 4}, {1, 3, 5}};
  CombinatorialMap map(WeightedGraph(2, std::move(edges)), std::move(rotation));
  return TorusDimerModel(std::move(map), {Color::kWhite, Color::kBlack},
                         {{0, 0}, {1, 0}, {0, 1}}, Orientation(3));
}

TorusDimerModel BipartiteSquareTorus(const Rational& x, const Rational& y) {
  CombinatorialMap map = SquareTorus(2, 2, x, y);
  std::vector<Color> colors = {Color::kWhite, Color::kBlack, Color::kBlack, Color::kWhite};
  std::vector<Winding> windings = {{0, 0}, {0, -1}, {0, 0}, {0, 1},
                                   {0, 0}, {0, 0},  {-1, 0}, {1, 0}};
  Orientation k(std::vector<std::uint8_t>{0, 1, 1, 0, 0, 0, 1, 1});
  return TorusDimerModel(std::move(map), std::move(colors), std::move(windings), std::move(k));
}

CombinatorialMap K33Torus() {
  std::vector<Edge> edges;
  for (int w = 0; w < 3; ++w) {
    for (int b = 3; b < 6; ++b) edges.push_back({3 * w + (b - 3), w, b, 1});
  }
  std::vector<std::vector<int>> rotation = {{0, 2, 4},   {6, 8, 10},  {12, 14, 16},
                                            {1, 7, 13},  {3, 9, 15},  {5, 11, 17}};
  return CombinatorialMap(WeightedGraph(6, std::move(edges)), std::move(rotation));
}

CombinatorialMap Genus2Fixture() {
  CombinatorialMap grid = SquarePlanar(4, 3);
  // Each inserted edge joins an inner square to the outer face.
  CombinatorialMap once = InsertEdge(grid, DartOf(0, false), DartOf(2, true), 2);
  return InsertEdge(once, DartOf(4, false), DartOf(8, false), 3);
}

CombinatorialMap InsertEdge(const CombinatorialMap& map, int corner_a, int corner_b,
                            const Rational& weight) {
  const WeightedGraph& g = map.graph();
  if (corner_a < 0 || corner_a >= map.dart_count() || corner_b < 0 ||
      corner_b >= map.dart_count()) {
    throw Error(ErrorCode::kInvalidArgument, "corner dart out of range");
  }
  const int u = map.Tail(corner_a);
  const int v = map.Tail(corner_b);
  int max_id = -1;
  for (const Edge& e : g.edges()) max_id = std::max(max_id, e.id);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({max_id + 1, u, v, weight});
  const int added = g.edge_count();
  auto rotation = map.rotation();
  auto insert_after = [&](int vertex, int corner, int dart) {
    auto& rot = rotation[vertex];
    auto it = std::find(rot.begin(), rot.end(), corner);
    rot.insert(it + 1, dart);
  };
  insert_after(u, corner_a, DartOf(added, false));
  insert_after(v, corner_b, DartOf(added, true));
  return CombinatorialMap(WeightedGraph(g.vertex_count(), std::move(edges)), std::move(rotation));
}

CombinatorialMap RandomSurfaceMap(std::mt19937_64& rng, int vertices, int chords, int handles,
                                  int max_weight) {
  if (vertices < 2 || max_weight < 1) {
    throw Error(ErrorCode::kInvalidArgument, "random maps need two vertices and positive weights");
  }
  if (handles < 0 || chords < handles) {
    throw Error(ErrorCode::kInvalidArgument, "each handle needs a chord to split a face first");
  }
  auto draw = [&rng](int k) { return static_cast<int>(rng() % static_cast<uint64_t>(k)); };
  std::vector<Edge> edges;
  for (int v = 1; v < vertices; ++v) edges.push_back({v - 1, draw(v), v, 1 + draw(max_weight)});
  std::vector<std::vector<int>> rotation(vertices);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    rotation[edges[e].u].push_back(DartOf(e, false));
    rotation[edges[e].v].push_back(DartOf(e, true));
  }
  for (auto& rot : rotation) {
    for (int i = static_cast<int>(rot.size()) - 1; i > 0; --i) std::swap(rot[i], rot[draw(i + 1)]);
  }
  CombinatorialMap map(WeightedGraph(vertices, std::move(edges)), std::move(rotation));

  auto add = [&](bool handle) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const int a = draw(map.dart_count());
      std::vector<int> options;
      for (int d = 0; d < map.dart_count(); ++d) {
        if (map.Tail(d) == map.Tail(a)) continue;
        if ((map.FaceOf(d) == map.FaceOf(a)) != handle) options.push_back(d);
      }
      if (options.empty()) continue;
      map = InsertEdge(map, a, options[draw(static_cast<int>(options.size()))],
                       1 + draw(max_weight));
      return;
    }
    throw Error(ErrorCode::kInternal, "no corner pair found for a new edge");
  };
  for (int i = 0; i < chords; ++i) add(false);
  for (int i = 0; i < handles; ++i) add(true);
  return map;
}

double ClosedFormZSquare(int m, int n, double x, double y) {
  return std::exp(ClosedFormLogZSquare(m, n, x, y));
}

double ClosedFormLogZSquare(int m, int n, double x, double y) {
  RequireEvenM(m);
  double sum = 0.0;
  for (int k = 1; k <= m / 2; ++k) {
    for (int l = 1; l <= n; ++l) {
      sum += std::log(2.0) +
             0.5 * std::log(x * x * CosSquaredPi(k, m + 1) + y * y * CosSquaredPi(l, n + 1));
    }
  }
  return sum;
}

double ClosedFormToricP(int eps1, int eps2, int m, int n, double x, double y,
                        ToricReading reading) {
  RequireEvenM(m);
  double product = 1.0;
  for (int k = 1; k <= m / 2; ++k) {
    for (int l = 1; l <= n; ++l) {
      const double a = x * x * SinSquaredPi(2 * l + eps2 - 1, n);
      const double b = y * y * SinSquaredPi(2 * k + eps1 - 1, m);
      product *= 2.0 * std::sqrt(reading == ToricReading::kAsPrinted ? a * b : a + b);
    }
  }
  return product;
}

double ClosedFormToricZ(int m, int n, double x, double y, ToricReading reading) {
  return 0.5 * (ClosedFormToricP(0, 0, m, n, x, y, reading) +
                ClosedFormToricP(1, 0, m, n, x, y, reading) +
                ClosedFormToricP(0, 1, m, n, x, y, reading) -
                ClosedFormToricP(1, 1, m, n, x, y, reading));
}

}  // namespace dimer

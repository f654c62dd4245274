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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "dimer/errors.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/lattices.hpp"
#include "dimer/pfaffian.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

// n^K(c) counted directly from dart directions.
int Against(const Orientation& k, const OrientedCycle& c) {
  int n = 0;
  for (int d : c.darts) n += k.reversed(EdgeOfDart(d)) != ((d & 1) != 0);
  return n;
}

std::vector<CombinatorialMap> SurfaceFixtures() {
  std::vector<CombinatorialMap> maps = {SquarePlanar(4, 3),         SquareTorus(4, 2),
                                        SquareTorus(4, 4),          HexTorus().map(),
                                        BipartiteSquareTorus().map(), K33Torus(),
                                        Genus2Fixture()};
  std::mt19937_64 rng(23);
  for (int g = 0; g <= 2; ++g) {
    for (int v : {6, 10, 14, 20, 24}) maps.push_back(RandomSurfaceMap(rng, v, v / 2, g, 3));
  }
  return maps;
}

QuadraticFormTable Table(std::vector<int> values, const Gf2Matrix& gram) {
  QuadraticFormTable q;
  q.basis_values = std::move(values);
  q.gram = gram;
  return q;
}

Gf2Matrix StandardSymplectic(int g) {
  Gf2Matrix m(2 * g);
  for (int i = 0; i < g; ++i) {
    m.set(2 * i, 2 * i + 1, 1);
    m.set(2 * i + 1, 2 * i, 1);
  }
  return m;
}

}  // namespace

TEST_CASE("n_K") {
  WeightedGraph bigon(2, {{0, 0, 1, 1}, {1, 0, 1, 1}});
  CombinatorialMap sphere(bigon, {{0, 2}, {1, 3}});
  auto c = MakeCycle(sphere, {DartOf(0, false), DartOf(1, true)});
  CHECK(CountAgainst(Orientation(std::vector<std::uint8_t>{0, 1}), c) == 0);
  CHECK(CountAgainst(Orientation(std::vector<std::uint8_t>{1, 0}), c) == 2);
  // Both edges pointing 0 -> 1: the same way between the endpoints, odd.
  CHECK(CountAgainst(Orientation(std::vector<std::uint8_t>{0, 0}), c) == 1);
  CHECK(CountAgainst(Orientation(std::vector<std::uint8_t>{1, 1}), c) == 1);

  for (const auto& map : SurfaceFixtures()) {
    auto k = ConstructKasteleyn(map);
    for (const auto& face : map.faces()) {
      auto boundary = OrientedCycle{face};
      CHECK(CountAgainst(k, boundary) % 2 == 1);
      CHECK(CountAgainst(k, boundary) == Against(k, boundary));
    }
  }
}

TEST_CASE("construct_kasteleyn") {
  auto grid = SquarePlanar(4, 3);
  auto k = ConstructKasteleyn(grid);
  CHECK(CheckKasteleyn(grid, k).ok);
  CHECK(CheckKasteleyn(grid, ColumnAlternatingOrientation(grid, 4, 3)).ok);
  for (auto [m, n] : {std::pair{6, 5}, {3, 4}, {8, 8}}) {
    auto g = SquarePlanar(m, n);
    CHECK(CheckKasteleyn(g, ColumnAlternatingOrientation(g, m, n)).ok);
  }
  auto hex = HexTorus();
  CHECK(CheckKasteleyn(hex.map(), Orientation(3)).ok);

  for (const auto& map : SurfaceFixtures()) {
    auto check = CheckKasteleyn(map, ConstructKasteleyn(map));
    CHECK(check.ok);
    CHECK(check.violating_faces.empty());
  }

  std::mt19937_64 rng(29);
  auto odd = RandomSurfaceMap(rng, 7, 3, 1, 2);
  try {
    ConstructKasteleyn(odd);
    FAIL("expected OddVertexCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddVertexCount);
  }
}

TEST_CASE("is_kasteleyn") {
  auto grid = SquarePlanar(4, 3);
  auto k = ConstructKasteleyn(grid);
  for (int e = 0; e < grid.edge_count(); ++e) {
    Orientation bad = k;
    bad.Flip(e);
    auto check = CheckKasteleyn(grid, bad);
    CHECK_FALSE(check.ok);
    std::set<int> incident = {grid.FaceOf(DartOf(e, false)), grid.FaceOf(DartOf(e, true))};
    std::set<int> listed(check.violating_faces.begin(), check.violating_faces.end());
    CHECK(check.violating_faces.size() <= 2);
    CHECK(listed == incident);
  }
  auto upward = CheckKasteleyn(grid, Orientation(grid.edge_count()));
  CHECK_FALSE(upward.ok);
  CHECK_FALSE(upward.violating_faces.empty());
}

TEST_CASE("class_representatives") {
  auto grid = SquarePlanar(4, 3);
  CHECK(ClassRepresentatives(grid, ConstructKasteleyn(grid)).size() == 1);
  auto hex = HexTorus().map();
  CHECK(ClassRepresentatives(hex, ConstructKasteleyn(hex)).size() == 4);

  for (const auto& map : SurfaceFixtures()) {
    Homology h(map);
    auto reps = ClassRepresentatives(h, ConstructKasteleyn(map));
    CHECK(reps.size() == (size_t{1} << (2 * map.genus())));
    auto d0 = FindPerfectMatching(map.graph());
    std::set<std::vector<int>> tables;
    for (const auto& k : reps) {
      CHECK(CheckKasteleyn(map, k).ok);
      if (d0) tables.insert(QuadraticForm(map, h, k, *d0).basis_values);
    }
    if (d0) CHECK(tables.size() == reps.size());
  }

  // The four Pfaffians on the square torus are the four closed-form terms.
  for (auto [x, y] : {std::pair{1, 1}, {2, 3}}) {
    auto torus = SquareTorus(4, 4, x, y);
    std::vector<double> pf;
    for (const auto& k : ClassRepresentatives(torus, ConstructKasteleyn(torus))) {
      pf.push_back(std::abs(Pfaffian(KasteleynMatrix(torus.graph(), k)).get_d()));
    }
    std::vector<double> closed;
    for (int e1 : {0, 1}) {
      for (int e2 : {0, 1}) closed.push_back(ClosedFormToricP(e1, e2, 4, 4, x, y, ToricReading::kSum));
    }
    std::sort(pf.begin(), pf.end());
    std::sort(closed.begin(), closed.end());
    for (int i = 0; i < 4; ++i) CHECK(pf[i] == doctest::Approx(closed[i]).epsilon(1e-9));
  }
}

TEST_CASE("ell_D") {
  auto square = SquarePlanar(2, 2);
  auto c = fixture::GridRectangle(square, 2, 2, 0, 0, 1, 1);
  for (const auto& d : EnumerateMatchings(square.graph())) CHECK(CountLeftDimers(square, d, c) == 0);

  // 4 x 3 grid, boundary of [0,2] x [0,2]; (1,0) is matched inward and (2,0)
  // outward.
  auto grid = SquarePlanar(4, 3);
  auto cycle = fixture::GridRectangle(grid, 4, 3, 0, 0, 2, 2);
  DimerConfiguration d{{9, 6, 15, 10, 2, 16}};
  std::sort(d.edges.begin(), d.edges.end());
  REQUIRE(IsPerfectMatching(grid.graph(), d));
  CHECK(CountLeftDimers(grid, d, cycle) == 1);
  CHECK(CountLeftDimers(grid, d, Reversed(cycle)) == 1);

  // Each off-cycle dimer lies on exactly one side.
  auto edges = CycleEdges(cycle);
  for (const auto& m : EnumerateMatchings(grid.graph())) {
    auto by_vertex = MatchedEdgeByVertex(grid.graph(), m);
    int off = 0;
    for (int dart : cycle.darts) {
      off += std::find(edges.begin(), edges.end(), by_vertex[grid.Tail(dart)]) == edges.end();
    }
    CHECK(CountLeftDimers(grid, m, cycle) + CountLeftDimers(grid, m, Reversed(cycle)) == off);
  }
}

TEST_CASE("quadratic form on reversed cycles") {
  for (const auto& map : SurfaceFixtures()) {
    if (map.genus() == 0) continue;
    auto d0 = FindPerfectMatching(map.graph());
    if (!d0) continue;
    Homology h(map);
    auto k = ConstructKasteleyn(map);
    auto q = QuadraticForm(map, h, k, *d0);
    for (int i = 0; i < h.dimension(); ++i) {
      const auto& c = h.basis()[i];
      auto r = Reversed(c);
      const int forward = Against(k, c) + CountLeftDimers(map, *d0, c) + 1;
      const int backward = Against(k, r) + CountLeftDimers(map, *d0, r) + 1;
      CHECK(forward % 2 == backward % 2);
      CHECK(q.basis_values[i] == forward % 2);
    }
  }
}

TEST_CASE("quadratic_form") {
  auto grid = SquarePlanar(4, 3);
  auto d0 = FindPerfectMatching(grid.graph());
  CHECK(QuadraticForm(grid, ConstructKasteleyn(grid), *d0).dimension() == 0);

  for (const auto& map : SurfaceFixtures()) {
    auto d = FindPerfectMatching(map.graph());
    if (!d) continue;
    Homology h(map);
    auto k = ConstructKasteleyn(map);
    auto q = QuadraticForm(map, h, k, *d);
    CHECK(q.gram == h.gram());
    for (int v = 0; v < map.vertex_count(); v += 3) {
      Orientation flipped = k;
      flipped.FlipVertex(map.graph(), v);
      CHECK(QuadraticForm(map, h, flipped, *d).basis_values == q.basis_values);
    }
    // q(x + y) = q(x) + q(y) + x.y
    const Gf2Vector top = Gf2Vector{1} << q.dimension();
    for (Gf2Vector x = 0; x < top; ++x) {
      for (Gf2Vector y = 0; y < top; ++y) {
        CHECK(q.Evaluate(x ^ y) == (q.Evaluate(x) + q.Evaluate(y) + q.gram.Form(x, y)) % 2);
      }
    }
  }
}

TEST_CASE("arf") {
  CHECK(Arf(Table({0, 0}, StandardSymplectic(1))) == 0);
  CHECK(Arf(Table({1, 1}, StandardSymplectic(1))) == 1);
  CHECK(Arf(Table({1, 0}, StandardSymplectic(1))) == 0);
  CHECK_THROWS_AS(Arf(Table({0, 0}, Gf2Matrix(2))), Error);

  // (1/2^g) sum_q (-1)^{Arf(q) + q(a)} = 1 for every a.
  for (int g : {1, 2}) {
    const int dim = 2 * g;
    auto gram = StandardSymplectic(g);
    for (Gf2Vector a = 0; a < (Gf2Vector{1} << dim); ++a) {
      int sum = 0;
      for (Gf2Vector bits = 0; bits < (Gf2Vector{1} << dim); ++bits) {
        std::vector<int> values(dim);
        for (int i = 0; i < dim; ++i) values[i] = Bit(bits, i);
        auto q = Table(values, gram);
        sum += (Arf(q) + q.Evaluate(a)) % 2 ? -1 : 1;
      }
      CHECK(sum == (1 << g));
    }
  }

  // Random symplectic bases and random forms.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 * (1 + trial % 3);
    auto gram = StandardSymplectic(dim / 2);
    std::vector<int> values(dim);
    for (int& v : values) v = rng() & 1;
    auto q = Table(values, gram);
    const int arf = Arf(q);
    CHECK(arf == oracle::MajorityArf(q));

    Gf2Matrix b(dim);
    do {
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) b.set(i, j, rng() & 1);
      }
    } while (b.Rank() < dim);
    Gf2Matrix changed(dim);
    std::vector<int> changed_values(dim);
    for (int i = 0; i < dim; ++i) {
      changed_values[i] = q.Evaluate(b.row(i));
      for (int j = 0; j < dim; ++j) changed.set(i, j, gram.Form(b.row(i), b.row(j)));
    }
    auto q2 = Table(changed_values, changed);
    CHECK(Arf(q2) == arf);
    CHECK(oracle::MajorityArf(q2) == arf);
  }
}

TEST_CASE("opposite parity on planar cycles") {
  std::mt19937_64 rng(37);
  for (auto [m, n] : {std::pair{4, 3}, {6, 6}, {7, 4}}) {
    auto grid = SquarePlanar(m, n);
    std::vector<Orientation> orientations = {ConstructKasteleyn(grid)};
    if ((m * n) % 2 == 0) orientations.push_back(ColumnAlternatingOrientation(grid, m, n));
    for (const auto& k : orientations) {
      for (int trial = 0; trial < 30; ++trial) {
        int i0 = static_cast<int>(rng() % (m - 1)), j0 = static_cast<int>(rng() % (n - 1));
        int i1 = i0 + 1 + static_cast<int>(rng() % (m - 1 - i0));
        int j1 = j0 + 1 + static_cast<int>(rng() % (n - 1 - j0));
        auto c = fixture::GridRectangle(grid, m, n, i0, j0, i1, j1);
        const int enclosed = (i1 - i0 - 1) * (j1 - j0 - 1);
        CHECK((CountAgainst(k, c) + enclosed) % 2 == 1);
      }
    }
  }
}

TEST_CASE("homology-resolved pfaffian") {
  for (const auto& map : SurfaceFixtures()) {
    if (map.genus() == 0 || map.vertex_count() > 20) continue;
    auto d0 = FindPerfectMatching(map.graph());
    if (!d0) continue;
    Homology h(map);
    const auto& g = map.graph();
    const auto all = EnumerateMatchings(g);
    std::vector<Gf2Vector> classes;
    for (const auto& d : all) {
      std::set<int> sym(d0->edges.begin(), d0->edges.end());
      for (int e : d.edges) {
        if (!sym.erase(e)) sym.insert(e);
      }
      std::vector<int> edges(sym.begin(), sym.end());
      classes.push_back(h.ClassOf(edges));
    }
    for (const auto& k : ClassRepresentatives(h, ConstructKasteleyn(map))) {
      auto q = QuadraticForm(map, h, k, *d0);
      Rational expected = 0;
      for (size_t i = 0; i < all.size(); ++i) {
        expected += (q.Evaluate(classes[i]) ? -1 : 1) * MatchingWeight(g, all[i]);
      }
      CHECK(MatchingSign(g, k, *d0) * Pfaffian(KasteleynMatrix(g, k)) == expected);
    }
  }
}

TEST_CASE("vertex flips") {
  for (const auto& map : SurfaceFixtures()) {
    auto d0 = FindPerfectMatching(map.graph());
    if (!d0) continue;
    auto k = ConstructKasteleyn(map);
    const Rational base = MatchingSign(map.graph(), k, *d0) * Pfaffian(KasteleynMatrix(map.graph(), k));
    for (int v = 0; v < map.vertex_count(); ++v) {
      Orientation f = k;
      f.FlipVertex(map.graph(), v);
      CHECK(CheckKasteleyn(map, f).ok);
      CHECK(MatchingSign(map.graph(), f, *d0) * Pfaffian(KasteleynMatrix(map.graph(), f)) == base);
    }
  }
}

TEST_CASE("partition_function") {
  CHECK(PartitionFunction(SquarePlanar(4, 3)) == 11);
  CHECK(PartitionFunction(HexTorus(2, Rational(3, 5), 7).map()) == Rational(2) + Rational(3, 5) + 7);
  CHECK(PartitionFunction(SquarePlanar(8, 8)) == 12988816);
  CHECK(PartitionFunction(K33Torus()) == 6);
  CHECK(PartitionFunctionFloat(SquarePlanar(6, 6)) == doctest::Approx(6728));

  for (const auto& map : SurfaceFixtures()) {
    if (map.vertex_count() > 24) continue;
    CHECK(PartitionFunction(map) == BruteForceZ(map.graph()));
    auto formula = EvaluatePfaffianFormula(map);
    CHECK(formula.genus == map.genus());
    if (formula.d0) CHECK(formula.terms.size() == (size_t{1} << (2 * map.genus())));
  }

  // No perfect matching.
  WeightedGraph path(4, {{0, 0, 1, 1}, {1, 0, 2, 1}, {2, 0, 3, 1}});
  CombinatorialMap star(path, {{0, 2, 4}, {1}, {3}, {5}});
  CHECK(PartitionFunction(star) == 0);

  std::mt19937_64 rng(41);
  try {
    PartitionFunction(RandomSurfaceMap(rng, 9, 4, 1, 2));
    FAIL("expected OddVertexCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddVertexCount);
  }
}

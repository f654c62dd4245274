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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dimer/errors.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/lattices.hpp"
#include "dimer/laurent.hpp"
#include "dimer/toric.hpp"
#include "oracles.hpp"

using namespace dimer;
using cd = std::complex<double>;

namespace {

LaurentPoly2 M(const Rational& c, int m, int n) { return LaurentPoly2::Monomial(c, m, n); }

LaurentPoly2 HexPoly(const Rational& a, const Rational& b, const Rational& c) {
  return M(a, 0, 0) + M(b, 1, 0) + M(c, 0, 1);
}

LaurentPoly2 SquarePoly(const Rational& x, const Rational& y) {
  LaurentPoly2 zpart = M(2, 0, 0) + M(1, 1, 0) + M(1, -1, 0);
  LaurentPoly2 wpart = M(2, 0, 0) + M(1, 0, 1) + M(1, 0, -1);
  return zpart * (y * y) + wpart * (x * x);
}

std::vector<TorusDimerModel> TorusFixtures() {
  return {HexTorus(),
          HexTorus(2, 3, 5),
          BipartiteSquareTorus(),
          BipartiteSquareTorus(2, 3),
          Enlarge(HexTorus(), 2),
          Enlarge(HexTorus(1, 2, 3), 3),
          Enlarge(BipartiteSquareTorus(1, 2), 2)};
}

TorusDimerModel SingleEdge(const Rational& weight) {
  WeightedGraph g(2, {{0, 0, 1, weight}});
  return TorusDimerModel(CombinatorialMap(g, {{0}, {1}}), {Color::kWhite, Color::kBlack}, {{0, 0}});
}

double RelativeError(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  auto p = M(2, 1, 0) + M(-2, 1, 0);
  CHECK(p.IsZero());
  auto q = HexPoly(1, 1, 1) * HexPoly(1, -1, 1);
  CHECK(q.Coefficient(0, 0) == 1);
  CHECK(q.Coefficient(2, 0) == -1);
  CHECK(q.Coefficient(0, 2) == 1);
  CHECK(q.Coefficient(0, 1) == 2);
  CHECK(q.Evaluate(Rational(2), Rational(3)) == Rational(6 * 2));
  CHECK(std::abs(q.Evaluate(cd(2, 0), cd(3, 0)) - cd(12, 0)) < 1e-12);
  CHECK(M(3, -1, 2).Evaluate(Rational(2), Rational(1, 2)) == Rational(3, 8));
  CHECK_THROWS_AS(M(3, -1, 0).Evaluate(Rational(0), Rational(1)), Error);
  // 1 - z^2 + 2w + w^2
  CHECK(q.L1Norm() == doctest::Approx(5));
}

TEST_CASE("canonical form") {
  auto c = Canonicalize(M(-3, 2, -1) + M(5, 3, 4));
  CHECK(c.poly == M(1, 0, 0) * Rational(3) + M(-5, 1, 5));
  CHECK(c.sign == -1);
  CHECK(c.shift_m == -2);
  CHECK(c.shift_n == 1);
  CHECK(Canonicalize(HexPoly(1, 2, 3)).poly == HexPoly(1, 2, 3));
  CHECK(FormatTriples(HexPoly(1, 1, 1)) == "1 0 0\n1 1 0\n1 0 1\n");
}

TEST_CASE("characteristic_polynomial") {
  CHECK(CharacteristicPolynomial(HexTorus(2, 3, 5)) == HexPoly(2, 3, 5));
  CHECK(CharacteristicPolynomial(HexTorus()) == HexPoly(1, 1, 1));
  for (auto [x, y] : {std::pair{1, 1}, {2, 3}, {5, 1}}) {
    CHECK(CharacteristicPolynomial(BipartiteSquareTorus(x, y)) == Canonicalize(SquarePoly(x, y)).poly);
  }
  auto single = CharacteristicPolynomial(SingleEdge(5));
  CHECK(single == M(5, 0, 0));

  for (const auto& model : TorusFixtures()) {
    if (model.whites().size() > 8) continue;
    auto raw = CharacteristicPolynomial(model, true);
    CHECK(raw == oracle::LeibnizCharpoly(model));
    auto canon = Canonicalize(raw);
    CHECK(CharacteristicPolynomial(model) == canon.poly);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int i = 0; i < 5; ++i) {
      cd z = std::polar(1.0, angle(rng)), w = std::polar(1.0, angle(rng));
      CHECK(RelativeError(raw.Evaluate(z, w), TwistedDeterminant(model, z, w)) < 1e-10);
    }
  }
}

TEST_CASE("torus model validation") {
  auto hex = HexTorus();
  const auto& map = hex.map();
  CHECK(CodeOf([&] { TorusDimerModel(map, {Color::kWhite, Color::kWhite}, hex.windings()); }) ==
        ErrorCode::kNotBipartite);
  CHECK(CodeOf([&] { TorusDimerModel(map, {Color::kWhite, Color::kBlack}, {{0, 0}, {1, 0}}); }) ==
        ErrorCode::kInvalidWindings);
  CHECK(CodeOf([&] {
          TorusDimerModel(map, {Color::kWhite, Color::kBlack}, {{0, 0}, {1, 0}, {1, 0}});
        }) == ErrorCode::kInvalidWindings);
  auto bip = BipartiteSquareTorus();
  Orientation bad = bip.orientation();
  bad.Flip(0);
  CHECK(CodeOf([&] { TorusDimerModel(bip.map(), bip.colors(), bip.windings(), bad); }) ==
        ErrorCode::kInvalidArgument);

  auto square = SquareTorus(4, 2);
  std::vector<Color> colors(8);
  for (int v = 0; v < 8; ++v) colors[v] = ((v % 4) + (v / 4)) % 2 ? Color::kBlack : Color::kWhite;
  std::vector<Winding> windings(square.edge_count());
  CHECK(CodeOf([&] { TorusDimerModel(square, colors, windings); }) == ErrorCode::kInvalidWindings);
  std::vector<Color> lopsided(8, Color::kWhite);
  lopsided[1] = Color::kBlack;
  CHECK(CodeOf([&] { TorusDimerModel(square, lopsided, windings); }) != ErrorCode::kOk);

  // A handle joining a white and a black corner in different faces.
  int a = -1, b = -1;
  for (int d = 0; d < square.dart_count() && a < 0; ++d) {
    for (int e = 0; e < square.dart_count(); ++e) {
      if (square.FaceOf(d) != square.FaceOf(e) && colors[square.Tail(d)] != colors[square.Tail(e)]) {
        a = d;
        b = e;
        break;
      }
    }
  }
  auto genus2 = InsertEdge(square, a, b, 1);
  REQUIRE(genus2.genus() == 2);
  std::vector<Winding> w2(genus2.edge_count());
  CHECK(CodeOf([&] { TorusDimerModel(genus2, colors, w2); }) == ErrorCode::kNotGenusOne);

  for (const auto& model : TorusFixtures()) {
    for (const auto& face : model.map().faces()) {
      Winding total;
      for (int d : face) {
        total.hx += model.DartWinding(d).hx;
        total.hy += model.DartWinding(d).hy;
      }
      CHECK(total == Winding{0, 0});
    }
  }
}

TEST_CASE("newton_polygon") {
  auto hex = ComputeNewtonPolygon(HexPoly(1, 1, 1));
  CHECK(hex.vertices == std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(hex.area == Rational(1, 2));
  CHECK(hex.interior_points == 0);
  CHECK(hex.boundary_points == 3);
  CHECK(hex.nondegenerate);

  auto square = ComputeNewtonPolygon(SquarePoly(1, 1));
  CHECK(square.vertices.size() == 4);
  CHECK(square.area == 2);
  CHECK(square.interior_points == 1);
  CHECK(square.nondegenerate);

  auto constant = ComputeNewtonPolygon(M(7, 0, 0));
  CHECK(constant.area == 0);
  CHECK_FALSE(constant.nondegenerate);
  auto segment = ComputeNewtonPolygon(M(1, 0, 0) + M(1, 3, 0));
  CHECK_FALSE(segment.nondegenerate);
  CHECK(segment.boundary_points == 4);

  CHECK(CodeOf([] { ComputeNewtonPolygon(LaurentPoly2()); }) == ErrorCode::kZeroPolynomial);

  // Pick's theorem against a direct lattice-point count.
  auto big = ComputeNewtonPolygon(CharacteristicPolynomial(Enlarge(HexTorus(), 3)));
  CHECK(big.area == Rational(9, 2));
  CHECK(big.interior_points == 1);
}

TEST_CASE("z_from_charpoly") {
  auto hex = ZFromCharpoly(HexTorus(2, 3, 5));
  CHECK(hex.z == 10);
  CHECK(hex.signs == std::array<int, 4>{1, 1, 1, -1});
  CHECK_FALSE(hex.degenerate);

  auto square = ZFromCharpoly(BipartiteSquareTorus());
  CHECK(square.raw_values[3] == 0);
  CHECK(square.z == BruteForceZ(BipartiteSquareTorus().graph()));

  auto single = ZFromCharpoly(SingleEdge(Rational(7, 2)));
  CHECK(single.degenerate);
  CHECK(single.z == Rational(7, 2));

  for (const auto& model : TorusFixtures()) {
    const Rational z = ZFromCharpoly(model).z;
    CHECK(z == BruteForceZ(model.graph()));
    CHECK(z == PartitionFunction(model.map()));
  }
}

TEST_CASE("enlarge") {
  auto hex = HexTorus();
  CHECK(Enlarge(hex, 1).SameAs(hex));
  CHECK(Enlarge(BipartiteSquareTorus(2, 3), 1).SameAs(BipartiteSquareTorus(2, 3)));
  auto two = Enlarge(hex, 2);
  CHECK(two.graph().vertex_count() == 8);
  CHECK(two.graph().edge_count() == 12);
  CHECK(two.map().genus() == 1);
  CHECK(BruteForceZ(two.graph()) == ZFromCharpoly(two).z);
  auto three = Enlarge(BipartiteSquareTorus(), 3);
  CHECK(three.graph().vertex_count() == 36);
  CHECK(three.map().genus() == 1);
  CHECK(CodeOf([&] { Enlarge(hex, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("charpoly_enlarged") {
  auto p = CharacteristicPolynomial(HexTorus(), true);
  CHECK(std::abs(CharpolyEnlarged(p, 1, cd(0.3, 0.4), cd(-1, 2)) - p.Evaluate(cd(0.3, 0.4), cd(-1, 2))) < 1e-12);
  CHECK(std::abs(CharpolyEnlarged(p, 2, 1, 1) - cd(-3, 0)) < 1e-12);

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (const auto& model : {HexTorus(), HexTorus(1, 2, 3), BipartiteSquareTorus(), BipartiteSquareTorus(1, 2)}) {
    auto raw = CharacteristicPolynomial(model, true);
    for (int n : {2, 3}) {
      auto big = Enlarge(model, n);
      for (int i = 0; i < 6; ++i) {
        cd z = std::polar(1.0, angle(rng)), w = std::polar(1.0, angle(rng));
        CHECK(RelativeError(CharpolyEnlarged(raw, n, z, w), TwistedDeterminant(big, z, w)) < 1e-9);
      }
    }
    auto big = Enlarge(model, 2);
    if (big.whites().size() <= 8) {
      auto direct = oracle::LeibnizCharpoly(big);
      cd z = std::polar(1.0, 0.7), w = std::polar(1.0, 2.1);
      CHECK(RelativeError(CharpolyEnlarged(raw, 2, z, w), direct.Evaluate(z, w)) < 1e-9);
    }
  }
}

TEST_CASE("torus_zero_probe") {
  auto hex = TorusZeroProbe(HexPoly(1, 1, 1), 1, 1);
  REQUIRE(hex.locus_count() == 2);
  const cd omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  bool saw_plus = false, saw_minus = false;
  for (const auto& locus : hex.loci) {
    const auto& r = locus.representative;
    saw_plus |= std::abs(r.z - omega) < 1e-6 && std::abs(r.w - std::conj(omega)) < 1e-6;
    saw_minus |= std::abs(r.z - std::conj(omega)) < 1e-6 && std::abs(r.w - omega) < 1e-6;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);

  auto square = TorusZeroProbe(CharacteristicPolynomial(BipartiteSquareTorus(), true), 1, 1);
  REQUIRE(square.locus_count() == 1);
  CHECK(std::abs(square.loci[0].representative.z - cd(-1, 0)) < 1e-6);
  CHECK(std::abs(square.loci[0].representative.w - cd(-1, 0)) < 1e-6);

  CHECK(CodeOf([] { TorusZeroProbe(M(1, 1, 0), 1, 1); }) == ErrorCode::kDegeneratePolynomial);

  // |1 + z| >= 0.9 rules out |w| = 0.1; at radius 10 the zeros sit where
  // cos(phi) = -1/20.
  CHECK(TorusZeroProbe(HexPoly(1, 1, 1), 0.1, 0.1).locus_count() == 0);
  auto far = TorusZeroProbe(HexPoly(1, 1, 1), 10, 10);
  REQUIRE(far.locus_count() == 2);
  for (const auto& locus : far.loci) {
    CHECK(std::cos(locus.representative.phi) == doctest::Approx(-0.05).epsilon(1e-6));
  }

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  for (const auto& p : {HexPoly(1, 1, 1), CharacteristicPolynomial(BipartiteSquareTorus(), true),
                        CharacteristicPolynomial(Enlarge(HexTorus(), 2), true)}) {
    for (int i = 0; i < 8; ++i) {
      auto result = TorusZeroProbe(p, radius(rng), radius(rng));
      CHECK(result.locus_count() <= 2);
      for (const auto& locus : result.loci) {
        for (const auto& point : locus.points) CHECK(std::abs(p.Evaluate(point.z, point.w)) < 1e-6 * p.L1Norm());
      }
    }
  }
}

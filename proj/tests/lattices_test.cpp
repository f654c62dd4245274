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
#include <numbers>

#include "doctest.h"
#include "dimer/errors.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/lattices.hpp"
#include "dimer/toric.hpp"

using namespace dimer;

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST_CASE("square_planar") {
  auto grid = SquarePlanar(4, 3);
  CHECK(grid.vertex_count() == 12);
  CHECK(grid.edge_count() == 17);
  CHECK(grid.genus() == 0);
  auto edge = SquarePlanar(1, 2);
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.edge_count() == 1);
  auto two = SquarePlanar(2, 2);
  CHECK(two.edge_count() == 4);
  CHECK(two.face_count() == 2);

  auto weighted = SquarePlanar(3, 2, 5, 7);
  CHECK(weighted.graph().edge(0).weight == 5);
  CHECK(weighted.graph().edge(weighted.edge_count() - 1).weight == 7);
  CHECK(CodeOf([] { SquarePlanar(0, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("square_torus") {
  auto t = SquareTorus(2, 2);
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 8);
  CHECK(t.genus() == 1);
  CHECK(SquareTorus(4, 4).genus() == 1);
  auto odd = SquareTorus(3, 3);
  CHECK(odd.genus() == 1);
  CHECK(odd.edge_count() == 18);
  CHECK(CodeOf([] { SquareTorus(1, 4); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("fundamental domains") {
  auto hex = HexTorus(2, 3, 5);
  CHECK(hex.graph().vertex_count() == 2);
  CHECK(hex.graph().edge_count() == 3);
  CHECK(hex.map().genus() == 1);
  auto sq = BipartiteSquareTorus(2, 3);
  CHECK(sq.graph().vertex_count() == 4);
  CHECK(sq.map().genus() == 1);
  CHECK(CheckKasteleyn(sq.map(), sq.orientation()).ok);
  CHECK(CheckKasteleyn(hex.map(), hex.orientation()).ok);
}

TEST_CASE("k33_torus") {
  auto k = K33Torus();
  CHECK(k.genus() == 1);
  CHECK(BruteForceZ(k.graph()) == 6);
  CHECK(PartitionFunction(k) == 6);
}

TEST_CASE("genus-two fixture") {
  auto g = Genus2Fixture();
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 19);
  CHECK(g.genus() == 2);
  CHECK(PartitionFunction(g) == BruteForceZ(g.graph()));
}

TEST_CASE("random surface maps") {
  std::mt19937_64 rng(53);
  for (int g = 0; g <= 3; ++g) {
    for (int trial = 0; trial < 5; ++trial) {
      auto map = RandomSurfaceMap(rng, 8 + trial, g + trial, g, 5);
      CHECK(map.genus() == g);
      CHECK(map.edge_count() == 7 + trial + g + trial + g);
      for (const auto& e : map.graph().edges()) CHECK((e.weight >= 1 && e.weight <= 5));
    }
  }
  CHECK(CodeOf([&] { RandomSurfaceMap(rng, 8, 1, 2, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("closed_form_Z_square") {
  CHECK(ClosedFormZSquare(4, 3, 1, 1) == doctest::Approx(11).epsilon(1e-12));
  CHECK(std::abs(ClosedFormZSquare(4, 3, 1, 1) - 11) < 1e-9);
  CHECK(std::abs(ClosedFormZSquare(2, 2, 1, 1) - 2) < 1e-9);
  CHECK(std::abs(ClosedFormZSquare(6, 6, 1, 1) - 6728) < 1e-9 * 6728);
  CHECK(CodeOf([] { ClosedFormZSquare(3, 4, 1, 1); }) == ErrorCode::kOddM);
  CHECK(CodeOf([] { ClosedFormLogZSquare(5, 4, 1, 1); }) == ErrorCode::kOddM);

  for (int m = 2; m <= 8; m += 2) {
    for (int n = 1; n <= 8; ++n) {
      const double exact = PartitionFunction(SquarePlanar(m, n)).get_d();
      CHECK(std::abs(ClosedFormZSquare(m, n, 1, 1) - exact) <= 1e-6 * exact);
      CHECK(std::abs(ClosedFormLogZSquare(m, n, 1, 1) - std::log(exact)) < 1e-9);
    }
  }
  const double weighted = PartitionFunction(SquarePlanar(4, 3, 2, 3)).get_d();
  CHECK(std::abs(ClosedFormZSquare(4, 3, 2, 3) - weighted) <= 1e-9 * weighted);
}

TEST_CASE("square asymptotics") {
  const double target = kCatalan / std::numbers::pi;
  CHECK(std::abs(ClosedFormLogZSquare(32, 32, 1, 1) / (32.0 * 32) - target) < 2e-2);
  CHECK(std::abs(ClosedFormLogZSquare(64, 64, 1, 1) / (64.0 * 64) - target) < 1e-2);
}

TEST_CASE("closed_form_toric_P") {
  for (auto reading : {ToricReading::kAsPrinted, ToricReading::kSum}) {
    for (int m : {2, 4, 6}) {
      for (int n : {2, 3, 4}) CHECK(ClosedFormToricP(1, 1, m, n, 2, 3, reading) == 0);
    }
    CHECK(ClosedFormToricP(0, 0, 2, 2, 1, 1, reading) >= 0);
    CHECK(CodeOf([&] { ClosedFormToricP(0, 0, 3, 2, 1, 1, reading); }) == ErrorCode::kOddM);
  }
}

TEST_CASE("toric readings against brute force") {
  // The printed product form misses already on the 2 x 2 torus.
  const double bf22 = BruteForceZ(SquareTorus(2, 2, 2, 3).graph()).get_d();
  CHECK(bf22 == 52);
  CHECK(ClosedFormToricZ(2, 2, 2, 3, ToricReading::kAsPrinted) == doctest::Approx(72));
  CHECK(ClosedFormToricZ(2, 2, 2, 3, ToricReading::kSum) == doctest::Approx(52));

  // The sum form, with m counting the torus rows.
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {4, 2}, {4, 3}, {4, 4}, {6, 2}, {6, 3}}) {
    for (auto [x, y] : {std::pair{1, 1}, {2, 3}}) {
      const double bf = BruteForceZ(SquareTorus(n, m, x, y).graph()).get_d();
      CHECK(ClosedFormToricZ(m, n, x, y, ToricReading::kSum) == doctest::Approx(bf).epsilon(1e-9));
      if (m == n) {
        CHECK(ClosedFormToricZ(m, n, x, y, ToricReading::kSum) ==
              doctest::Approx(BruteForceZ(SquareTorus(m, n, x, y).graph()).get_d()).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("generators reproduce the characteristic polynomials") {
  auto hex = CharacteristicPolynomial(HexTorus(2, 3, 5));
  CHECK(FormatTriples(hex) == "2 0 0\n3 1 0\n5 0 1\n");
  auto sq = CharacteristicPolynomial(BipartiteSquareTorus(1, 1));
  CHECK(FormatTriples(sq) == "1 1 -1\n1 0 0\n4 1 0\n1 2 0\n1 1 1\n");
}

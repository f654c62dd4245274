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
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "dimer/errors.hpp"
#include "dimer/free_energy.hpp"
#include "dimer/lattices.hpp"
#include "dimer/toric.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;

LaurentPoly2 Hex() {
  return LaurentPoly2::Monomial(1, 0, 0) + LaurentPoly2::Monomial(1, 1, 0) + LaurentPoly2::Monomial(1, 0, 1);
}

double MedianOf(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

LaurentPoly2 Square(int x = 1, int y = 1) { return CharacteristicPolynomial(BipartiteSquareTorus(x, y)); }

}  // namespace

TEST_CASE("riemann_sum") {
  auto c = LaurentPoly2::Constant(Rational(7, 3));
  for (int f = 0; f < 4; ++f) {
    for (int n : {1, 5, 16}) CHECK(RiemannSum(c, f & 1, f >> 1, n) == doctest::Approx(std::log(7.0 / 3)).epsilon(1e-15));
  }

  const double hit = RiemannSum(Hex(), 0, 0, 3);
  CHECK(std::isinf(hit));
  CHECK(hit < 0);

  std::vector<double> sums;
  for (int n = 4; n <= 256; n *= 2) {
    sums.push_back(RiemannSum(Hex(), 1, 1, n));
    CHECK(std::isfinite(sums.back()));
  }
  for (size_t i = 2; i < sums.size(); ++i) {
    CHECK(std::abs(sums[i] - sums[i - 1]) <= std::abs(sums[i - 1] - sums[i - 2]));
  }
  CHECK(std::abs(sums.back() - sums[sums.size() - 2]) < 1e-4);
}

TEST_CASE("free_energy examples") {
  auto square = FreeEnergy(Square());
  CHECK(square.value == doctest::Approx(4 * kCatalan / std::numbers::pi).epsilon(1e-6));
  CHECK(std::abs(square.value - 4 * kCatalan / std::numbers::pi) < 1e-3);
  CHECK(square.selected.size() >= 3);

  auto c = FreeEnergy(LaurentPoly2::Constant(5));
  CHECK(c.value == std::log(5.0));
  CHECK(FreeEnergy(LaurentPoly2::Monomial(Rational(-3, 2), 2, 1)).value == std::log(1.5));

  auto hex = FreeEnergy(Hex());
  CHECK(std::isfinite(hex.value));
  CHECK(hex.value == doctest::Approx(0.3230659472).epsilon(1e-6));

  CHECK_THROWS_AS(FreeEnergy(LaurentPoly2()), Error);
}

TEST_CASE("finite tori approach the hexagonal free energy") {
  // Per-domain log counts of n x n tori, from brute force, tend to the
  // integral; here they come down to it from above.
  const double f = FreeEnergy(Hex()).value;
  std::vector<double> per_domain;
  for (int n : {2, 3, 4}) {
    auto big = Enlarge(HexTorus(), n);
    const double count = BruteForceZ(big.graph()).get_d();
    per_domain.push_back(std::log(count) / (n * n));
    CHECK(std::isfinite(per_domain.back()));
    CHECK(count == ZFromCharpoly(big).z.get_d());
  }
  for (size_t i = 1; i < per_domain.size(); ++i) {
    CHECK(std::abs(per_domain[i] - f) < std::abs(per_domain[i - 1] - f));
  }
}

TEST_CASE("free_energy convergence bookkeeping") {
  for (const auto& p : {Hex(), Square(), Square(2, 3), CharacteristicPolynomial(Enlarge(HexTorus(1, 2, 2), 2))}) {
    auto result = FreeEnergy(p);
    REQUIRE(result.table.size() >= 2);
    CHECK(result.table.front().n == kFreeEnergyStartN);
    for (size_t i = 1; i < result.table.size(); ++i) CHECK(result.table[i].n == 2 * result.table[i - 1].n);
    const auto& last = result.table.back();
    const auto& before = result.table[result.table.size() - 2];
    CHECK(result.selected.size() >= 3);
    std::vector<double> now, earlier;
    for (int a : result.selected) {
      for (int b : result.selected) CHECK(std::abs(last.sums[a] - last.sums[b]) < kDefaultFreeEnergyTol);
      now.push_back(last.sums[a]);
      earlier.push_back(before.sums[a]);
    }
    CHECK(result.value == MedianOf(now));
    CHECK(std::abs(MedianOf(now) - MedianOf(earlier)) < kDefaultFreeEnergyTol);
  }
  CHECK(FreeEnergy(Square()).diverging_family == 0);
}

TEST_CASE("free_energy monotone consistency") {
  for (const auto& p : {Hex(), Square(), Square(2, 3), Square(1, 2)}) {
    auto result = FreeEnergy(p);
    for (int family : result.selected) {
      double previous = std::numeric_limits<double>::infinity();
      for (const auto& level : result.table) {
        const double gap = std::abs(result.value - level.sums[family]);
        CHECK(gap <= previous);
        previous = gap;
      }
    }
  }
}

TEST_CASE("free_energy scaling covariance") {
  for (const auto& p : {Hex(), Square(), CharacteristicPolynomial(Enlarge(HexTorus(1, 2, 2), 2))}) {
    const double base = FreeEnergy(p).value;
    for (Rational c : {Rational(2), Rational(1, 3), Rational(17, 5)}) {
      CHECK(std::abs(FreeEnergy(p * c).value - base - std::log(c.get_d())) < 1e-9);
    }
  }
}

TEST_CASE("free_energy matches the square-lattice integral per site") {
  for (auto [x, y] : {std::pair{1, 1}, {2, 3}, {1, 2}}) {
    const double per_site = FreeEnergy(Square(x, y)).value / 4;
    CHECK(std::abs(per_site - oracle::KasteleynIntegral(x, y, 4000)) < 1e-6);
  }
  CHECK(FreeEnergy(Square()).value / 4 == doctest::Approx(kCatalan / std::numbers::pi).epsilon(1e-6));
}

TEST_CASE("free_energy ceiling") {
  try {
    FreeEnergy(Hex(), 1e-13, 16, 64);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoConvergence);
  }
}

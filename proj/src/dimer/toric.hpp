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

#ifndef DIMER_TORIC_HPP_
#define DIMER_TORIC_HPP_

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "dimer/graph.hpp"
#include "dimer/laurent.hpp"
#include "dimer/pfaffian.hpp"
#include "dimer/surface_map.hpp"

namespace dimer {

// Signed crossing numbers (gamma_x . e, gamma_y . e) of an edge oriented
// white to black.
struct Winding {
  int hx = 0;
  int hy = 0;
  bool operator==(const Winding&) const = default;
};

// Bipartite graph on the torus with transverse curves given by windings.
// A one-edge, two-vertex map has genus 0 and is accepted as a degenerate
// model.
class TorusDimerModel {
 public:
  TorusDimerModel() = default;
  // Builds a Kasteleyn orientation when `orientation` is absent.
  TorusDimerModel(CombinatorialMap map, std::vector<Color> colors, std::vector<Winding> windings,
                  std::optional<Orientation> orientation = std::nullopt);

  const CombinatorialMap& map() const { return map_; }
  const WeightedGraph& graph() const { return map_.graph(); }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<Winding>& windings() const { return windings_; }
  const Orientation& orientation() const { return orientation_; }

  bool IsWhite(int v) const { return colors_[v] == Color::kWhite; }
  int WhiteEnd(int edge) const;
  int BlackEnd(int edge) const;
  // Vertices of one color in index order.
  const std::vector<int>& whites() const { return whites_; }
  const std::vector<int>& blacks() const { return blacks_; }
  // Winding of a dart, negated when it runs black to white.
  Winding DartWinding(int dart) const;

  bool SameAs(const TorusDimerModel& other) const;

 private:
  CombinatorialMap map_;
  std::vector<Color> colors_;
  std::vector<Winding> windings_;
  Orientation orientation_;
  std::vector<int> whites_;
  std::vector<int> blacks_;
};

// det M(z,w) with rows the white vertices and columns the black vertices.
// Entry (w,b) sums +-nu(e) z^hx w^hy, with + when the orientation runs
// white to black. Canonicalized unless `raw` is set.
LaurentPoly2 CharacteristicPolynomial(const TorusDimerModel& model, bool raw = false);

// Numeric det M(z,w) by elimination; for enlarged models.
std::complex<double> TwistedDeterminant(const TorusDimerModel& model, std::complex<double> z,
                                        std::complex<double> w);

// Families are indexed theta + 2 tau, i.e. (00, 10, 01, 11).
struct CharpolyZ {
  Rational z;
  std::array<Rational, 4> raw_values;  // P_raw((-1)^theta, (-1)^tau)
  std::array<int, 4> signs{};          // Z = 1/2 sum signs * raw_values
  std::array<int, 4> canonical_signs{};  // same, against the canonical P
  std::array<int, 4> arf{};
  bool degenerate = false;  // genus 0: Z = signs[0] * raw_values[0]
};

CharpolyZ ZFromCharpoly(const TorusDimerModel& model);

TorusDimerModel Enlarge(const TorusDimerModel& model, int n);

// Product of P(u,v) over u^n = z, v^n = w.
std::complex<double> CharpolyEnlarged(const LaurentPoly2& p, int n, std::complex<double> z,
                                      std::complex<double> w);

struct ProbePoint {
  double phi = 0.0;
  std::complex<double> z;
  std::complex<double> w;
  double residual = 0.0;  // | |w| - r2 |
};

struct ZeroLocus {
  ProbePoint representative;
  std::vector<ProbePoint> points;
};

struct ProbeResult {
  std::vector<ZeroLocus> loci;
  std::vector<double> degenerate_slices;  // angles where P(z, .) vanishes
  int locus_count() const { return static_cast<int>(loci.size()); }
};

inline constexpr int kDefaultProbeGrid = 720;
inline constexpr double kDefaultProbeTol = 1e-6;

// Zeros of P on the torus |z| = r1, |w| = r2. Throws DegeneratePolynomial
// for a polynomial with zero Newton area.
ProbeResult TorusZeroProbe(const LaurentPoly2& p, double r1, double r2,
                           int grid = kDefaultProbeGrid, double tol = kDefaultProbeTol);

}  // namespace dimer

#endif  // DIMER_TORIC_HPP_

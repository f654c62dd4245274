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

#include "dimer/toric.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "dimer/errors.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/parallel.hpp"

namespace dimer {

namespace {

constexpr int kMaxCharpolyColorClass = 16;

int FloorDiv(int a, int n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }

int Mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

TorusDimerModel::TorusDimerModel(CombinatorialMap map, std::vector<Color> colors,
                                 std::vector<Winding> windings,
                                 std::optional<Orientation> orientation)
    : map_(std::move(map)), colors_(std::move(colors)), windings_(std::move(windings)) {
  const WeightedGraph& g = map_.graph();
  if (static_cast<int>(colors_.size()) != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "expected a color for each of " +
                                                 std::to_string(g.vertex_count()) + " vertices");
  }
  if (static_cast<int>(windings_.size()) != g.edge_count()) {
    throw Error(ErrorCode::kInvalidWindings, "expected a winding for each of " +
                                                 std::to_string(g.edge_count()) + " edges");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (colors_[g.edge(e).u] == colors_[g.edge(e).v]) {
      throw Error(ErrorCode::kNotBipartite,
                  "edge " + std::to_string(g.edge(e).id) + " joins two vertices of one color");
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) (IsWhite(v) ? whites_ : blacks_).push_back(v);
  if (whites_.size() != blacks_.size()) {
    throw Error(ErrorCode::kUnequalColorClasses, std::to_string(blacks_.size()) + " black vs " +
                                                     std::to_string(whites_.size()) + " white");
  }
  if (map_.genus() > 1) {
    throw Error(ErrorCode::kNotGenusOne, "map has genus " + std::to_string(map_.genus()));
  }
  for (int f = 0; f < map_.face_count(); ++f) {
    Winding total;
    for (int d : map_.faces()[f]) {
      Winding h = DartWinding(d);
      total.hx += h.hx;
      total.hy += h.hy;
    }
    if (total.hx != 0 || total.hy != 0) {
      throw Error(ErrorCode::kInvalidWindings,
                  "face " + std::to_string(f) + " has total winding (" + std::to_string(total.hx) +
                      "," + std::to_string(total.hy) + ")");
    }
  }
  if (map_.genus() == 1) {
    const Homology homology(map_);
    std::array<Winding, 2> w{};
    for (int i = 0; i < 2; ++i) {
      for (int d : homology.basis()[i].darts) {
        w[i].hx += DartWinding(d).hx;
        w[i].hy += DartWinding(d).hy;
      }
    }
    long long det = static_cast<long long>(w[0].hx) * w[1].hy -
                    static_cast<long long>(w[0].hy) * w[1].hx;
    if (det != 1 && det != -1) {
      throw Error(ErrorCode::kInvalidWindings,
                  "windings do not pair with the homology basis unimodularly (det " +
                      std::to_string(det) + ")");
    }
  }
  if (orientation) {
    if (orientation->size() != g.edge_count()) {
      throw Error(ErrorCode::kInvalidArgument, "orientation size differs from edge count");
    }
    if (!CheckKasteleyn(map_, *orientation).ok) {
      throw Error(ErrorCode::kInvalidArgument, "supplied orientation is not Kasteleyn");
    }
    orientation_ = std::move(*orientation);
  } else {
    orientation_ = ConstructKasteleyn(map_);
  }
}

int TorusDimerModel::WhiteEnd(int edge) const {
  const Edge& e = graph().edge(edge);
  return IsWhite(e.u) ? e.u : e.v;
}

int TorusDimerModel::BlackEnd(int edge) const {
  const Edge& e = graph().edge(edge);
  return IsWhite(e.u) ? e.v : e.u;
}

Winding TorusDimerModel::DartWinding(int dart) const {
  Winding h = windings_[EdgeOfDart(dart)];
  if (!IsWhite(map_.Tail(dart))) {
    h.hx = -h.hx;
    h.hy = -h.hy;
  }
  return h;
}

bool TorusDimerModel::SameAs(const TorusDimerModel& other) const {
  const WeightedGraph& a = graph();
  const WeightedGraph& b = other.graph();
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int e = 0; e < a.edge_count(); ++e) {
    const Edge& x = a.edge(e);
    const Edge& y = b.edge(e);
    if (x.id != y.id || x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
  }
  return map_.rotation() == other.map_.rotation() && colors_ == other.colors_ &&
         windings_ == other.windings_ && orientation_ == other.orientation_;
}

namespace {

// Rows whites, columns blacks, in index order.
std::vector<std::vector<LaurentPoly2>> TwistedMatrix(const TorusDimerModel& model) {
  const WeightedGraph& g = model.graph();
  const int k = static_cast<int>(model.whites().size());
  std::vector<int> row(g.vertex_count()), col(g.vertex_count());
  for (int i = 0; i < k; ++i) {
    row[model.whites()[i]] = i;
    col[model.blacks()[i]] = i;
  }
  std::vector<std::vector<LaurentPoly2>> m(k, std::vector<LaurentPoly2>(k));
  for (int e = 0; e < g.edge_count(); ++e) {
    int w = model.WhiteEnd(e);
    int b = model.BlackEnd(e);
    Rational coeff = g.edge(e).weight;
    if (model.orientation().Tail(g, e) != w) coeff = -coeff;
    m[row[w]][col[b]].AddTerm(model.windings()[e].hx, model.windings()[e].hy, coeff);
  }
  return m;
}

}  // namespace

LaurentPoly2 CharacteristicPolynomial(const TorusDimerModel& model, bool raw) {
  const int k = static_cast<int>(model.whites().size());
  if (k > kMaxCharpolyColorClass) {
    throw Error(ErrorCode::kCapExceeded, std::to_string(k) + " white vertices exceeds cap " +
                                             std::to_string(kMaxCharpolyColorClass));
  }
  const auto m = TwistedMatrix(model);
  // minors[mask]: signed sum over assignments of the first popcount(mask)
  // rows onto the columns in mask.
  std::vector<LaurentPoly2> minors(size_t{1} << k);
  minors[0] = LaurentPoly2::Constant(1);
  for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
    if (minors[mask].IsZero()) continue;
    const int row = std::popcount(mask);
    if (row == k) continue;
    for (int c = 0; c < k; ++c) {
      if (mask & (uint32_t{1} << c) || m[row][c].IsZero()) continue;
      const int above = std::popcount(mask >> (c + 1));
      LaurentPoly2 term = minors[mask] * m[row][c];
      if (above % 2) term *= Rational(-1);
      minors[mask | (uint32_t{1} << c)] += term;
    }
  }
  LaurentPoly2 p = minors[(size_t{1} << k) - 1];
  return raw ? p : Canonicalize(p).poly;
}

std::complex<double> TwistedDeterminant(const TorusDimerModel& model, std::complex<double> z,
                                        std::complex<double> w) {
  const auto m = TwistedMatrix(model);
  const int k = static_cast<int>(m.size());
  SquareMatrix<std::complex<double>> a(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a(i, j) = m[i][j].Evaluate(z, w);
  }
  return Determinant(std::move(a));
}

CharpolyZ ZFromCharpoly(const TorusDimerModel& model) {
  const WeightedGraph& g = model.graph();
  if (g.vertex_count() % 2 != 0) {
    throw Error(ErrorCode::kOddVertexCount, std::to_string(g.vertex_count()) + " vertices");
  }
  CharpolyZ out;
  const LaurentPoly2 raw = CharacteristicPolynomial(model, true);
  const CanonicalForm canonical = Canonicalize(raw);
  for (int f = 0; f < 4; ++f) {
    out.raw_values[f] = raw.Evaluate(Rational(f & 1 ? -1 : 1), Rational(f & 2 ? -1 : 1));
  }
  out.degenerate = model.map().genus() == 0;
  const auto d0 = FindPerfectMatching(g);
  if (!d0) {
    out.z = 0;
    out.signs.fill(1);
    out.canonical_signs.fill(1);
    return out;
  }
  const BipartiteReduction reduction =
      BipartiteReduce(KasteleynMatrix(g, model.orientation()), model.colors());
  const int k = static_cast<int>(model.whites().size());
  // Pf(A^K) = pfaffian_sign * det(black x white) = pfaffian_sign * (-1)^k * det M.
  const int pf_over_det = reduction.pfaffian_sign * (k % 2 ? -1 : 1);
  const Homology homology(model.map());
  const int families = out.degenerate ? 1 : 4;
  for (int f = 0; f < families; ++f) {
    Orientation kf = model.orientation();
    for (int e = 0; e < g.edge_count(); ++e) {
      const Winding& h = model.windings()[e];
      if (((f & 1) * h.hx + ((f >> 1) & 1) * h.hy) % 2 != 0) kf.Flip(e);
    }
    out.arf[f] = Arf(QuadraticForm(model.map(), homology, kf, *d0));
    out.signs[f] = (out.arf[f] ? -1 : 1) * MatchingSign(g, kf, *d0) * pf_over_det;
    const int parity = ((f & 1) * canonical.shift_m + ((f >> 1) & 1) * canonical.shift_n) % 2;
    out.canonical_signs[f] = out.signs[f] * canonical.sign * (parity ? -1 : 1);
  }
  Rational sum = 0;
  for (int f = 0; f < families; ++f) sum += out.signs[f] * out.raw_values[f];
  out.z = out.degenerate ? sum : Rational(sum / 2);
  return out;
}

TorusDimerModel Enlarge(const TorusDimerModel& model, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "enlargement factor must be positive");
  const WeightedGraph& g = model.graph();
  const int v_count = g.vertex_count();
  const int e_count = g.edge_count();
  int max_id = -1;
  for (const Edge& e : g.edges()) max_id = std::max(max_id, e.id);
  const int cells = n * n;
  auto vertex = [&](int cell, int v) { return cell * v_count + v; };
  auto shifted = [&](int cell, const Winding& h, int direction) {
    int i = cell % n;
    int j = cell / n;
    return Mod(j + direction * h.hy, n) * n + Mod(i + direction * h.hx, n);
  };

  std::vector<Edge> edges;
  std::vector<Winding> windings;
  std::vector<std::uint8_t> bits;
  edges.reserve(static_cast<size_t>(cells) * e_count);
  for (int cell = 0; cell < cells; ++cell) {
    for (int e = 0; e < e_count; ++e) {
      const Edge& src = g.edge(e);
      const Winding& h = model.windings()[e];
      const int black_cell = shifted(cell, h, 1);
      const bool u_white = model.IsWhite(src.u);
      Edge copy;
      copy.id = cell * (max_id + 1) + src.id;
      copy.u = vertex(u_white ? cell : black_cell, src.u);
      copy.v = vertex(u_white ? black_cell : cell, src.v);
      copy.weight = src.weight;
      edges.push_back(copy);
      windings.push_back({FloorDiv(cell % n + h.hx, n), FloorDiv(cell / n + h.hy, n)});
      bits.push_back(model.orientation().reversed(e) ? 1 : 0);
    }
  }
  std::vector<std::vector<int>> rotation(static_cast<size_t>(cells) * v_count);
  std::vector<Color> colors(rotation.size());
  for (int cell = 0; cell < cells; ++cell) {
    for (int v = 0; v < v_count; ++v) {
      colors[vertex(cell, v)] = model.colors()[v];
      for (int d : model.map().rotation()[v]) {
        const int e = EdgeOfDart(d);
        const int white_cell = model.IsWhite(v) ? cell : shifted(cell, model.windings()[e], -1);
        rotation[vertex(cell, v)].push_back(DartOf(white_cell * e_count + e, d & 1));
      }
    }
  }
  CombinatorialMap map(WeightedGraph(cells * v_count, std::move(edges)), std::move(rotation));
  return TorusDimerModel(std::move(map), std::move(colors), std::move(windings),
                         Orientation(std::move(bits)));
}

std::complex<double> CharpolyEnlarged(const LaurentPoly2& p, int n, std::complex<double> z,
                                      std::complex<double> w) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "enlargement factor must be positive");
  auto roots = [n](std::complex<double> x) {
    std::vector<std::complex<double>> r(n);
    const double mod = std::pow(std::abs(x), 1.0 / n);
    const double arg = std::arg(x);
    for (int k = 0; k < n; ++k) r[k] = std::polar(mod, (arg + 2 * std::numbers::pi * k) / n);
    return r;
  };
  std::complex<double> product = 1.0;
  for (auto u : roots(z)) {
    for (auto v : roots(w)) product *= p.Evaluate(u, v);
  }
  return product;
}

namespace {

struct Slice {
  bool degenerate = false;
  std::vector<std::complex<double>> roots;
};

// Roots in w of w^shift * P(z, w), with shift clearing negative powers.
Slice SolveSlice(const LaurentPoly2& p, std::complex<double> z, double scale) {
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const auto& [e, c] : p.terms()) {
    lo = std::min(lo, e.second);
    hi = std::max(hi, e.second);
  }
  std::vector<std::complex<double>> coeffs(hi - lo + 1, 0.0);
  for (const auto& [e, c] : p.terms()) coeffs[e.second - lo] += c.get_d() * std::pow(z, e.first);
  const double eps = 1e-13 * scale;
  size_t first = 0;
  while (first < coeffs.size() && std::abs(coeffs[first]) <= eps) ++first;
  Slice slice;
  if (first == coeffs.size()) {
    slice.degenerate = true;
    return slice;
  }
  size_t last = coeffs.size() - 1;
  while (std::abs(coeffs[last]) <= eps) --last;
  const int degree = static_cast<int>(last - first);
  if (degree == 0) return slice;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[first + i] / coeffs[last];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  for (int i = 0; i < degree; ++i) slice.roots.push_back(solver.eigenvalues()[i]);
  return slice;
}

int CountInside(const Slice& s, double r2) {
  return static_cast<int>(
      std::count_if(s.roots.begin(), s.roots.end(), [r2](auto w) { return std::abs(w) < r2; }));
}

std::optional<ProbePoint> ClosestRoot(const Slice& s, double phi, std::complex<double> z,
                                      double r2) {
  std::optional<ProbePoint> best;
  for (auto w : s.roots) {
    double residual = std::abs(std::abs(w) - r2);
    if (!best || residual < best->residual) best = ProbePoint{phi, z, w, residual};
  }
  return best;
}

double CircularDistance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
  return std::min(d, 2 * std::numbers::pi - d);
}

}  // namespace

ProbeResult TorusZeroProbe(const LaurentPoly2& p, double r1, double r2, int grid, double tol) {
  if (p.IsZero()) throw Error(ErrorCode::kZeroPolynomial, "cannot probe the zero polynomial");
  if (!ComputeNewtonPolygon(p).nondegenerate) {
    throw Error(ErrorCode::kDegeneratePolynomial, "Newton polygon has zero area");
  }
  if (grid < 1 || r1 <= 0 || r2 <= 0 || tol <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "probe needs positive radii, grid and tolerance");
  }
  double scale = 0.0;
  for (const auto& [e, c] : p.terms()) {
    scale += std::abs(c.get_d()) * std::pow(r1, e.first) * std::pow(r2, e.second);
  }
  const double step = 2 * std::numbers::pi / grid;
  auto z_at = [r1](double phi) { return std::polar(r1, phi); };

  std::vector<Slice> slices(grid);
  ParallelFor(grid, [&](int k) { slices[k] = SolveSlice(p, z_at(k * step), scale); });

  ProbeResult result;
  std::vector<ProbePoint> candidates;
  for (int k = 0; k < grid; ++k) {
    if (slices[k].degenerate) {
      result.degenerate_slices.push_back(k * step);
      continue;
    }
    for (auto w : slices[k].roots) {
      double residual = std::abs(std::abs(w) - r2);
      if (residual < tol) candidates.push_back({k * step, z_at(k * step), w, residual});
    }
  }
  // A root crossing |w| = r2 between samples changes the inside count.
  std::vector<std::optional<ProbePoint>> crossings(grid);
  ParallelFor(grid, [&](int k) {
    const Slice& a = slices[k];
    const Slice& b = slices[(k + 1) % grid];
    if (a.degenerate || b.degenerate) return;
    int count_lo = CountInside(a, r2);
    if (count_lo == CountInside(b, r2)) return;
    double lo = k * step;
    double hi = (k + 1) * step;
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      double mid = 0.5 * (lo + hi);
      Slice s = SolveSlice(p, z_at(mid), scale);
      if (s.degenerate) break;
      (CountInside(s, r2) == count_lo ? lo : hi) = mid;
    }
    const double phi = 0.5 * (lo + hi);
    auto point = ClosestRoot(SolveSlice(p, z_at(phi), scale), phi, z_at(phi), r2);
    if (point && point->residual < tol) crossings[k] = point;
  });
  for (auto& c : crossings) {
    if (c) candidates.push_back(*c);
  }

  // Union candidates that are adjacent in angle and close in w.
  std::vector<int> parent(candidates.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const double w_radius = std::max(1e-3, 4 * step) * r2;
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if (CircularDistance(candidates[i].phi, candidates[j].phi) <= 1.5 * step &&
          std::abs(candidates[i].w - candidates[j].w) <= w_radius) {
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
      }
    }
  }
  std::vector<int> locus_of(candidates.size(), -1);
  for (size_t i = 0; i < candidates.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (locus_of[root] < 0) {
      locus_of[root] = static_cast<int>(result.loci.size());
      result.loci.push_back({candidates[i], {}});
    }
    ZeroLocus& locus = result.loci[locus_of[root]];
    locus.points.push_back(candidates[i]);
    if (candidates[i].residual < locus.representative.residual) locus.representative = candidates[i];
  }
  std::sort(result.loci.begin(), result.loci.end(), [](const ZeroLocus& a, const ZeroLocus& b) {
    return a.representative.phi < b.representative.phi;
  });
  return result;
}

}  // namespace dimer

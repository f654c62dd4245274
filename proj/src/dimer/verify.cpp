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

#include "dimer/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "dimer/errors.hpp"
#include "dimer/free_energy.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/lattices.hpp"
#include "dimer/pfaffian.hpp"
#include "dimer/toric.hpp"

namespace dimer {

namespace {

// Collects failed checks; the first few go into the detail line.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) failed_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary(const std::string& on_success) const {
    if (ok()) return on_success;
    std::string failed = std::to_string(failures_) + "/" + std::to_string(count_) +
                         " checks failed: " + failed_.str();
    return on_success.empty() ? failed : on_success + " | " + failed;
  }

 private:
  int count_ = 0;
  int failures_ = 0;
  std::ostringstream failed_;
};

std::string Str(const Rational& q) { return FormatRational(q); }

double RelativeError(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// --- criteria ---------------------------------------------------------------

std::string ExactPlanarCounts(Checks& c) {
  Rational z = PartitionFunction(SquarePlanar(4, 3));
  c.Expect(z == 11, "4x3 gave " + Str(z));
  const std::vector<std::pair<int, const char*>> expected = {
      {2, "2"}, {4, "36"}, {6, "6728"}, {8, "12988816"}};
  std::string counts;
  for (const auto& [n, value] : expected) {
    Rational got = PartitionFunction(SquarePlanar(n, n));
    c.Expect(got == Rational(value), std::to_string(n) + "x" + std::to_string(n) + " gave " + Str(got));
    counts += (counts.empty() ? "" : ",") + Str(got);
  }
  return "4x3 -> " + Str(z) + "; n x n -> " + counts;
}

std::string ClosedFormAgreement(Checks& c) {
  double worst = 0.0;
  for (int m = 2; m <= 8; m += 2) {
    for (int n = 1; n <= 8; ++n) {
      double exact = PartitionFunction(SquarePlanar(m, n)).get_d();
      double closed = ClosedFormZSquare(m, n, 1, 1);
      double rel = std::abs(closed - exact) / exact;
      worst = std::max(worst, rel);
      c.Expect(rel <= 1e-6, std::to_string(m) + "x" + std::to_string(n) + " rel " + FormatDouble(rel));
    }
  }
  return "worst relative error " + FormatDouble(worst) + " over 32 grids";
}

std::string GenusZeroBrute(Checks& c, std::uint64_t seed) {
  auto maps = RandomPlanarFixtures(seed);
  for (size_t i = 0; i < maps.size(); ++i) {
    Rational pf = PartitionFunction(maps[i]);
    Rational bf = BruteForceZ(maps[i].graph());
    c.Expect(maps[i].genus() == 0, "map " + std::to_string(i) + " not planar");
    c.Expect(pf == bf, "map " + std::to_string(i) + ": " + Str(pf) + " vs " + Str(bf));
  }
  return std::to_string(maps.size()) + " random planar maps agree exactly";
}

std::string GenusOneBrute(Checks& c) {
  struct Case {
    std::string name;
    CombinatorialMap map;
  };
  std::vector<Case> cases;
  for (auto [x, y] : {std::pair{1, 1}, std::pair{2, 3}}) {
    std::string w = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    cases.push_back({"square_torus(2,2)" + w, SquareTorus(2, 2, x, y)});
    cases.push_back({"square_torus(4,4)" + w, SquareTorus(4, 4, x, y)});
  }
  std::vector<std::pair<std::string, TorusDimerModel>> models = {
      {"hex(1,1,1)", HexTorus()},
      {"hex(2,3,5)", HexTorus(2, 3, 5)},
      {"enlarge(hex,2)", Enlarge(HexTorus(), 2)},
      {"bipartite_square(1,1)", BipartiteSquareTorus()}};
  for (const auto& [name, model] : models) {
    cases.push_back({name, model.map()});
    Rational via_charpoly = ZFromCharpoly(model).z;
    Rational bf = BruteForceZ(model.graph());
    c.Expect(via_charpoly == bf, name + " charpoly " + Str(via_charpoly) + " vs " + Str(bf));
  }
  cases.push_back({"k33", K33Torus()});
  std::string summary;
  for (const auto& [name, map] : cases) {
    c.Expect(map.genus() == 1, name + " genus " + std::to_string(map.genus()));
    Rational pf = PartitionFunction(map);
    Rational bf = BruteForceZ(map.graph());
    c.Expect(pf == bf, name + ": " + Str(pf) + " vs " + Str(bf));
    if (name == "k33") {
      c.Expect(bf == 6, "k33 count " + Str(bf));
      summary = "k33 -> " + Str(pf);
    }
  }
  return std::to_string(cases.size()) + " torus fixtures agree exactly; " + summary;
}

std::string GenusTwoBrute(Checks& c) {
  CombinatorialMap map = Genus2Fixture();
  c.Expect(map.genus() == 2, "fixture genus " + std::to_string(map.genus()));
  c.Expect(map.vertex_count() <= 16, "fixture too large");
  PfaffianFormula f = EvaluatePfaffianFormula(map);
  Rational bf = BruteForceZ(map.graph());
  c.Expect(f.terms.size() == 16, std::to_string(f.terms.size()) + " terms");
  c.Expect(f.z == bf, Str(f.z) + " vs " + Str(bf));
  return std::to_string(f.terms.size()) + "-term sum " + Str(f.z) + " = brute force " + Str(bf);
}

std::string ArfIdentity(Checks& c) {
  std::vector<CombinatorialMap> maps = {SquareTorus(2, 2), Genus2Fixture()};
  int forms = 0;
  for (const CombinatorialMap& map : maps) {
    const Homology h(map);
    const int dim = h.dimension();
    const int g = dim / 2;
    for (Gf2Vector alpha = 0; alpha < (Gf2Vector{1} << dim); ++alpha) {
      int sum = 0;
      for (Gf2Vector values = 0; values < (Gf2Vector{1} << dim); ++values) {
        QuadraticFormTable q;
        q.gram = h.gram();
        for (int i = 0; i < dim; ++i) q.basis_values.push_back(Bit(values, i));
        sum += ((Arf(q) + q.Evaluate(alpha)) % 2) ? -1 : 1;
        if (alpha == 0) ++forms;
      }
      c.Expect(sum == (1 << g), "g=" + std::to_string(g) + " alpha=" + std::to_string(alpha) +
                                    " sum " + std::to_string(sum));
    }
  }
  return "identity holds for all " + std::to_string(forms) + " forms (g = 1, 2) and all alpha";
}

std::string CharpolyExact(Checks& c) {
  auto z = LaurentPoly2::Monomial(1, 1, 0);
  auto w = LaurentPoly2::Monomial(1, 0, 1);
  auto zi = LaurentPoly2::Monomial(1, -1, 0);
  auto wi = LaurentPoly2::Monomial(1, 0, -1);
  auto two = LaurentPoly2::Constant(2);
  for (auto [a, b, cc] : {std::array<int, 3>{1, 1, 1}, {2, 3, 5}}) {
    LaurentPoly2 expected =
        LaurentPoly2::Constant(a) + z * Rational(b) + w * Rational(cc);
    c.Expect(CharacteristicPolynomial(HexTorus(a, b, cc)) == Canonicalize(expected).poly,
             "hex(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ")");
  }
  for (auto [x, y] : {std::pair{1, 1}, std::pair{2, 3}}) {
    TorusDimerModel model = BipartiteSquareTorus(x, y);
    LaurentPoly2 expected = (two + z + zi) * Rational(y * y) + (two + w + wi) * Rational(x * x);
    c.Expect(CharacteristicPolynomial(model) == Canonicalize(expected).poly,
             "bipartite square (" + std::to_string(x) + "," + std::to_string(y) + ")");
    CharpolyZ cz = ZFromCharpoly(model);
    c.Expect(cz.raw_values[3] == 0, "P11 of bipartite square = " + Str(cz.raw_values[3]));
  }
  for (int m = 2; m <= 8; m += 2) {
    for (int n = 2; n <= 8; ++n) {
      for (auto reading : {ToricReading::kAsPrinted, ToricReading::kSum}) {
        double p11 = ClosedFormToricP(1, 1, m, n, 1.3, 0.7, reading);
        c.Expect(p11 == 0.0, "closed-form P11(" + std::to_string(m) + "," + std::to_string(n) +
                                 ") = " + FormatDouble(p11));
      }
    }
  }
  return "hex and bipartite square bit-exact; P11 = 0";
}

std::string BlockDiagonal(Checks& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x8);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  double worst = 0.0;
  std::vector<std::pair<std::string, TorusDimerModel>> models = {{"hex", HexTorus()},
                                                                 {"square", BipartiteSquareTorus()}};
  for (const auto& [name, model] : models) {
    LaurentPoly2 p = CharacteristicPolynomial(model, true);
    for (int n : {2, 3}) {
      TorusDimerModel big = Enlarge(model, n);
      for (int i = 0; i < 10; ++i) {
        std::complex<double> z = std::polar(1.0, angle(rng));
        std::complex<double> w = std::polar(1.0, angle(rng));
        double rel = RelativeError(CharpolyEnlarged(p, n, z, w), TwistedDeterminant(big, z, w));
        worst = std::max(worst, rel);
        c.Expect(rel <= 1e-9, name + " n=" + std::to_string(n) + " rel " + FormatDouble(rel));
      }
    }
  }
  return "worst relative error " + FormatDouble(worst) + " over 40 points";
}

std::string CatalanFreeEnergy(Checks& c) {
  FreeEnergyResult r = FreeEnergy(CharacteristicPolynomial(BipartiteSquareTorus()));
  const double target = 4 * kCatalan / std::numbers::pi;
  c.Expect(std::abs(r.value - target) <= 1e-3, "free energy " + FormatDouble(r.value));
  c.Expect(std::abs(r.value / 4 - kCatalan / std::numbers::pi) <= 1e-3,
           "per site " + FormatDouble(r.value / 4));
  return "free energy " + FormatDouble(r.value) + " (4G/pi " + FormatDouble(target) +
         "), per site " + FormatDouble(r.value / 4);
}

std::string FiniteSize(Checks& c) {
  FreeEnergyResult r = FreeEnergy(CharacteristicPolynomial(HexTorus()));
  std::vector<double> finite;
  std::string values;
  for (int n : {2, 3}) {
    Rational z = BruteForceZ(Enlarge(HexTorus(), n).graph());
    double f = std::log(z.get_d()) / (n * n);
    finite.push_back(f);
    values += "n=" + std::to_string(n) + ": Z=" + Str(z) + " -> " + FormatDouble(f) + ", ";
    c.Expect(std::isfinite(f), "n=" + std::to_string(n) + " not finite");
    c.Expect(f < r.value, "n=" + std::to_string(n) + " value " + FormatDouble(f) +
                              " is not below " + FormatDouble(r.value));
  }
  c.Expect(finite[1] > finite[0], "not increasing: " + FormatDouble(finite[0]) + " then " +
                                      FormatDouble(finite[1]));
  auto median_at = [&](size_t level) {
    std::vector<double> v;
    for (int f : r.selected) v.push_back(r.table[level].sums[f]);
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
  };
  const size_t last = r.table.size() - 1;
  const double drift = last > 0 ? std::abs(median_at(last) - median_at(last - 1)) : INFINITY;
  c.Expect(drift <= 1e-4, "free energy drift " + FormatDouble(drift));
  return values + "free energy " + FormatDouble(r.value) + " (drift " + FormatDouble(drift) + ")";
}

std::string ZeroProbe(Checks& c, std::uint64_t seed) {
  LaurentPoly2 hex = CharacteristicPolynomial(HexTorus());
  ProbeResult h = TorusZeroProbe(hex, 1, 1);
  c.Expect(h.locus_count() == 2, "hex: " + std::to_string(h.locus_count()) + " loci");
  const std::complex<double> r3 = std::polar(1.0, 2 * std::numbers::pi / 3);
  for (std::complex<double> zz : {r3, std::conj(r3)}) {
    bool found = false;
    for (const ZeroLocus& l : h.loci) {
      found = found || (std::abs(l.representative.z - zz) <= 1e-6 &&
                        std::abs(l.representative.w - std::conj(zz)) <= 1e-6);
    }
    c.Expect(found, "hex zero near z = " + FormatDouble(zz.real()) + (zz.imag() > 0 ? "+" : "-") +
                        "0.866i missing");
  }
  LaurentPoly2 square = CharacteristicPolynomial(BipartiteSquareTorus());
  ProbeResult s = TorusZeroProbe(square, 1, 1);
  c.Expect(s.locus_count() == 1, "square: " + std::to_string(s.locus_count()) + " loci");
  if (s.locus_count() == 1) {
    const ProbePoint& p = s.loci[0].representative;
    c.Expect(std::abs(p.z + 1.0) <= 1e-6 && std::abs(p.w + 1.0) <= 1e-6, "square locus off (-1,-1)");
  }
  std::mt19937_64 rng(seed ^ 0xb);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  int most = 0;
  for (const LaurentPoly2* p : {&hex, &square}) {
    for (int i = 0; i < 20; ++i) {
      double r1 = radius(rng);
      double r2 = radius(rng);
      int count = TorusZeroProbe(*p, r1, r2).locus_count();
      most = std::max(most, count);
      c.Expect(count <= 2, std::to_string(count) + " loci at radii " + FormatDouble(r1) + ", " +
                               FormatDouble(r2));
    }
  }
  return "hex 2 loci, square 1 locus, at most " + std::to_string(most) + " on 40 random tori";
}

SkewMatrix<Rational> RandomSkew(std::mt19937_64& rng, int n) {
  SkewMatrix<Rational> a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) a.Set(i, j, static_cast<int>(rng() % 11) - 5);
  }
  return a;
}

std::string PfaffianAlgebra(Checks& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xc);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    SkewMatrix<Rational> a = RandomSkew(rng, n);
    Rational pf = Pfaffian(a);
    Rational det = Determinant(a.dense());
    c.Expect(pf * pf == det, "Pf^2 != det at size " + std::to_string(n));
  }
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    SkewMatrix<Rational> a = RandomSkew(rng, n);
    SquareMatrix<Rational> b(n);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) b(r, s) = static_cast<int>(rng() % 7) - 3;
    }
    SkewMatrix<Rational> bab(n);
    for (int r = 0; r < n; ++r) {
      for (int s = r + 1; s < n; ++s) {
        Rational sum = 0;
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) sum += b(r, k) * a.at(k, l) * b(s, l);
        }
        bab.Set(r, s, sum);
      }
    }
    c.Expect(Pfaffian(bab) == Determinant(b) * Pfaffian(a), "Pf(BAB^T) at size " + std::to_string(n));
  }
  auto maps = RandomPlanarFixtures(seed);
  for (size_t i = 0; i < maps.size(); ++i) {
    const WeightedGraph& g = maps[i].graph();
    Orientation k(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) k.set_reversed(e, rng() & 1);
    for (const Orientation& orient : {ConstructKasteleyn(maps[i]), k}) {
      Rational expansion = 0;
      ForEachMatching(g, [&](const DimerConfiguration& d) {
        expansion += MatchingSign(g, orient, d) * MatchingWeight(g, d);
      });
      c.Expect(Pfaffian(KasteleynMatrix(g, orient)) == expansion,
               "expansion on map " + std::to_string(i));
    }
  }
  return "Pf^2 = det (100), Pf(BAB^T) = det(B) Pf(A) (50), expansion on " +
         std::to_string(maps.size()) + " maps x 2 orientations";
}

std::string HomologyResolved(Checks& c) {
  std::vector<std::pair<std::string, CombinatorialMap>> maps = {
      {"square_torus(2,2)", SquareTorus(2, 2)},
      {"square_torus(2,2)(2,3)", SquareTorus(2, 2, 2, 3)},
      {"hex(1,1,1)", HexTorus().map()},
      {"hex(2,3,5)", HexTorus(2, 3, 5).map()},
      {"enlarge(hex,2)", Enlarge(HexTorus(), 2).map()}};
  int classes = 0;
  for (const auto& [name, map] : maps) {
    const WeightedGraph& g = map.graph();
    const Homology h(map);
    PfaffianFormula f = EvaluatePfaffianFormula(map);
    std::vector<Rational> z_alpha(size_t{1} << h.dimension(), Rational(0));
    ForEachMatching(g, [&](const DimerConfiguration& d) {
      std::vector<int> sym;
      std::vector<char> in_d0(g.edge_count(), 0);
      for (int e : f.d0->edges) in_d0[e] = 1;
      for (int e : d.edges) {
        if (!in_d0[e]) sym.push_back(e);
        in_d0[e] = in_d0[e] ? 0 : 1;
      }
      for (int e : f.d0->edges) {
        if (in_d0[e]) sym.push_back(e);
      }
      z_alpha[h.ClassOf(sym)] += MatchingWeight(g, d);
    });
    for (const ClassTerm& t : f.terms) {
      QuadraticFormTable q = QuadraticForm(map, h, t.orientation, *f.d0);
      Rational expected = 0;
      for (Gf2Vector alpha = 0; alpha < z_alpha.size(); ++alpha) {
        expected += q.Evaluate(alpha) ? Rational(-z_alpha[alpha]) : z_alpha[alpha];
      }
      c.Expect(t.NormalizedPfaffian() == expected,
               name + " class " + std::to_string(t.cocycle_subset) + ": " +
                   Str(t.NormalizedPfaffian()) + " vs " + Str(expected));
      ++classes;
    }
  }
  return std::to_string(classes) + " classes on " + std::to_string(maps.size()) +
         " fixtures match their homology-resolved sums";
}

struct CriterionInfo {
  const char* title;
  double budget;
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"exact planar counts", 5},
    {"closed-form agreement", 5},
    {"brute-force equivalence, genus 0", 30},
    {"brute-force equivalence, genus 1", 60},
    {"brute-force equivalence, genus 2", 30},
    {"Arf identity", 1},
    {"characteristic polynomials", 1},
    {"block-diagonalization identity", 10},
    {"free energy vs. Catalan's constant", 60},
    {"finite-size consistency", 60},
    {"zero probe", 30},
    {"Pfaffian algebra properties", 30},
    {"homology-resolved Pfaffian", 10},
};

}  // namespace

std::vector<CombinatorialMap> RandomPlanarFixtures(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CombinatorialMap> maps;
  for (int i = 0; i < 25; ++i) {
    const int vertices = 4 + 2 * static_cast<int>(rng() % 6);
    const int chords = vertices / 2 + static_cast<int>(rng() % vertices);
    maps.push_back(RandomSurfaceMap(rng, vertices, chords, 0, 5));
  }
  return maps;
}

CriterionResult RunCriterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::kInvalidArgument, "no criterion " + std::to_string(id));
  }
  CriterionResult result;
  result.id = id;
  result.title = kCriteria[id - 1].title;
  result.budget_seconds = kCriteria[id - 1].budget;
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  try {
    switch (id) {
      case 1: summary = ExactPlanarCounts(checks); break;
      case 2: summary = ClosedFormAgreement(checks); break;
      case 3: summary = GenusZeroBrute(checks, seed); break;
      case 4: summary = GenusOneBrute(checks); break;
      case 5: summary = GenusTwoBrute(checks); break;
      case 6: summary = ArfIdentity(checks); break;
      case 7: summary = CharpolyExact(checks); break;
      case 8: summary = BlockDiagonal(checks, seed); break;
      case 9: summary = CatalanFreeEnergy(checks); break;
      case 10: summary = FiniteSize(checks); break;
      case 11: summary = ZeroProbe(checks, seed); break;
      case 12: summary = PfaffianAlgebra(checks, seed); break;
      case 13: summary = HomologyResolved(checks); break;
    }
  } catch (const std::exception& e) {
    checks.Expect(false, e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.checks_passed = checks.ok();
  result.detail = checks.Summary(summary);
  return result;
}

std::vector<CriterionResult> RunAcceptance(std::uint64_t seed, const CriterionCallback& on_result) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(RunCriterion(id, seed));
    if (on_result) on_result(results.back());
  }
  return results;
}

}  // namespace dimer

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

#include "dimer/dimer.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "dimer/errors.hpp"
#include "dimer/free_energy.hpp"
#include "dimer/io.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/lattices.hpp"
#include "dimer/parallel.hpp"
#include "dimer/toric.hpp"
#include "dimer/verify.hpp"

struct dimer_map {
  dimer::GraphDocument doc;
};

struct dimer_free_energy {
  dimer::FreeEnergyResult result;
};

struct dimer_probe {
  dimer::ProbeResult result;
};

static_assert(DIMER_DEFAULT_SEED == dimer::kDefaultSeed);

namespace {

thread_local std::string last_error;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
dimer_status Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return DIMER_OK;
  } catch (const dimer::Error& e) {
    last_error = e.what();
    return static_cast<dimer_status>(e.code());
  } catch (const UsageError& e) {
    last_error = std::string("UnknownFamily: ") + e.what();
    return DIMER_E_UNKNOWN_FAMILY;
  } catch (const std::bad_alloc&) {
    last_error = "Internal: out of memory";
    return DIMER_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return DIMER_E_INTERNAL;
  }
}

void RequireNonNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw dimer::Error(dimer::ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dimer::CombinatorialMap MapOf(const dimer::GraphDocument& doc) {
  if (doc.rotation) return doc.Map();
  std::vector<std::vector<int>> rotation(doc.graph.vertex_count());
  for (int v = 0; v < doc.graph.vertex_count(); ++v) {
    for (int e : doc.graph.incident(v)) {
      rotation[v].push_back(dimer::DartOf(e, doc.graph.edge(e).u != v));
    }
  }
  return dimer::CombinatorialMap(doc.graph, std::move(rotation));
}

dimer::Rational WeightArg(const std::vector<std::string>& args, size_t i) {
  return i < args.size() ? dimer::ParseRational(args[i]) : dimer::Rational(1);
}

int IntArg(const std::vector<std::string>& args, size_t i, const std::string& family) {
  if (i >= args.size()) throw UsageError(family + " needs more parameters");
  try {
    size_t used = 0;
    int value = std::stoi(args[i], &used);
    if (used != args[i].size()) throw std::invalid_argument(args[i]);
    return value;
  } catch (const std::logic_error&) {
    throw UsageError("'" + args[i] + "' is not an integer");
  }
}

dimer::GraphDocument Generate(const std::string& family, const std::vector<std::string>& a,
                              uint64_t seed) {
  auto expect_at_most = [&](size_t n) {
    if (a.size() > n) throw UsageError(family + " takes at most " + std::to_string(n) + " parameters");
  };
  if (family == "square-planar" || family == "square-torus") {
    expect_at_most(4);
    if (a.size() != 2 && a.size() != 4) throw UsageError(family + " takes m n [x y]");
    int m = IntArg(a, 0, family);
    int n = IntArg(a, 1, family);
    auto make = family == "square-planar" ? dimer::SquarePlanar : dimer::SquareTorus;
    return dimer::DocumentOf(make(m, n, WeightArg(a, 2), WeightArg(a, 3)));
  }
  if (family == "hex") {
    if (a.size() != 0 && a.size() != 3) throw UsageError("hex takes [a b c]");
    return dimer::DocumentOf(dimer::HexTorus(WeightArg(a, 0), WeightArg(a, 1), WeightArg(a, 2)));
  }
  if (family == "bipartite-square") {
    if (a.size() != 0 && a.size() != 2) throw UsageError("bipartite-square takes [x y]");
    return dimer::DocumentOf(dimer::BipartiteSquareTorus(WeightArg(a, 0), WeightArg(a, 1)));
  }
  if (family == "k33") {
    expect_at_most(0);
    return dimer::DocumentOf(dimer::K33Torus());
  }
  if (family == "genus2") {
    expect_at_most(0);
    return dimer::DocumentOf(dimer::Genus2Fixture());
  }
  if (family == "random-planar") {
    if (a.size() != 2) throw UsageError("random-planar takes vertices chords");
    std::mt19937_64 rng(seed);
    return dimer::DocumentOf(
        dimer::RandomSurfaceMap(rng, IntArg(a, 0, family), IntArg(a, 1, family), 0, 5));
  }
  throw UsageError("unknown family '" + family + "'");
}

}  // namespace

extern "C" {

const char* dimer_last_error(void) { return last_error.c_str(); }

const char* dimer_status_name(dimer_status status) {
  if (status == DIMER_E_UNKNOWN_FAMILY) return "UnknownFamily";
  return dimer::ErrorName(static_cast<dimer::ErrorCode>(status));
}

void dimer_string_free(char* s) { std::free(s); }

void dimer_set_jobs(int jobs) { dimer::SetMaxJobs(jobs); }

dimer_status dimer_map_parse(const char* text, dimer_map** out) {
  return Guard([&] {
    RequireNonNull(text, "text");
    RequireNonNull(out, "out");
    *out = new dimer_map{dimer::ParseDocument(text)};
  });
}

dimer_status dimer_map_generate(const char* family, int argc, const char* const* argv,
                                uint64_t seed, dimer_map** out) {
  return Guard([&] {
    RequireNonNull(family, "family");
    RequireNonNull(out, "out");
    if (argc > 0) RequireNonNull(argv, "argv");
    std::vector<std::string> args(argv, argv + std::max(argc, 0));
    *out = new dimer_map{Generate(family, args, seed)};
  });
}

dimer_status dimer_map_enlarge(const dimer_map* map, int n, dimer_map** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    *out = new dimer_map{dimer::DocumentOf(dimer::Enlarge(map->doc.Model(), n))};
  });
}

void dimer_map_free(dimer_map* map) { delete map; }

dimer_status dimer_map_format(const dimer_map* map, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    *out = CopyString(dimer::FormatDocument(map->doc));
  });
}

dimer_status dimer_map_info(const dimer_map* map, int* vertices, int* edges, int* faces,
                            int* genus) {
  return Guard([&] {
    RequireNonNull(map, "map");
    int f = -1, g = -1;
    if (map->doc.rotation) {
      dimer::CombinatorialMap m = map->doc.Map();
      f = m.face_count();
      g = m.genus();
    }
    if (vertices) *vertices = map->doc.graph.vertex_count();
    if (edges) *edges = map->doc.graph.edge_count();
    if (faces) *faces = f;
    if (genus) *genus = g;
  });
}

dimer_status dimer_partition_function(const dimer_map* map, dimer_method method,
                                      int unit_weights, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    dimer::GraphDocument doc = map->doc;
    if (unit_weights) doc.graph = doc.graph.WithUnitWeights();
    dimer::Rational z;
    switch (method) {
      case DIMER_METHOD_PFAFFIAN: z = dimer::PartitionFunction(MapOf(doc)); break;
      case DIMER_METHOD_BRUTE: z = dimer::BruteForceZ(doc.graph); break;
      default: throw dimer::Error(dimer::ErrorCode::kInvalidArgument, "unknown method");
    }
    *out = CopyString(dimer::FormatRational(z));
  });
}

dimer_status dimer_orientation(const dimer_map* map, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    dimer::CombinatorialMap m = MapOf(map->doc);
    *out = CopyString(dimer::FormatOrientation(m.graph(), dimer::ConstructKasteleyn(m)));
  });
}

dimer_status dimer_kasteleyn_matrix(const dimer_map* map, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    dimer::CombinatorialMap m = MapOf(map->doc);
    *out = CopyString(
        dimer::FormatMatrixTriplets(dimer::KasteleynMatrix(m.graph(), dimer::ConstructKasteleyn(m))));
  });
}

dimer_status dimer_charpoly(const dimer_map* map, int raw, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    *out = CopyString(
        dimer::FormatTriples(dimer::CharacteristicPolynomial(map->doc.Model(), raw != 0)));
  });
}

dimer_status dimer_newton_polygon(const dimer_map* map, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    dimer::NewtonPolygon np =
        dimer::ComputeNewtonPolygon(dimer::CharacteristicPolynomial(map->doc.Model()));
    std::ostringstream s;
    s << "area " << dimer::FormatRational(np.area) << '\n'
      << "interior " << np.interior_points << '\n'
      << "boundary " << np.boundary_points << '\n'
      << "nondegenerate " << (np.nondegenerate ? 1 : 0) << '\n'
      << "vertices";
    for (const auto& [m, n] : np.vertices) s << ' ' << m << ',' << n;
    s << '\n';
    *out = CopyString(s.str());
  });
}

dimer_status dimer_charpoly_z(const dimer_map* map, char** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    dimer::CharpolyZ cz = dimer::ZFromCharpoly(map->doc.Model());
    std::ostringstream s;
    s << "z " << dimer::FormatRational(cz.z) << '\n' << "raw";
    for (const auto& v : cz.raw_values) s << ' ' << dimer::FormatRational(v);
    s << "\nsigns";
    for (int v : cz.signs) s << ' ' << v;
    s << "\ncanonical_signs";
    for (int v : cz.canonical_signs) s << ' ' << v;
    s << "\narf";
    for (int v : cz.arf) s << ' ' << v;
    s << '\n';
    *out = CopyString(s.str());
  });
}

dimer_status dimer_free_energy_compute(const dimer_map* map, double tol, dimer_free_energy** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    *out = new dimer_free_energy{
        dimer::FreeEnergy(dimer::CharacteristicPolynomial(map->doc.Model()), tol)};
  });
}

void dimer_free_energy_free(dimer_free_energy* fe) { delete fe; }

double dimer_free_energy_value(const dimer_free_energy* fe) { return fe ? fe->result.value : 0.0; }

int dimer_free_energy_levels(const dimer_free_energy* fe) {
  return fe ? static_cast<int>(fe->result.table.size()) : 0;
}

dimer_status dimer_free_energy_level(const dimer_free_energy* fe, int level, int* n,
                                     double sums[4]) {
  return Guard([&] {
    RequireNonNull(fe, "free energy");
    if (level < 0 || level >= static_cast<int>(fe->result.table.size())) {
      throw dimer::Error(dimer::ErrorCode::kInvalidArgument, "level out of range");
    }
    const auto& row = fe->result.table[level];
    if (n) *n = row.n;
    if (sums) {
      for (int f = 0; f < 4; ++f) sums[f] = row.sums[f];
    }
  });
}

int dimer_free_energy_diverging_family(const dimer_free_energy* fe) {
  return fe ? fe->result.diverging_family.value_or(-1) : -1;
}

dimer_status dimer_probe_compute(const dimer_map* map, double r1, double r2, int grid, double tol,
                                 dimer_probe** out) {
  return Guard([&] {
    RequireNonNull(map, "map");
    RequireNonNull(out, "out");
    *out = new dimer_probe{
        dimer::TorusZeroProbe(dimer::CharacteristicPolynomial(map->doc.Model()), r1, r2, grid, tol)};
  });
}

void dimer_probe_free(dimer_probe* probe) { delete probe; }

int dimer_probe_locus_count(const dimer_probe* probe) {
  return probe ? probe->result.locus_count() : 0;
}

dimer_status dimer_probe_locus(const dimer_probe* probe, int index, double* phi, double z[2],
                               double w[2]) {
  return Guard([&] {
    RequireNonNull(probe, "probe");
    if (index < 0 || index >= probe->result.locus_count()) {
      throw dimer::Error(dimer::ErrorCode::kInvalidArgument, "locus index out of range");
    }
    const dimer::ProbePoint& p = probe->result.loci[index].representative;
    if (phi) *phi = p.phi;
    if (z) {
      z[0] = p.z.real();
      z[1] = p.z.imag();
    }
    if (w) {
      w[0] = p.w.real();
      w[1] = p.w.imag();
    }
  });
}

int dimer_probe_degenerate_slices(const dimer_probe* probe) {
  return probe ? static_cast<int>(probe->result.degenerate_slices.size()) : 0;
}

dimer_status dimer_verify(int id, uint64_t seed, dimer_criterion_callback callback, void* user,
                          int* passed, int* total) {
  return Guard([&] {
    std::vector<dimer::CriterionResult> results;
    auto report = [&](const dimer::CriterionResult& r) {
      if (!callback) return;
      dimer_criterion c{r.id, r.title.c_str(), r.passed() ? 1 : 0, r.seconds, r.budget_seconds,
                        r.detail.c_str()};
      callback(&c, user);
    };
    if (id == 0) {
      results = dimer::RunAcceptance(seed, report);
    } else {
      results.push_back(dimer::RunCriterion(id, seed));
      report(results.back());
    }
    int ok = 0;
    for (const auto& r : results) ok += r.passed() ? 1 : 0;
    if (passed) *passed = ok;
    if (total) *total = static_cast<int>(results.size());
  });
}

}  // extern "C"

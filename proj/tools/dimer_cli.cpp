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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dimer/dimer.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void Fail(dimer_status status) {
  throw Failure{status == DIMER_E_UNKNOWN_FAMILY ? kExitUsage : kExitDomain, dimer_last_error()};
}

void Check(dimer_status status) {
  if (status != DIMER_OK) Fail(status);
}

struct StringDeleter {
  void operator()(char* s) const { dimer_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MapDeleter {
  void operator()(dimer_map* m) const { dimer_map_free(m); }
};
using OwnedMap = std::unique_ptr<dimer_map, MapDeleter>;

template <class Fn>
std::string TakeString(Fn&& fn) {
  char* raw = nullptr;
  Check(fn(&raw));
  OwnedString owned(raw);
  return std::string(raw);
}

std::string ReadInput(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

OwnedMap LoadMap(const std::string& path) {
  dimer_map* m = nullptr;
  Check(dimer_map_parse(ReadInput(path).c_str(), &m));
  return OwnedMap(m);
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitUsage, "cannot write '" + path + "'"};
  out << text;
}

std::string Format9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string Complex9(double re, double im) {
  return Format9(re) + (im < 0 || std::signbit(im) ? "-" : "+") + Format9(std::abs(im)) + "i";
}

struct Globals {
  bool porcelain = false;
  int jobs = 0;
  uint64_t seed = DIMER_DEFAULT_SEED;
};

struct GenOptions {
  std::string family;
  std::vector<std::string> params;
  std::string output;
  int enlarge = 1;
};

void RunGen(const Globals& g, const GenOptions& o) {
  OwnedMap map;
  if (o.family == "file") {
    if (o.params.size() > 1) throw Failure{kExitUsage, "gen file takes one path"};
    map = LoadMap(o.params.empty() ? "-" : o.params[0]);
  } else {
    std::vector<const char*> argv;
    for (const auto& p : o.params) argv.push_back(p.c_str());
    dimer_map* raw = nullptr;
    Check(dimer_map_generate(o.family.c_str(), static_cast<int>(argv.size()), argv.data(), g.seed,
                             &raw));
    map.reset(raw);
  }
  if (o.enlarge != 1) {
    dimer_map* big = nullptr;
    Check(dimer_map_enlarge(map.get(), o.enlarge, &big));
    map.reset(big);
  }
  std::string text = TakeString([&](char** out) { return dimer_map_format(map.get(), out); });
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
  } else {
    WriteFile(o.output, text);
  }
}

struct ZOptions {
  std::string input;
  std::string method = "pfaffian";
  std::string matrix_out;
};

void RunZ(const Globals& g, const ZOptions& o, bool unit_weights) {
  OwnedMap map = LoadMap(o.input);
  if (!o.matrix_out.empty()) {
    WriteFile(o.matrix_out,
              TakeString([&](char** out) { return dimer_kasteleyn_matrix(map.get(), out); }));
  }
  std::vector<std::pair<std::string, std::string>> values;
  auto compute = [&](const char* name, dimer_method m) {
    values.push_back({name, TakeString([&](char** out) {
                        return dimer_partition_function(map.get(), m, unit_weights ? 1 : 0, out);
                      })});
  };
  if (o.method == "pfaffian" || o.method == "both") compute("pfaffian", DIMER_METHOD_PFAFFIAN);
  if (o.method == "brute" || o.method == "both") compute("brute", DIMER_METHOD_BRUTE);
  if (g.porcelain) {
    int v = 0, e = 0, f = 0, genus = 0;
    Check(dimer_map_info(map.get(), &v, &e, &f, &genus));
    std::cout << "vertices " << v << "\nedges " << e << "\n";
    if (genus >= 0) std::cout << "faces " << f << "\ngenus " << genus << "\n";
    for (const auto& [name, value] : values) std::cout << name << ' ' << value << '\n';
    return;
  }
  for (size_t i = 0; i < values.size(); ++i) std::cout << (i ? "  " : "") << values[i].second;
  std::cout << '\n';
}

struct CharpolyOptions {
  std::string input;
  bool raw = false;
  bool newton = false;
  bool z = false;
};

void RunCharpoly(const Globals& g, const CharpolyOptions& o) {
  OwnedMap map = LoadMap(o.input);
  std::string triples =
      TakeString([&](char** out) { return dimer_charpoly(map.get(), o.raw ? 1 : 0, out); });
  if (g.porcelain) {
    std::istringstream lines(triples);
    for (std::string line; std::getline(lines, line);) std::cout << "term " << line << '\n';
  } else {
    std::cout << triples;
  }
  if (o.newton) std::cout << TakeString([&](char** out) { return dimer_newton_polygon(map.get(), out); });
  if (o.z) std::cout << TakeString([&](char** out) { return dimer_charpoly_z(map.get(), out); });
}

struct FreeEnergyOptions {
  std::string input;
  double tol = 1e-6;
  double per_site = 0.0;
};

void RunFreeEnergy(const Globals& g, const FreeEnergyOptions& o) {
  OwnedMap map = LoadMap(o.input);
  dimer_free_energy* raw = nullptr;
  Check(dimer_free_energy_compute(map.get(), o.tol, &raw));
  std::unique_ptr<dimer_free_energy, void (*)(dimer_free_energy*)> fe(raw, dimer_free_energy_free);
  const double value = dimer_free_energy_value(fe.get());
  const int diverging = dimer_free_energy_diverging_family(fe.get());
  static const char* kFamilies[4] = {"00", "10", "01", "11"};
  if (g.porcelain) {
    std::cout << "value " << Format9(value) << '\n';
  } else {
    std::cout << Format9(value) << '\n';
    std::cout << "n";
    for (const char* f : kFamilies) std::cout << "\tP" << f;
    std::cout << '\n';
  }
  for (int level = 0; level < dimer_free_energy_levels(fe.get()); ++level) {
    int n = 0;
    double sums[4];
    Check(dimer_free_energy_level(fe.get(), level, &n, sums));
    std::cout << (g.porcelain ? "level " : "") << n;
    for (double s : sums) std::cout << (g.porcelain ? " " : "\t") << Format9(s);
    std::cout << '\n';
  }
  if (diverging >= 0) {
    std::cout << (g.porcelain ? "diverging " : "diverging family ") << kFamilies[diverging] << '\n';
  }
  if (o.per_site > 0) {
    std::cout << (g.porcelain ? "per_site " : "per site ") << Format9(value / o.per_site) << '\n';
  }
}

struct ProbeOptions {
  std::string input;
  double r1 = 1.0;
  double r2 = 1.0;
  int grid = 720;
  double tol = 1e-6;
};

void RunProbe(const Globals& g, const ProbeOptions& o) {
  OwnedMap map = LoadMap(o.input);
  dimer_probe* raw = nullptr;
  Check(dimer_probe_compute(map.get(), o.r1, o.r2, o.grid, o.tol, &raw));
  std::unique_ptr<dimer_probe, void (*)(dimer_probe*)> probe(raw, dimer_probe_free);
  const int count = dimer_probe_locus_count(probe.get());
  const int degenerate = dimer_probe_degenerate_slices(probe.get());
  if (g.porcelain) {
    std::cout << "loci " << count << "\ndegenerate_slices " << degenerate << '\n';
  } else {
    std::cout << count << (count == 1 ? " locus" : " loci") << '\n';
    if (degenerate > 0) std::cout << "skipped " << degenerate << " degenerate slices\n";
  }
  for (int i = 0; i < count; ++i) {
    double phi = 0, z[2], w[2];
    Check(dimer_probe_locus(probe.get(), i, &phi, z, w));
    if (g.porcelain) {
      std::cout << "locus " << i << ' ' << Format9(phi) << ' ' << Format9(z[0]) << ' '
                << Format9(z[1]) << ' ' << Format9(w[0]) << ' ' << Format9(w[1]) << '\n';
    } else {
      std::cout << "z = " << Complex9(z[0], z[1]) << "  w = " << Complex9(w[0], w[1]) << '\n';
    }
  }
}

struct VerifyState {
  bool porcelain = false;
};

void PrintCriterion(const dimer_criterion* c, void* user) {
  const auto* state = static_cast<const VerifyState*>(user);
  char line[160];
  if (state->porcelain) {
    std::snprintf(line, sizeof line, "criterion %d %s %.3f %.0f", c->id,
                  c->passed ? "pass" : "fail", c->seconds, c->budget_seconds);
    std::cout << line << ' ' << c->title << '\n';
  } else {
    std::snprintf(line, sizeof line, "%2d  %s  %7.2fs / %3.0fs  ", c->id,
                  c->passed ? "PASS" : "FAIL", c->seconds, c->budget_seconds);
    std::cout << line << c->title << ": " << c->detail << '\n';
  }
  std::cout.flush();
}

int RunVerify(const Globals& g, int criterion) {
  VerifyState state{g.porcelain};
  int passed = 0, total = 0;
  Check(dimer_verify(criterion, g.seed, PrintCriterion, &state, &passed, &total));
  std::cout << (g.porcelain ? "passed " : "") << passed << "/" << total
            << (g.porcelain ? "\n" : " criteria passed\n");
  return passed == total ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimer partition functions on surface graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--porcelain", g.porcelain, "Line-oriented key/value output");
  app.add_option("--jobs", g.jobs, "Worker thread cap (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for randomized fixtures and checks");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a fixture in the graph file format");
  gen_cmd->add_option("family", gen.family,
                      "square-planar, square-torus, hex, bipartite-square, k33, genus2, random-planar, "
                      "or file <path> to re-emit a graph file")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->add_option("--enlarge", gen.enlarge, "Paste n x n copies of a torus model")
      ->check(CLI::PositiveNumber);

  ZOptions z_opts;
  auto add_z_options = [](CLI::App* cmd, ZOptions& o) {
    cmd->add_option("input", o.input, "Graph file (default stdin)");
    cmd->add_option("--method", o.method, "pfaffian, brute or both")
        ->check(CLI::IsMember({"pfaffian", "brute", "both"}));
    cmd->add_option("--matrix-out", o.matrix_out, "Write the Kasteleyn matrix as i j value lines");
  };
  auto* z_cmd = app.add_subcommand("z", "Exact partition function");
  add_z_options(z_cmd, z_opts);
  ZOptions count_opts;
  auto* count_cmd = app.add_subcommand("count", "Number of perfect matchings");
  add_z_options(count_cmd, count_opts);

  std::string orient_input;
  auto* orient_cmd = app.add_subcommand("orient", "Kasteleyn orientation as dir lines");
  orient_cmd->add_option("input", orient_input, "Graph file (default stdin)");

  CharpolyOptions cp;
  auto* cp_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of a torus model");
  cp_cmd->add_option("input", cp.input, "Model file (default stdin)");
  cp_cmd->add_flag("--raw", cp.raw, "Skip canonicalization");
  cp_cmd->add_flag("--newton", cp.newton, "Also print the Newton polygon");
  cp_cmd->add_flag("--z", cp.z, "Also print Z from the four evaluations");

  FreeEnergyOptions fe;
  auto* fe_cmd = app.add_subcommand("free-energy", "Free energy per fundamental domain");
  fe_cmd->add_option("input", fe.input, "Model file (default stdin)");
  fe_cmd->add_option("--tol", fe.tol, "Target tolerance")->check(CLI::PositiveNumber);
  fe_cmd->add_option("--per-site", fe.per_site, "Also print value / k")->check(CLI::PositiveNumber);

  ProbeOptions pr;
  auto* pr_cmd = app.add_subcommand("probe", "Zeros of P on the torus |z| = r1, |w| = r2");
  pr_cmd->add_option("input", pr.input, "Model file (default stdin)");
  pr_cmd->add_option("--r1", pr.r1, "Radius in z")->check(CLI::PositiveNumber);
  pr_cmd->add_option("--r2", pr.r2, "Radius in w")->check(CLI::PositiveNumber);
  pr_cmd->add_option("--grid", pr.grid, "Number of angles")->check(CLI::PositiveNumber);
  pr_cmd->add_option("--tol", pr.tol, "Modulus tolerance")->check(CLI::PositiveNumber);

  int criterion = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--criterion", criterion, "Run one criterion (1-13)")
      ->check(CLI::Range(1, 13));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    dimer_set_jobs(g.jobs);
    if (*gen_cmd) RunGen(g, gen);
    if (*z_cmd) RunZ(g, z_opts, false);
    if (*count_cmd) RunZ(g, count_opts, true);
    if (*orient_cmd) {
      OwnedMap map = LoadMap(orient_input);
      std::cout << TakeString([&](char** out) { return dimer_orientation(map.get(), out); });
    }
    if (*cp_cmd) RunCharpoly(g, cp);
    if (*fe_cmd) RunFreeEnergy(g, fe);
    if (*pr_cmd) RunProbe(g, pr);
    if (*verify_cmd) return RunVerify(g, criterion);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return 0;
}

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

#ifndef DIMER_DIMER_H_
#define DIMER_DIMER_H_

#include <stdint.h>

#if defined(_WIN32)
#if defined(DIMER_BUILDING_LIBRARY)
#define DIMER_API __declspec(dllexport)
#else
#define DIMER_API __declspec(dllimport)
#endif
#else
#define DIMER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DIMER_DEFAULT_SEED 20260101ULL

typedef enum dimer_status {
  DIMER_OK = 0,
  DIMER_E_PARSE = 1,
  DIMER_E_INVALID_ARGUMENT = 2,
  DIMER_E_CAP_EXCEEDED = 3,
  DIMER_E_DISCONNECTED = 4,
  DIMER_E_INVALID_MAP = 5,
  DIMER_E_DEGENERATE_BASIS = 6,
  DIMER_E_DEGENERATE_PAIRING = 7,
  DIMER_E_ODD_DEGREE = 8,
  DIMER_E_SINGULAR_GRAM = 9,
  DIMER_E_ODD_VERTEX_COUNT = 10,
  DIMER_E_NOT_BIPARTITE = 11,
  DIMER_E_UNEQUAL_COLOR_CLASSES = 12,
  DIMER_E_NOT_GENUS_ONE = 13,
  DIMER_E_INVALID_WINDINGS = 14,
  DIMER_E_ZERO_POLYNOMIAL = 15,
  DIMER_E_DEGENERATE_POLYNOMIAL = 16,
  DIMER_E_NO_CONVERGENCE = 17,
  DIMER_E_ODD_M = 18,
  DIMER_E_INTERNAL = 19,
  DIMER_E_UNKNOWN_FAMILY = 20,
} dimer_status;

typedef enum dimer_method {
  DIMER_METHOD_PFAFFIAN = 0,
  DIMER_METHOD_BRUTE = 1,
} dimer_method;

// A parsed or generated graph file: graph plus optional rotation system,
// coloring, windings and orientation.
typedef struct dimer_map dimer_map;
typedef struct dimer_free_energy dimer_free_energy;
typedef struct dimer_probe dimer_probe;

// Message for the last failing call on this thread; never null.
DIMER_API const char* dimer_last_error(void);
DIMER_API const char* dimer_status_name(dimer_status status);
// Frees strings returned through char** out-parameters.
DIMER_API void dimer_string_free(char* s);
// Caps worker threads; 0 restores the hardware default.
DIMER_API void dimer_set_jobs(int jobs);

DIMER_API dimer_status dimer_map_parse(const char* text, dimer_map** out);
// Families: square-planar m n [x y], square-torus m n [x y], hex [a b c],
// bipartite-square [x y], k33, genus2, random-planar vertices chords.
// Weights are decimal or p/q strings. `seed` drives random families.
DIMER_API dimer_status dimer_map_generate(const char* family, int argc, const char* const* argv,
                                          uint64_t seed, dimer_map** out);
// n x n copies of a torus model.
DIMER_API dimer_status dimer_map_enlarge(const dimer_map* map, int n, dimer_map** out);
DIMER_API void dimer_map_free(dimer_map* map);
DIMER_API dimer_status dimer_map_format(const dimer_map* map, char** out);
// faces and genus are -1 without a rotation system.
DIMER_API dimer_status dimer_map_info(const dimer_map* map, int* vertices, int* edges, int* faces,
                                      int* genus);

// Exact weighted sum over perfect matchings as "p" or "p/q". The Pfaffian
// method uses the file's rotation system, or incidence order without one.
DIMER_API dimer_status dimer_partition_function(const dimer_map* map, dimer_method method,
                                                int unit_weights, char** out);
// Kasteleyn orientation as `dir` lines.
DIMER_API dimer_status dimer_orientation(const dimer_map* map, char** out);
// Skew-adjacency matrix of the Kasteleyn orientation as `i j value` lines.
DIMER_API dimer_status dimer_kasteleyn_matrix(const dimer_map* map, char** out);

// Characteristic polynomial as `coeff m n` lines; canonical unless raw.
DIMER_API dimer_status dimer_charpoly(const dimer_map* map, int raw, char** out);
// `key value` lines: area, interior, boundary, nondegenerate, vertices.
DIMER_API dimer_status dimer_newton_polygon(const dimer_map* map, char** out);
// Z from the four evaluations, with the signs as `key value` lines.
DIMER_API dimer_status dimer_charpoly_z(const dimer_map* map, char** out);

DIMER_API dimer_status dimer_free_energy_compute(const dimer_map* map, double tol,
                                                 dimer_free_energy** out);
DIMER_API void dimer_free_energy_free(dimer_free_energy* fe);
DIMER_API double dimer_free_energy_value(const dimer_free_energy* fe);
DIMER_API int dimer_free_energy_levels(const dimer_free_energy* fe);
// Writes n and the four family sums (theta + 2 tau order) of one level.
DIMER_API dimer_status dimer_free_energy_level(const dimer_free_energy* fe, int level, int* n,
                                               double sums[4]);
// -1 when every family was used.
DIMER_API int dimer_free_energy_diverging_family(const dimer_free_energy* fe);

DIMER_API dimer_status dimer_probe_compute(const dimer_map* map, double r1, double r2, int grid,
                                           double tol, dimer_probe** out);
DIMER_API void dimer_probe_free(dimer_probe* probe);
DIMER_API int dimer_probe_locus_count(const dimer_probe* probe);
// Representative point of a locus: z and w as (re, im), plus its angle.
DIMER_API dimer_status dimer_probe_locus(const dimer_probe* probe, int index, double* phi,
                                         double z[2], double w[2]);
DIMER_API int dimer_probe_degenerate_slices(const dimer_probe* probe);

typedef struct dimer_criterion {
  int id;
  const char* title;
  int passed;
  double seconds;
  double budget_seconds;
  const char* detail;
} dimer_criterion;

typedef void (*dimer_criterion_callback)(const dimer_criterion* result, void* user);

// Runs the acceptance criteria (all when id is 0) and reports each one.
DIMER_API dimer_status dimer_verify(int id, uint64_t seed, dimer_criterion_callback callback,
                                    void* user, int* passed, int* total);

#ifdef __cplusplus
}
#endif

#endif  // DIMER_DIMER_H_

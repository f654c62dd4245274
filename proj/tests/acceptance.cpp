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

// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>
#include <cstdlib>

#include "dimer/dimer.h"

namespace {

void Report(const dimer_criterion* c, void*) {
  std::printf("%s  %2d  %-48s %7.2f s / %3.0f s  %s\n", c->passed ? "PASS" : "FAIL", c->id, c->title,
              c->seconds, c->budget_seconds, c->detail);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t seed = DIMER_DEFAULT_SEED;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int passed = 0, total = 0;
  if (dimer_verify(0, seed, Report, nullptr, &passed, &total) != DIMER_OK) {
    std::fprintf(stderr, "error: %s\n", dimer_last_error());
    return 2;
  }
  std::printf("%d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}

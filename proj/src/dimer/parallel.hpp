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

#ifndef DIMER_PARALLEL_HPP_
#define DIMER_PARALLEL_HPP_

#include <functional>

namespace dimer {

// Upper bound on worker threads used by the core; 0 restores the default
// (hardware concurrency).
void SetMaxJobs(int jobs);
int MaxJobs();

// Runs body(0..count-1) on up to MaxJobs() threads. Callers write results
// into per-index slots and reduce in index order, so output never depends on
// scheduling. The first exception thrown by any body is rethrown.
void ParallelFor(int count, const std::function<void(int)>& body);

}  // namespace dimer

#endif  // DIMER_PARALLEL_HPP_

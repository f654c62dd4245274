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

#ifndef DIMER_IO_HPP_
#define DIMER_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimer/graph.hpp"
#include "dimer/pfaffian.hpp"
#include "dimer/surface_map.hpp"
#include "dimer/toric.hpp"

namespace dimer {

// Contents of a `dimer-graph v1` file. Optional sections are all-or-nothing.
//
//   dimer-graph v1
//   vertices N
//   edge <id> <u> <v> <weight>
//   rot <v> <darts>          darts as <id>+ (u to v) or <id>- (v to u)
//   color <v> black|white
//   wind <id> <hx> <hy>
//   dir <id> u-to-v|v-to-u
//
// Blank lines and lines starting with '#' are skipped.
struct GraphDocument {
  WeightedGraph graph;
  std::optional<std::vector<std::vector<int>>> rotation;  // darts by edge index
  std::optional<std::vector<Color>> colors;
  std::optional<std::vector<Winding>> windings;  // by edge index
  std::optional<Orientation> orientation;

  // Throws InvalidArgument when the rotation section is absent.
  CombinatorialMap Map() const;
  // Also needs colors and windings; uses the orientation if present.
  TorusDimerModel Model() const;
};

GraphDocument ParseDocument(std::string_view text);
std::string FormatDocument(const GraphDocument& doc);

GraphDocument DocumentOf(const WeightedGraph& graph);
GraphDocument DocumentOf(const CombinatorialMap& map);
GraphDocument DocumentOf(const TorusDimerModel& model);

// `dir <id> u-to-v|v-to-u` lines.
std::string FormatOrientation(const WeightedGraph& graph, const Orientation& k);
// `i j value` lines for the nonzero entries.
std::string FormatMatrixTriplets(const SkewMatrix<Rational>& a);

}  // namespace dimer

#endif  // DIMER_IO_HPP_

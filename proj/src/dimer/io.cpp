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

#include "dimer/io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

std::vector<std::string_view> Split(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& message) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_) + ": " + message);
  }

 private:
  int line_;
};

int ParseInt(std::string_view text, const LineError& fail) {
  int value = 0;
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) fail("expected an integer, got '" + std::string(text) + "'");
  return value;
}

struct PendingEdge {
  Edge edge;
  int line = 0;
};

}  // namespace

CombinatorialMap GraphDocument::Map() const {
  if (!rotation) throw Error(ErrorCode::kInvalidArgument, "document has no rotation system");
  return CombinatorialMap(graph, *rotation);
}

TorusDimerModel GraphDocument::Model() const {
  if (!colors || !windings) {
    throw Error(ErrorCode::kInvalidArgument, "torus model needs color and wind lines");
  }
  return TorusDimerModel(Map(), *colors, *windings, orientation);
}

GraphDocument ParseDocument(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') lines.push_back({number, line});
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
  }
  if (lines.empty() || Split(lines[0].second) != std::vector<std::string_view>{"dimer-graph", "v1"}) {
    throw Error(ErrorCode::kParse, "missing 'dimer-graph v1' header");
  }
  if (lines.size() < 2) throw Error(ErrorCode::kParse, "missing 'vertices' line");
  int vertex_count = 0;
  {
    auto tok = Split(lines[1].second);
    LineError fail(lines[1].first);
    if (tok.size() != 2 || tok[0] != "vertices") fail("expected 'vertices N'");
    vertex_count = ParseInt(tok[1], fail);
    if (vertex_count < 0) fail("negative vertex count");
  }

  std::vector<PendingEdge> edges;
  std::map<int, int> edge_line;
  struct Deferred {
    int line;
    std::vector<std::string_view> tok;
  };
  std::vector<Deferred> rots, colors, winds, dirs;
  for (size_t i = 2; i < lines.size(); ++i) {
    auto tok = Split(lines[i].second);
    LineError fail(lines[i].first);
    const std::string_view kind = tok[0];
    if (kind == "edge") {
      if (tok.size() != 5) fail("expected 'edge <id> <u> <v> <weight>'");
      Edge e;
      e.id = ParseInt(tok[1], fail);
      e.u = ParseInt(tok[2], fail);
      e.v = ParseInt(tok[3], fail);
      try {
        e.weight = ParseRational(tok[4]);
      } catch (const Error& err) {
        fail(err.what());
      }
      if (e.id < 0) fail("negative edge id");
      if (edge_line.count(e.id)) {
        fail("duplicate edge id " + std::to_string(e.id) + " (first on line " +
             std::to_string(edge_line[e.id]) + ")");
      }
      if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
        fail("endpoint out of range [0, " + std::to_string(vertex_count) + ")");
      }
      if (e.u == e.v) fail("loop at vertex " + std::to_string(e.u));
      if (sgn(e.weight) <= 0) fail("weight must be positive");
      edge_line[e.id] = lines[i].first;
      edges.push_back({e, lines[i].first});
    } else if (kind == "rot") {
      rots.push_back({lines[i].first, tok});
    } else if (kind == "color") {
      colors.push_back({lines[i].first, tok});
    } else if (kind == "wind") {
      winds.push_back({lines[i].first, tok});
    } else if (kind == "dir") {
      dirs.push_back({lines[i].first, tok});
    } else {
      fail("unknown record '" + std::string(kind) + "'");
    }
  }

  GraphDocument doc;
  std::vector<Edge> plain;
  for (const auto& p : edges) plain.push_back(p.edge);
  doc.graph = WeightedGraph(vertex_count, std::move(plain));
  const int edge_count = doc.graph.edge_count();

  auto edge_index = [&](std::string_view id_text, const LineError& fail) {
    int id = ParseInt(id_text, fail);
    if (!edge_line.count(id)) fail("unknown edge id " + std::to_string(id));
    return doc.graph.IndexOfId(id);
  };
  auto vertex_of = [&](std::string_view v_text, const LineError& fail) {
    int v = ParseInt(v_text, fail);
    if (v < 0 || v >= vertex_count) fail("vertex out of range");
    return v;
  };
  auto require_all = [](const std::vector<Deferred>& items, int expected, const char* what) {
    if (!items.empty() && static_cast<int>(items.size()) != expected) {
      throw Error(ErrorCode::kParse, std::string("expected ") + std::to_string(expected) + " " +
                                         what + " lines, found " + std::to_string(items.size()));
    }
  };

  if (!rots.empty()) {
    require_all(rots, vertex_count, "rot");
    std::vector<std::vector<int>> rotation(vertex_count);
    std::vector<char> seen(vertex_count, 0);
    for (const auto& r : rots) {
      LineError fail(r.line);
      if (r.tok.size() < 2) fail("expected 'rot <v> <darts>'");
      int v = vertex_of(r.tok[1], fail);
      if (seen[v]) fail("second rot line for vertex " + std::to_string(v));
      seen[v] = 1;
      for (size_t k = 2; k < r.tok.size(); ++k) {
        std::string_view dart = r.tok[k];
        bool reversed;
        if (dart.ends_with("+")) {
          reversed = false;
          dart.remove_suffix(1);
        } else if (dart.ends_with("-")) {
          reversed = true;
          dart.remove_suffix(1);
        } else if (dart.ends_with("−")) {
          reversed = true;
          dart.remove_suffix(3);
        } else {
          fail("dart '" + std::string(dart) + "' lacks a + or - suffix");
        }
        rotation[v].push_back(DartOf(edge_index(dart, fail), reversed));
      }
    }
    doc.rotation = std::move(rotation);
  }
  if (!colors.empty()) {
    require_all(colors, vertex_count, "color");
    std::vector<Color> c(vertex_count);
    std::vector<char> seen(vertex_count, 0);
    for (const auto& r : colors) {
      LineError fail(r.line);
      if (r.tok.size() != 3) fail("expected 'color <v> black|white'");
      int v = vertex_of(r.tok[1], fail);
      if (seen[v]) fail("second color line for vertex " + std::to_string(v));
      seen[v] = 1;
      if (r.tok[2] == "black") {
        c[v] = Color::kBlack;
      } else if (r.tok[2] == "white") {
        c[v] = Color::kWhite;
      } else {
        fail("color must be black or white");
      }
    }
    doc.colors = std::move(c);
  }
  if (!winds.empty()) {
    require_all(winds, edge_count, "wind");
    std::vector<Winding> w(edge_count);
    std::vector<char> seen(edge_count, 0);
    for (const auto& r : winds) {
      LineError fail(r.line);
      if (r.tok.size() != 4) fail("expected 'wind <id> <hx> <hy>'");
      int e = edge_index(r.tok[1], fail);
      if (seen[e]) fail("second wind line for edge " + std::string(r.tok[1]));
      seen[e] = 1;
      w[e] = {ParseInt(r.tok[2], fail), ParseInt(r.tok[3], fail)};
    }
    doc.windings = std::move(w);
  }
  if (!dirs.empty()) {
    require_all(dirs, edge_count, "dir");
    Orientation k(edge_count);
    std::vector<char> seen(edge_count, 0);
    for (const auto& r : dirs) {
      LineError fail(r.line);
      if (r.tok.size() != 3) fail("expected 'dir <id> u-to-v|v-to-u'");
      int e = edge_index(r.tok[1], fail);
      if (seen[e]) fail("second dir line for edge " + std::string(r.tok[1]));
      seen[e] = 1;
      if (r.tok[2] == "u-to-v") {
        k.set_reversed(e, false);
      } else if (r.tok[2] == "v-to-u") {
        k.set_reversed(e, true);
      } else {
        fail("direction must be u-to-v or v-to-u");
      }
    }
    doc.orientation = std::move(k);
  }
  return doc;
}

std::string FormatOrientation(const WeightedGraph& graph, const Orientation& k) {
  std::ostringstream out;
  for (int e = 0; e < graph.edge_count(); ++e) {
    out << "dir " << graph.edge(e).id << (k.reversed(e) ? " v-to-u\n" : " u-to-v\n");
  }
  return out.str();
}

std::string FormatDocument(const GraphDocument& doc) {
  const WeightedGraph& g = doc.graph;
  std::ostringstream out;
  out << "dimer-graph v1\n";
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id << ' ' << e.u << ' ' << e.v << ' ' << FormatRational(e.weight) << '\n';
  }
  if (doc.rotation) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "rot " << v;
      for (int d : (*doc.rotation)[v]) {
        out << ' ' << g.edge(EdgeOfDart(d)).id << ((d & 1) ? '-' : '+');
      }
      out << '\n';
    }
  }
  if (doc.colors) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "color " << v << ((*doc.colors)[v] == Color::kWhite ? " white\n" : " black\n");
    }
  }
  if (doc.windings) {
    for (int e = 0; e < g.edge_count(); ++e) {
      const Winding& w = (*doc.windings)[e];
      out << "wind " << g.edge(e).id << ' ' << w.hx << ' ' << w.hy << '\n';
    }
  }
  if (doc.orientation) out << FormatOrientation(g, *doc.orientation);
  return out.str();
}

GraphDocument DocumentOf(const WeightedGraph& graph) {
  GraphDocument doc;
  doc.graph = graph;
  return doc;
}

GraphDocument DocumentOf(const CombinatorialMap& map) {
  GraphDocument doc = DocumentOf(map.graph());
  doc.rotation = map.rotation();
  return doc;
}

GraphDocument DocumentOf(const TorusDimerModel& model) {
  GraphDocument doc = DocumentOf(model.map());
  doc.colors = model.colors();
  doc.windings = model.windings();
  doc.orientation = model.orientation();
  return doc;
}

std::string FormatMatrixTriplets(const SkewMatrix<Rational>& a) {
  std::ostringstream out;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (sgn(a.at(i, j)) != 0) out << i << ' ' << j << ' ' << FormatRational(a.at(i, j)) << '\n';
    }
  }
  return out.str();
}

}  // namespace dimer

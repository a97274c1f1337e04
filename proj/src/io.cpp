// Copyright 2026 The hansel-cover Authors
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

#include "hansel/io.hpp"

#include <fstream>

#include "hansel/error.hpp"

namespace hansel::io {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational string \"p/q\", got " + j.dump());
}

std::vector<Vertex> vertices_from(const json& j) {
  std::vector<Vertex> out;
  for (const auto& v : j) {
    require(v.is_number_unsigned(), "vertex index must be a nonnegative integer, got " + v.dump());
    out.push_back(v.get<Vertex>());
  }
  return out;
}

IntervalSet intervals_from(const json& j) {
  std::vector<Interval> ivs;
  for (const auto& iv : j) {
    require(iv.is_array() && iv.size() == 2, "interval must be a pair [lo, hi]");
    ivs.push_back({rational_from(iv[0]), rational_from(iv[1])});
  }
  return IntervalSet(std::move(ivs));
}

json intervals_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& iv : s.intervals()) out.push_back({rational_json(iv.lo), rational_json(iv.hi)});
  return out;
}

// Rethrows JSON library errors (missing keys, wrong types) as DomainError.
template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

json to_json(const Covering& c) {
  json parts = json::array();
  for (const auto& p : c.parts()) parts.push_back({{"A", p.a()}, {"B", p.b()}});
  return {{"n", c.n()}, {"parts", std::move(parts)}};
}

json to_json(const GraphonSeparatingSystem& s) {
  json elements = json::array();
  for (const auto& e : s.elements()) {
    json breaks = json::array();
    for (const auto& b : e.w.breaks()) breaks.push_back(rational_json(b));
    json values = json::array();
    for (std::size_t i = 0; i < e.w.cells(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < e.w.cells(); ++j) row.push_back(rational_json(e.w.value(i, j)));
      values.push_back(std::move(row));
    }
    elements.push_back({{"breaks", std::move(breaks)},
                        {"values", std::move(values)},
                        {"A", intervals_json(e.a)},
                        {"B", intervals_json(e.b)}});
  }
  return {{"elements", std::move(elements)}};
}

json to_json(const SquareFamily& f) {
  json squares = json::array();
  for (const auto& s : f.squares)
    squares.push_back({{"x0", rational_json(s.x0)}, {"y0", rational_json(s.y0)}, {"side", rational_json(s.side)}});
  json out{{"squares", std::move(squares)}};
  if (!f.construction.empty()) out["construction"] = f.construction;
  if (f.depth > 0) out["depth"] = f.depth;
  return out;
}

Multigraph multigraph_from_json(const json& j) {
  return guarded("multigraph JSON", [&] {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 3, "edge must be [u, v, mult]");
      const Edge edge{e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Multiplicity>()};
      require(edge.u < edge.v, "edge [" + std::to_string(edge.u) + ", " + std::to_string(edge.v) + "] needs u < v");
      require(edge.mult >= 1, "edge multiplicity must be >= 1");
      edges.push_back(edge);
    }
    return Multigraph::from_edges(n, edges);
  });
}

Covering covering_from_json(const json& j) {
  return guarded("covering JSON", [&] {
    if (!j.contains("parts") && j.contains("witness")) {
      require(!j.at("witness").is_null(), "result file has no witness covering");
      return covering_from_json(j.at("witness"));
    }
    Covering c(j.at("n").get<std::size_t>());
    for (const auto& p : j.at("parts")) c.push_back(BipartitePart(vertices_from(p.at("A")), vertices_from(p.at("B"))));
    return c;
  });
}

GraphonSeparatingSystem system_from_json(const json& j) {
  return guarded("system JSON", [&] {
    GraphonSeparatingSystem s;
    for (const auto& e : j.at("elements")) {
      std::vector<Rational> breaks;
      for (const auto& b : e.at("breaks")) breaks.push_back(rational_from(b));
      std::vector<Rational> values;
      const auto& rows = e.at("values");
      require(breaks.size() >= 2 && rows.size() == breaks.size() - 1, "values must have one row per cell");
      for (const auto& row : rows) {
        require(row.size() == rows.size(), "values must be a square matrix");
        for (const auto& v : row) values.push_back(rational_from(v));
      }
      s.push_back({StepGraphon(std::move(breaks), std::move(values)), intervals_from(e.at("A")),
                   intervals_from(e.at("B"))});
    }
    return s;
  });
}

SquareFamily squares_from_json(const json& j) {
  return guarded("squares JSON", [&] {
    SquareFamily f;
    for (const auto& s : j.at("squares")) {
      Square sq{rational_from(s.at("x0")), rational_from(s.at("y0")), rational_from(s.at("side"))};
      require(sq.inside_triangle(), "square is not contained in the triangle T");
      f.squares.push_back(std::move(sq));
    }
    f.construction = j.value("construction", std::string());
    f.depth = j.value("depth", 0U);
    return f;
  });
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace hansel::io

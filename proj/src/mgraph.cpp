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

#include "hansel/mgraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hansel/error.hpp"
#include "hansel/kernels.hpp"

namespace hansel {

// ---------------------------------------------------------------- Multigraph

Multigraph::Multigraph(std::size_t n) : n_(n) {
  require(n >= 1, "multigraph needs at least one vertex");
  mult_.assign(n * n, 0);
}

Multigraph Multigraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Multigraph g(n);
  std::vector<bool> seen(n * n, false);
  for (const Edge& e : edges) {
    require(e.u < n && e.v < n, "edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v) + " with n = " + std::to_string(n));
    require(e.u != e.v, "self-loop at vertex " + std::to_string(e.u));
    const std::size_t key = std::min(e.u, e.v) * n + std::max(e.u, e.v);
    require(!seen[key], "duplicate pair " + std::to_string(e.u) + "-" + std::to_string(e.v));
    seen[key] = true;
    g.set(e.u, e.v, e.mult);
  }
  return g;
}

void Multigraph::set(Vertex u, Vertex v, Multiplicity m) noexcept {
  edge_total_ -= mult_[u * n_ + v];
  edge_total_ += m;
  mult_[u * n_ + v] = m;
  mult_[v * n_ + u] = m;
}

Multiplicity Multigraph::max_mult() const noexcept {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

std::size_t Multigraph::degree(Vertex v) const noexcept {
  const auto r = row(v);
  return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](Multiplicity m) { return m > 0; }));
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (const Multiplicity m = mult(u, v); m > 0) out.push_back({u, v, m});
  return out;
}

// ------------------------------------------------------------- BipartitePart

BipartitePart::BipartitePart(std::vector<Vertex> a, std::vector<Vertex> b)
    : a_(std::move(a)), b_(std::move(b)) {
  require(!a_.empty() && !b_.empty(), "bipartite part with an empty side");
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  require(std::adjacent_find(a_.begin(), a_.end()) == a_.end() &&
              std::adjacent_find(b_.begin(), b_.end()) == b_.end(),
          "repeated vertex inside a side of a bipartite part");
  std::vector<Vertex> common;
  std::set_intersection(a_.begin(), a_.end(), b_.begin(), b_.end(), std::back_inserter(common));
  require(common.empty(), "sides of a bipartite part overlap at vertex " +
                              (common.empty() ? std::string() : std::to_string(common.front())));
}

Vertex BipartitePart::max_vertex() const noexcept { return std::max(a_.back(), b_.back()); }

bool BipartitePart::splits(Vertex u, Vertex v) const {
  const auto in = [](const std::vector<Vertex>& side, Vertex x) {
    return std::binary_search(side.begin(), side.end(), x);
  };
  return (in(a_, u) && in(b_, v)) || (in(b_, u) && in(a_, v));
}

// ------------------------------------------------------------------ Covering

Covering::Covering(std::size_t n, std::vector<BipartitePart> parts) : n_(n) {
  require(n >= 1, "covering needs at least one vertex");
  parts_.reserve(parts.size());
  for (auto& p : parts) push_back(std::move(p));
}

void Covering::push_back(BipartitePart part) {
  require(part.max_vertex() < n_, "part vertex " + std::to_string(part.max_vertex()) +
                                      " out of range for n = " + std::to_string(n_));
  parts_.push_back(std::move(part));
}

std::uint64_t Covering::capacity() const noexcept {
  std::uint64_t total = 0;
  for (const auto& p : parts_) total += p.size();
  return total;
}

// --------------------------------------------------------------- LabelMatrix

LabelMatrix::LabelMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, Label::kStar) {}

std::uint64_t LabelMatrix::weight() const noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(cells_.begin(), cells_.end(), [](Label l) { return l != Label::kStar; }));
}

// ---------------------------------------------------------------- operations

Multigraph complete_multigraph(std::size_t n, Multiplicity lambda) {
  require(n >= 2, "complete multigraph needs n >= 2");
  require(lambda >= 1, "complete multigraph needs lambda >= 1");
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set(u, v, lambda);
  return g;
}

Multigraph subtract(const Multigraph& g, const BipartitePart& h) {
  require(h.max_vertex() < g.n(), "part vertex out of range for the multigraph");
  Multigraph out = g;
  for (Vertex a : h.a())
    for (Vertex b : h.b())
      if (const Multiplicity m = out.mult(a, b); m > 0) out.set(a, b, m - 1);
  return out;
}

double exp_degree(const Multigraph& g, double alpha, Vertex v) {
  require(alpha > 1.0, "alpha must exceed 1");
  require(v < g.n(), "vertex out of range");
  double sum = 0.0;
  for (Multiplicity m : g.row(v))
    if (m > 0) sum += std::pow(alpha, static_cast<double>(m));
  return sum;
}

double max_exp_degree(const Multigraph& g, double alpha) {
  require(alpha > 1.0, "alpha must exceed 1");
  const auto degrees = kernels::exp_degrees(g, alpha);
  return degrees.empty() ? 0.0 : *std::max_element(degrees.begin(), degrees.end());
}

CoverReport verify_covering(const Multigraph& g, const Covering& c) {
  require(g.n() == c.n(), "covering has n = " + std::to_string(c.n()) +
                              " but the multigraph has n = " + std::to_string(g.n()));
  const auto counts = kernels::split_counts(c);
  CoverReport report;
  report.capacity = c.capacity();
  report.parts = c.parts().size();
  const std::size_t n = g.n();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Multiplicity need = g.mult(u, v);
      const Multiplicity have = counts[u * n + v];
      if (have < need) report.deficits.push_back({u, v, need, have});
    }
  report.valid = report.deficits.empty();
  return report;
}

LabelMatrix labels_from_covering(const Covering& c) {
  LabelMatrix m(c.n(), c.parts().size());
  for (std::size_t j = 0; j < c.parts().size(); ++j) {
    for (Vertex v : c.parts()[j].a()) m.set(v, j, Label::kLeft);
    for (Vertex v : c.parts()[j].b()) m.set(v, j, Label::kRight);
  }
  return m;
}

Covering covering_from_labels(const LabelMatrix& m) {
  require(m.rows() >= 1, "label matrix needs at least one row");
  Covering c(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<Vertex> a, b;
    for (std::size_t v = 0; v < m.rows(); ++v) {
      if (m.at(v, j) == Label::kLeft) a.push_back(static_cast<Vertex>(v));
      if (m.at(v, j) == Label::kRight) b.push_back(static_cast<Vertex>(v));
    }
    require(!a.empty() && !b.empty(), "label column " + std::to_string(j) + " has an empty side");
    c.push_back(BipartitePart(std::move(a), std::move(b)));
  }
  return c;
}

}  // namespace hansel

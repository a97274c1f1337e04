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

// Multigraphs, complete bipartite parts, and coverings.
//
// A covering of a multigraph G is a list of complete bipartite graphs
// (A_i, B_i) such that every pair uv is split by at least mu(uv) of them.
// Its capacity is the total number of vertices used, sum |A_i| + |B_i|.

#ifndef HANSEL_MGRAPH_HPP
#define HANSEL_MGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hansel {

using Vertex = std::uint32_t;
using Multiplicity = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  Multiplicity mult;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class BipartitePart;

/// Loopless multigraph on vertices 0..n-1 with dense symmetric storage.
class Multigraph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Multigraph(std::size_t n);

  /// Rejects self-loops, out-of-range endpoints and repeated pairs.
  /// Entries with mult == 0 are accepted and ignored.
  static Multigraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return n_; }
  Multiplicity mult(Vertex u, Vertex v) const noexcept { return mult_[u * n_ + v]; }
  std::span<const Multiplicity> row(Vertex v) const noexcept {
    return {mult_.data() + static_cast<std::size_t>(v) * n_, n_};
  }

  /// Sum of multiplicities, e(G) counted with multiplicity.
  std::uint64_t edge_total() const noexcept { return edge_total_; }
  Multiplicity max_mult() const noexcept;
  bool has_edges() const noexcept { return edge_total_ > 0; }
  std::size_t degree(Vertex v) const noexcept;

  /// Pairs with positive multiplicity, u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  friend Multigraph complete_multigraph(std::size_t, Multiplicity);
  friend Multigraph subtract(const Multigraph&, const BipartitePart&);

  void set(Vertex u, Vertex v, Multiplicity m) noexcept;

  std::size_t n_;
  std::vector<Multiplicity> mult_;
  std::uint64_t edge_total_ = 0;
};

/// Complete bipartite graph between two disjoint nonempty vertex sets.
/// Both sides are kept sorted.
class BipartitePart {
 public:
  BipartitePart(std::vector<Vertex> a, std::vector<Vertex> b);

  const std::vector<Vertex>& a() const noexcept { return a_; }
  const std::vector<Vertex>& b() const noexcept { return b_; }
  std::size_t size() const noexcept { return a_.size() + b_.size(); }
  Vertex max_vertex() const noexcept;
  /// True when {u, v} is an edge of this part.
  bool splits(Vertex u, Vertex v) const;

  friend bool operator==(const BipartitePart&, const BipartitePart&) = default;

 private:
  std::vector<Vertex> a_;
  std::vector<Vertex> b_;
};

class Covering {
 public:
  explicit Covering(std::size_t n, std::vector<BipartitePart> parts = {});

  std::size_t n() const noexcept { return n_; }
  const std::vector<BipartitePart>& parts() const noexcept { return parts_; }
  std::uint64_t capacity() const noexcept;

  void push_back(BipartitePart part);

  friend bool operator==(const Covering&, const Covering&) = default;

 private:
  std::size_t n_;
  std::vector<BipartitePart> parts_;
};

enum class Label : std::uint8_t { kLeft, kRight, kStar };

/// n x m matrix; column j encodes part j (kLeft on A, kRight on B).
class LabelMatrix {
 public:
  LabelMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Label at(std::size_t row, std::size_t col) const noexcept { return cells_[row * cols_ + col]; }
  void set(std::size_t row, std::size_t col, Label label) noexcept { cells_[row * cols_ + col] = label; }
  /// Number of non-star entries.
  std::uint64_t weight() const noexcept;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Label> cells_;
};

struct Deficit {
  Vertex u;
  Vertex v;
  Multiplicity required;
  Multiplicity achieved;

  friend bool operator==(const Deficit&, const Deficit&) = default;
};

struct CoverReport {
  bool valid = false;
  std::vector<Deficit> deficits;
  std::uint64_t capacity = 0;
  std::size_t parts = 0;
};

Multigraph complete_multigraph(std::size_t n, Multiplicity lambda);

/// mu'(uv) = max(mu(uv) - 1, 0) on A x B; every other pair unchanged.
Multigraph subtract(const Multigraph& g, const BipartitePart& h);

/// sum over neighbours u of alpha^mu(uv); pairs with mu = 0 contribute nothing.
double exp_degree(const Multigraph& g, double alpha, Vertex v);
double max_exp_degree(const Multigraph& g, double alpha);

CoverReport verify_covering(const Multigraph& g, const Covering& c);

LabelMatrix labels_from_covering(const Covering& c);
Covering covering_from_labels(const LabelMatrix& m);

}  // namespace hansel

#endif  // HANSEL_MGRAPH_HPP

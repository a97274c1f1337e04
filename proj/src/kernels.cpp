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

#include "hansel/kernels.hpp"

#include <cmath>
#include <cstddef>

#include "hansel/error.hpp"

namespace hansel::kernels {
namespace {

// Table alpha^0 .. alpha^max so the inner loops avoid pow().
std::vector<double> power_table(double alpha, Multiplicity max_mult) {
  std::vector<double> table(static_cast<std::size_t>(max_mult) + 1, 0.0);
  for (std::size_t m = 1; m < table.size(); ++m) table[m] = std::pow(alpha, static_cast<double>(m));
  return table;
}

inline void fill_weight_row(const Multigraph& g, const std::vector<double>& table, std::size_t u,
                            double* out) {
  const auto row = g.row(static_cast<Vertex>(u));
  for (std::size_t v = 0; v < row.size(); ++v) out[v] = table[row[v]];
}

inline void side_sums_row(std::span<const double> weights, std::span<const Side> side, std::size_t u,
                          double& cross, double& same) {
  const std::size_t n = side.size();
  cross = 0.0;
  same = 0.0;
  if (side[u] == kNone) return;
  const double* w = weights.data() + u * n;
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == kNone || w[v] == 0.0) continue;
    if (side[v] == side[u])
      same += w[v];
    else
      cross += w[v];
  }
}

void check_side_spans(std::span<const double> weights, std::span<const Side> side,
                      std::span<double> cross, std::span<double> same) {
  const std::size_t n = side.size();
  require(weights.size() == n * n && cross.size() == n && same.size() == n,
          "side_sums: inconsistent span sizes");
}

// Row u of the split-count matrix: for every part containing u, count the
// vertices on the opposite side.
inline void split_row(const Covering& c, const LabelMatrix& labels, std::size_t u, std::uint32_t* out) {
  for (std::size_t j = 0; j < labels.cols(); ++j) {
    const Label l = labels.at(u, j);
    if (l == Label::kStar) continue;
    const auto& part = c.parts()[j];
    for (Vertex v : l == Label::kLeft ? part.b() : part.a()) ++out[v];
  }
}

}  // namespace

std::vector<double> exp_weights(const Multigraph& g, double alpha) {
  const std::size_t n = g.n();
  const auto table = power_table(alpha, g.max_mult());
  std::vector<double> w(n * n);
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < rows; ++u) fill_weight_row(g, table, static_cast<std::size_t>(u), w.data() + u * n);
  return w;
}

std::vector<double> exp_weights_serial(const Multigraph& g, double alpha) {
  const std::size_t n = g.n();
  const auto table = power_table(alpha, g.max_mult());
  std::vector<double> w(n * n);
  for (std::size_t u = 0; u < n; ++u) fill_weight_row(g, table, u, w.data() + u * n);
  return w;
}

std::vector<double> exp_degrees(const Multigraph& g, double alpha) {
  const std::size_t n = g.n();
  const auto table = power_table(alpha, g.max_mult());
  std::vector<double> d(n, 0.0);
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < rows; ++u) {
    double sum = 0.0;
    for (Multiplicity m : g.row(static_cast<Vertex>(u))) sum += table[m];
    d[static_cast<std::size_t>(u)] = sum;
  }
  return d;
}

std::vector<double> exp_degrees_serial(const Multigraph& g, double alpha) {
  const std::size_t n = g.n();
  const auto table = power_table(alpha, g.max_mult());
  std::vector<double> d(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    double sum = 0.0;
    for (Multiplicity m : g.row(static_cast<Vertex>(u))) sum += table[m];
    d[u] = sum;
  }
  return d;
}

void side_sums(std::span<const double> weights, std::span<const Side> side, std::span<double> cross,
               std::span<double> same) {
  check_side_spans(weights, side, cross, same);
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(side.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < rows; ++u) {
    const auto i = static_cast<std::size_t>(u);
    side_sums_row(weights, side, i, cross[i], same[i]);
  }
}

void side_sums_serial(std::span<const double> weights, std::span<const Side> side, std::span<double> cross,
                      std::span<double> same) {
  check_side_spans(weights, side, cross, same);
  for (std::size_t u = 0; u < side.size(); ++u) side_sums_row(weights, side, u, cross[u], same[u]);
}

std::vector<std::uint32_t> split_counts(const Covering& c) {
  const std::size_t n = c.n();
  const LabelMatrix labels = labels_from_covering(c);
  std::vector<std::uint32_t> counts(n * n, 0);
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t u = 0; u < rows; ++u) split_row(c, labels, static_cast<std::size_t>(u), counts.data() + u * n);
  return counts;
}

std::vector<std::uint32_t> split_counts_serial(const Covering& c) {
  const std::size_t n = c.n();
  std::vector<std::uint32_t> counts(n * n, 0);
  for (const auto& part : c.parts())
    for (Vertex a : part.a())
      for (Vertex b : part.b()) {
        ++counts[a * n + b];
        ++counts[b * n + a];
      }
  return counts;
}

}  // namespace hansel::kernels

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

#include "hansel/peel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hansel/error.hpp"
#include "hansel/kernels.hpp"

namespace hansel {

using kernels::Side;

Bipartition exp_maxcut(const Multigraph& g, double alpha, std::uint64_t seed) {
  require(alpha > 1.0, "alpha must exceed 1");
  require(g.has_edges(), "max-cut needs a multigraph with at least one edge");

  const std::size_t n = g.n();
  const auto weights = kernels::exp_weights(g, alpha);

  std::vector<Vertex> active;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 0) active.push_back(v);

  // Seeded balanced start.
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order = active;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Side> side(n, kernels::kNone);
  for (std::size_t i = 0; i < order.size(); ++i) side[order[i]] = i < order.size() / 2 ? kernels::kSideA : kernels::kSideB;

  std::vector<double> cross(n), same(n);
  kernels::side_sums(weights, side, cross, same);
  const auto cut_of = [&] {
    double total = 0.0;
    for (Vertex v : active)
      if (side[v] == kernels::kSideA) total += cross[v];
    return total;
  };
  double cut = cut_of();

  // Best-improvement moves; ties go to the lowest vertex index.
  bool refreshed = false;
  for (;;) {
    const double threshold = kMoveTolerance * cut;
    Vertex best = 0;
    double best_gain = threshold;
    bool found = false;
    for (Vertex v : active) {
      const double gain = same[v] - cross[v];
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
        found = true;
      }
    }
    if (!found) {
      if (refreshed) break;
      // Incremental updates drift; confirm the optimum on fresh sums.
      kernels::side_sums(weights, side, cross, same);
      cut = cut_of();
      refreshed = true;
      continue;
    }
    refreshed = false;

    const Side from = side[best];
    const Side to = from == kernels::kSideA ? kernels::kSideB : kernels::kSideA;
    side[best] = to;
    const double* w = weights.data() + static_cast<std::size_t>(best) * n;
    for (Vertex u : active) {
      if (u == best || w[u] == 0.0) continue;
      if (side[u] == from) {
        same[u] -= w[u];
        cross[u] += w[u];
      } else {
        cross[u] -= w[u];
        same[u] += w[u];
      }
    }
    std::swap(same[best], cross[best]);
    cut += best_gain;
  }

  Bipartition result;
  for (Vertex v : active) (side[v] == kernels::kSideA ? result.a : result.b).push_back(v);
  result.cut_value = cut_of();
  return result;
}

PeelResult peel_once(const Multigraph& g, double alpha, std::uint64_t seed) {
  const Bipartition cut = exp_maxcut(g, alpha, seed);

  // Keep only vertices incident to at least one cut edge.
  const auto touches = [&g](Vertex v, const std::vector<Vertex>& other) {
    return std::any_of(other.begin(), other.end(), [&](Vertex u) { return g.mult(v, u) > 0; });
  };
  std::vector<Vertex> a, b;
  std::copy_if(cut.a.begin(), cut.a.end(), std::back_inserter(a), [&](Vertex v) { return touches(v, cut.b); });
  std::copy_if(cut.b.begin(), cut.b.end(), std::back_inserter(b), [&](Vertex v) { return touches(v, cut.a); });
  if (a.empty() || b.empty()) throw std::logic_error("locally optimal cut has no cut edge");
  if (b.front() < a.front()) std::swap(a, b);

  BipartitePart part(std::move(a), std::move(b));
  Multigraph residual = subtract(g, part);
  return {std::move(part), std::move(residual)};
}

BuildResult build_covering(const Multigraph& g, double alpha, std::uint64_t seed) {
  require(alpha > 1.0, "alpha must exceed 1");
  BuildResult result{Covering(g.n()), {}};
  Multigraph current = g;
  double before = max_exp_degree(current, alpha);
  for (std::size_t i = 0; current.has_edges(); ++i) {
    PeelResult step = peel_once(current, alpha, seed + i);
    const double after = max_exp_degree(step.residual, alpha);
    result.trace.push_back({i, before, step.part.size(), after});
    result.covering.push_back(std::move(step.part));
    current = std::move(step.residual);
    before = after;
  }
  return result;
}

double choose_alpha(std::size_t n, Multiplicity lambda, const AlphaStrategy& strategy) {
  require(n >= 3, "choose_alpha needs n >= 3");
  require(lambda >= 1, "choose_alpha needs lambda >= 1");
  if (strategy.fixed) {
    require(*strategy.fixed > 1.0, "fixed alpha must exceed 1");
    return *strategy.fixed;
  }
  const double log_n = std::log2(static_cast<double>(n));
  const double log_n1 = std::log2(static_cast<double>(n - 1));
  const double lam = static_cast<double>(lambda);
  if (lam <= std::sqrt(log_n)) return log_n;
  if (lam < 4.0 * log_n1) return std::max(lam, 1.01);
  const double eps = std::min(0.5, std::sqrt(log_n1 / lam));
  return 1.0 / (1.0 - eps);
}

void write_trace_csv(std::ostream& out, const PeelTrace& trace) {
  out << "iteration,max_exp_degree_before,part_size,max_exp_degree_after\n";
  const auto old_precision = out.precision(17);
  for (const auto& s : trace)
    out << s.iteration << ',' << s.max_exp_degree_before << ',' << s.part_size << ','
        << s.max_exp_degree_after << '\n';
  out.precision(old_precision);
}

PeelTrace read_trace_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) &&
              line == "iteration,max_exp_degree_before,part_size,max_exp_degree_after",
          "trace CSV: missing or unexpected header");
  PeelTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    PeelStep s;
    char c1 = 0, c2 = 0, c3 = 0;
    row >> s.iteration >> c1 >> s.max_exp_degree_before >> c2 >> s.part_size >> c3 >> s.max_exp_degree_after;
    require(row && c1 == ',' && c2 == ',' && c3 == ',', "trace CSV: malformed row '" + line + "'");
    trace.push_back(s);
  }
  return trace;
}

}  // namespace hansel

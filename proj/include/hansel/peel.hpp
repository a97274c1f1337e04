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

// Covering construction by repeated exponential-degree max-cut peeling.
//
// Each round takes a cut (A, B) of the residual multigraph that is locally
// optimal for the weight alpha^mu(e), emits the complete bipartite part on
// the vertices incident to cut edges, and subtracts it. Local optimality
// gives, for every vertex v,
//
//   d^ex_{G-H}(alpha, v) <= (1 + 1/alpha) / 2 * d^ex_G(alpha, v),
//
// so the maximum exponential degree shrinks geometrically and the number
// of rounds is at most log2(Delta^ex) / (1 - log2(1 + 1/alpha)).

#ifndef HANSEL_PEEL_HPP
#define HANSEL_PEEL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "hansel/mgraph.hpp"

namespace hansel {

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  /// sum over cut pairs of alpha^mu(e).
  double cut_value = 0.0;
};

struct PeelStep {
  std::size_t iteration = 0;
  double max_exp_degree_before = 0.0;
  std::size_t part_size = 0;
  double max_exp_degree_after = 0.0;
};

using PeelTrace = std::vector<PeelStep>;

/// Relative gain a single-vertex move must exceed to be accepted.
inline constexpr double kMoveTolerance = 1e-12;

/// Locally optimal cut of the non-isolated vertices, started from a
/// seeded random balanced split and improved by best-improvement moves.
Bipartition exp_maxcut(const Multigraph& g, double alpha, std::uint64_t seed);

struct PeelResult {
  BipartitePart part;
  Multigraph residual;
};

PeelResult peel_once(const Multigraph& g, double alpha, std::uint64_t seed);

struct BuildResult {
  Covering covering;
  PeelTrace trace;
};

/// Peels until the residual graph is edgeless. Round i uses seed + i.
BuildResult build_covering(const Multigraph& g, double alpha, std::uint64_t seed);

/// How alpha is picked for K_n^lambda.
struct AlphaStrategy {
  /// Empty means AUTO.
  std::optional<double> fixed;

  static AlphaStrategy automatic() { return {}; }
  static AlphaStrategy fixed_value(double alpha) { return {alpha}; }
};

/// AUTO picks one of three regimes:
///   lambda <= sqrt(log2 n)                  -> alpha = log2 n
///   sqrt(log2 n) < lambda < 4 log2(n - 1)   -> alpha = max(lambda, 1.01)
///   lambda >= 4 log2(n - 1)                 -> alpha = 1 / (1 - eps),
///                                              eps = min(1/2, sqrt(log2(n-1) / lambda))
double choose_alpha(std::size_t n, Multiplicity lambda, const AlphaStrategy& strategy);

void write_trace_csv(std::ostream& out, const PeelTrace& trace);
PeelTrace read_trace_csv(std::istream& in);

}  // namespace hansel

#endif  // HANSEL_PEEL_HPP

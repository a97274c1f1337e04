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

// Step graphons and bipartite separating systems over exact rationals.
//
// Every quantity that is an integral of a step function (fullness,
// capacity, degree functions) is computed exactly; floating point only
// enters when a logarithm is taken.

#ifndef HANSEL_GRAPHON_HPP
#define HANSEL_GRAPHON_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hansel/bounds.hpp"
#include "hansel/mgraph.hpp"
#include "hansel/rational.hpp"

namespace hansel {

struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint half-open intervals [lo, hi) inside [0, 1],
/// stored sorted with touching intervals merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Empty intervals are dropped; overlapping ones are rejected.
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  Rational measure() const;
  bool contains(const Rational& x) const;
  /// Sorted endpoints of all intervals.
  std::vector<Rational> endpoints() const;

  friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Symmetric function on [0,1]^2, constant on the cells
/// [x_i, x_{i+1}) x [x_j, x_{j+1}) of a rational grid 0 = x_0 < ... < x_k = 1.
class StepGraphon {
 public:
  /// values is row-major k x k; must be symmetric with entries in [0, 1].
  StepGraphon(std::vector<Rational> breaks, std::vector<Rational> values);

  static StepGraphon zero();

  std::size_t cells() const noexcept { return breaks_.size() - 1; }
  const std::vector<Rational>& breaks() const noexcept { return breaks_; }
  const Rational& value(std::size_t i, std::size_t j) const { return values_[i * cells() + j]; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  Rational width(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }

  /// Max cell value over cells of positive area.
  Rational sup_norm() const;
  Rational integral() const;
  /// Index i with breaks[i] <= x < breaks[i+1] (the last cell for x = 1).
  std::size_t cell_of(const Rational& x) const;

  friend bool operator==(const StepGraphon&, const StepGraphon&) = default;

 private:
  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

/// Piecewise-constant function on [0, 1].
struct StepFunction1D {
  std::vector<Rational> breaks;
  std::vector<Rational> values;

  Rational integral() const;
  Rational value_at(const Rational& x) const;
};

/// W together with its bipartition witness (A, B).
struct SystemElement {
  StepGraphon w;
  IntervalSet a;
  IntervalSet b;
};

/// Finite list of (A, B)-bipartite step graphons.
class GraphonSeparatingSystem {
 public:
  GraphonSeparatingSystem() = default;
  /// Validates every element; see push_back.
  explicit GraphonSeparatingSystem(std::vector<SystemElement> elements);

  /// Rejects elements where A and B overlap in positive measure or where
  /// W is positive somewhere outside (A x B) u (B x A).
  void push_back(SystemElement element);

  const std::vector<SystemElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

 private:
  std::vector<SystemElement> elements_;
};

/// Indicator step graphon of a simple graph on n vertices (cells i/n).
StepGraphon graphon_from_graph(const Multigraph& h);

/// Element i is (1/lambda) times the indicator of A_i x B_i u B_i x A_i on
/// the i/n grid, with A = union of [v/n, (v+1)/n) over v in A_i.
GraphonSeparatingSystem system_from_covering(const Covering& c, Multiplicity lambda);

/// min{1, sum_W W} on the common refinement of all element grids.
StepGraphon w_sigma(const GraphonSeparatingSystem& s);
/// Integral of w_sigma.
Rational fullness(const GraphonSeparatingSystem& s);

/// N(x) = number of elements with x in A u B.
StepFunction1D n_function(const GraphonSeparatingSystem& s);
/// sum of m(A u B) over elements.
Rational capacity_by_measure(const GraphonSeparatingSystem& s);
/// Integral of n_function.
Rational capacity_by_integral(const GraphonSeparatingSystem& s);
/// Both routes; throws std::logic_error if they disagree.
Rational capacity(const GraphonSeparatingSystem& s);

/// d_W(x) = integral of W(x, y) dy.
StepFunction1D degree_function(const StepGraphon& w);

/// floor(1 / (2 delta)) and 1/2 - floor(1 / (2 delta)) delta.
struct QuantizationConstants {
  BigInt ell;
  Rational tau;
};
QuantizationConstants quantization(const Rational& delta);

/// log2(1/eps) + integral of log2(sum_{j=0}^{ell} (1/2 + tau - delta j) C(N(x), j)) dx,
/// with eps = 1 - fullness. Requires every element bounded by delta in (0, 1]
/// and eps > 0.
double lemma41_rhs(const GraphonSeparatingSystem& s, const Rational& delta);

/// One inequality "capacity >= bound" together with its slack.
struct InequalityCheck {
  double bound = 0.0;
  double slack = 0.0;
  bool holds = true;
};

struct GraphonBoundsReport {
  Rational capacity;
  Rational fullness;
  Rational epsilon;
  Rational delta;
  Rational sup_norm;
  /// floor(1/(2 delta)) as used by the integral bound, and
  /// floor((1 - delta)/(2 delta)) as used by the weighted theorem.
  BigInt ell_integral;
  BigInt ell_weighted;
  /// capacity >= log2(1/eps).
  InequalityCheck unweighted;
  /// capacity >= max{2(1-eps)/delta, log(1/eps) + floor((1-delta)/(2 delta)) log(delta log(1/eps)) - 1/delta - 1};
  /// only applicable for eps < 1.
  std::optional<TwoBranchBound> weighted_branches;
  std::optional<InequalityCheck> weighted;
  InequalityCheck integral;

  bool any_violation() const noexcept;
};

/// Tolerance on the floating-point side of each inequality.
inline constexpr double kBoundTolerance = 1e-9;

GraphonBoundsReport check_graphon_bounds(const GraphonSeparatingSystem& s, const Rational& delta);

}  // namespace hansel

#endif  // HANSEL_GRAPHON_HPP

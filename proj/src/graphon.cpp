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

#include "hansel/graphon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hansel/error.hpp"

namespace hansel {
namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

std::vector<Rational> sorted_unique(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// For each cell of `fine`, the index of the cell of `coarse` containing it.
// `fine` must refine `coarse`.
std::vector<std::size_t> cell_map(const std::vector<Rational>& fine, const std::vector<Rational>& coarse) {
  std::vector<std::size_t> map(fine.size() - 1);
  std::size_t j = 0;
  for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
    while (j + 2 < coarse.size() && coarse[j + 1] <= fine[i]) ++j;
    map[i] = j;
  }
  return map;
}

// Membership of each cell [grid_i, grid_{i+1}) in s; grid must include
// every endpoint of s.
std::vector<bool> cell_membership(const IntervalSet& s, const std::vector<Rational>& grid) {
  std::vector<bool> in(grid.size() - 1, false);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) in[i] = s.contains(grid[i]);
  return in;
}

std::vector<Rational> grid_with(const std::vector<Rational>& base, const IntervalSet& a, const IntervalSet& b) {
  std::vector<Rational> pts = base;
  for (const auto& x : a.endpoints()) pts.push_back(x);
  for (const auto& x : b.endpoints()) pts.push_back(x);
  return sorted_unique(std::move(pts));
}

// value * 1_{(A x B) u (B x A)} on the coarsest grid that resolves A and B.
StepGraphon bipartite_step(const IntervalSet& a, const IntervalSet& b, const Rational& value) {
  const auto grid = grid_with({kZero, kOne}, a, b);
  const auto in_a = cell_membership(a, grid);
  const auto in_b = cell_membership(b, grid);
  const std::size_t k = grid.size() - 1;
  std::vector<Rational> values(k * k, kZero);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((in_a[i] && in_b[j]) || (in_b[i] && in_a[j])) values[i * k + j] = value;
  return StepGraphon(grid, std::move(values));
}

BigInt floor_div(const Rational& x) {
  return boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
}

void require_delta(const Rational& delta) {
  require(delta > 0 && delta <= 1, "delta must lie in (0, 1], got " + format_rational(delta));
}

void require_bounded(const GraphonSeparatingSystem& s, const Rational& delta) {
  for (std::size_t i = 0; i < s.size(); ++i)
    require(s.elements()[i].w.sup_norm() <= delta,
            "element " + std::to_string(i) + " has sup norm " + format_rational(s.elements()[i].w.sup_norm()) +
                " above delta = " + format_rational(delta));
}

InequalityCheck check(double capacity, double bound) {
  const double slack = capacity - bound;
  return {bound, slack, slack >= -kBoundTolerance};
}

}  // namespace

// --------------------------------------------------------------- IntervalSet

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  std::vector<Interval> kept;
  for (auto& iv : intervals) {
    require(iv.lo >= 0 && iv.hi <= 1, "interval [" + format_rational(iv.lo) + ", " + format_rational(iv.hi) +
                                          ") leaves [0, 1]");
    require(iv.lo <= iv.hi, "interval with lo > hi");
    if (iv.lo < iv.hi) kept.push_back(std::move(iv));
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& iv : kept) {
    if (!intervals_.empty()) {
      require(intervals_.back().hi <= iv.lo, "overlapping intervals in an interval set");
      if (intervals_.back().hi == iv.lo) {
        intervals_.back().hi = iv.hi;
        continue;
      }
    }
    intervals_.push_back(std::move(iv));
  }
}

Rational IntervalSet::measure() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& value, const Interval& iv) { return value < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x < it->hi;
}

std::vector<Rational> IntervalSet::endpoints() const {
  std::vector<Rational> pts;
  for (const auto& iv : intervals_) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  return pts;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  while (i < x.size() && j < y.size()) {
    const Rational lo = std::max(x[i].lo, y[j].lo);
    const Rational hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> merged;
  for (auto& iv : all) {
    if (!merged.empty() && merged.back().hi >= iv.lo) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
      continue;
    }
    merged.push_back(std::move(iv));
  }
  return IntervalSet(std::move(merged));
}

// --------------------------------------------------------------- StepGraphon

StepGraphon::StepGraphon(std::vector<Rational> breaks, std::vector<Rational> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
  require(breaks_.size() >= 2, "step graphon needs at least two breakpoints");
  require(breaks_.front() == 0 && breaks_.back() == 1, "step graphon breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    require(breaks_[i] < breaks_[i + 1], "step graphon breakpoints must be strictly increasing");
  const std::size_t k = cells();
  require(values_.size() == k * k, "step graphon needs " + std::to_string(k * k) + " values, got " +
                                       std::to_string(values_.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& v = values_[i * k + j];
      require(v >= 0 && v <= 1, "step graphon value " + format_rational(v) + " outside [0, 1]");
      require(v == values_[j * k + i], "step graphon values are not symmetric");
    }
}

StepGraphon StepGraphon::zero() { return StepGraphon({kZero, kOne}, {kZero}); }

Rational StepGraphon::sup_norm() const { return *std::max_element(values_.begin(), values_.end()); }

Rational StepGraphon::integral() const {
  const std::size_t k = cells();
  Rational total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (value(i, j) != 0) row += value(i, j) * width(j);
    total += row * width(i);
  }
  return total;
}

std::size_t StepGraphon::cell_of(const Rational& x) const {
  require(x >= 0 && x <= 1, "point outside [0, 1]");
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  const auto idx = static_cast<std::size_t>(it - breaks_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, cells() - 1);
}

// ------------------------------------------------------------ StepFunction1D

Rational StepFunction1D::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) total += values[i] * (breaks[i + 1] - breaks[i]);
  return total;
}

Rational StepFunction1D::value_at(const Rational& x) const {
  require(x >= 0 && x <= 1, "point outside [0, 1]");
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
  auto idx = static_cast<std::size_t>(it - breaks.begin());
  idx = std::min(idx == 0 ? 0 : idx - 1, values.size() - 1);
  return values[idx];
}

// --------------------------------------------------- GraphonSeparatingSystem

GraphonSeparatingSystem::GraphonSeparatingSystem(std::vector<SystemElement> elements) {
  elements_.reserve(elements.size());
  for (auto& e : elements) push_back(std::move(e));
}

void GraphonSeparatingSystem::push_back(SystemElement element) {
  const std::string which = "element " + std::to_string(elements_.size());
  require(intersect(element.a, element.b).empty(), which + ": A and B overlap");
  const auto grid = grid_with(element.w.breaks(), element.a, element.b);
  const auto in_a = cell_membership(element.a, grid);
  const auto in_b = cell_membership(element.b, grid);
  const auto to_w = cell_map(grid, element.w.breaks());
  const std::size_t k = grid.size() - 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (element.w.value(to_w[i], to_w[j]) == 0) continue;
      require((in_a[i] && in_b[j]) || (in_b[i] && in_a[j]),
              which + ": W is positive outside (A x B) u (B x A)");
    }
  elements_.push_back(std::move(element));
}

// ----------------------------------------------------------------- operations

StepGraphon graphon_from_graph(const Multigraph& h) {
  require(h.max_mult() <= 1, "graphon_from_graph expects a simple graph");
  const std::size_t n = h.n();
  std::vector<Rational> breaks;
  for (std::size_t i = 0; i <= n; ++i) breaks.emplace_back(static_cast<long long>(i), static_cast<long long>(n));
  std::vector<Rational> values(n * n, kZero);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (h.mult(u, v) > 0) values[u * n + v] = kOne;
  return StepGraphon(std::move(breaks), std::move(values));
}

GraphonSeparatingSystem system_from_covering(const Covering& c, Multiplicity lambda) {
  require(lambda >= 1, "system_from_covering needs lambda >= 1");
  const auto n = static_cast<long long>(c.n());
  const auto to_set = [n](const std::vector<Vertex>& side) {
    std::vector<Interval> ivs;
    for (Vertex v : side) ivs.push_back({Rational(static_cast<long long>(v), n), Rational(static_cast<long long>(v) + 1, n)});
    return IntervalSet(std::move(ivs));
  };
  const Rational value(1, static_cast<long long>(lambda));
  GraphonSeparatingSystem s;
  for (const auto& part : c.parts()) {
    IntervalSet a = to_set(part.a());
    IntervalSet b = to_set(part.b());
    StepGraphon w = bipartite_step(a, b, value);
    s.push_back({std::move(w), std::move(a), std::move(b)});
  }
  return s;
}

StepGraphon w_sigma(const GraphonSeparatingSystem& s) {
  std::vector<Rational> pts{kZero, kOne};
  for (const auto& e : s.elements()) pts.insert(pts.end(), e.w.breaks().begin(), e.w.breaks().end());
  const auto grid = sorted_unique(std::move(pts));
  const std::size_t k = grid.size() - 1;
  std::vector<Rational> sum(k * k, kZero);
  for (const auto& e : s.elements()) {
    const auto map = cell_map(grid, e.w.breaks());
    // Refined cells covered by each element cell, as [first, last).
    std::vector<std::size_t> first(e.w.cells(), k), last(e.w.cells(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      first[map[i]] = std::min(first[map[i]], i);
      last[map[i]] = std::max(last[map[i]], i + 1);
    }
    for (std::size_t p = 0; p < e.w.cells(); ++p)
      for (std::size_t q = 0; q < e.w.cells(); ++q) {
        const Rational& v = e.w.value(p, q);
        if (v == 0) continue;
        for (std::size_t i = first[p]; i < last[p]; ++i)
          for (std::size_t j = first[q]; j < last[q]; ++j) sum[i * k + j] += v;
      }
  }
  for (auto& v : sum)
    if (v > 1) v = kOne;
  return StepGraphon(grid, std::move(sum));
}

Rational fullness(const GraphonSeparatingSystem& s) { return w_sigma(s).integral(); }

StepFunction1D n_function(const GraphonSeparatingSystem& s) {
  std::vector<Rational> pts{kZero, kOne};
  for (const auto& e : s.elements()) {
    for (const auto& x : e.a.endpoints()) pts.push_back(x);
    for (const auto& x : e.b.endpoints()) pts.push_back(x);
  }
  StepFunction1D f;
  f.breaks = sorted_unique(std::move(pts));
  f.values.assign(f.breaks.size() - 1, kZero);
  for (const auto& e : s.elements()) {
    const auto in_a = cell_membership(e.a, f.breaks);
    const auto in_b = cell_membership(e.b, f.breaks);
    for (std::size_t i = 0; i < f.values.size(); ++i)
      if (in_a[i] || in_b[i]) f.values[i] += 1;
  }
  return f;
}

Rational capacity_by_measure(const GraphonSeparatingSystem& s) {
  Rational total = 0;
  for (const auto& e : s.elements()) total += unite(e.a, e.b).measure();
  return total;
}

Rational capacity_by_integral(const GraphonSeparatingSystem& s) { return n_function(s).integral(); }

Rational capacity(const GraphonSeparatingSystem& s) {
  Rational by_measure = capacity_by_measure(s);
  if (by_measure != capacity_by_integral(s))
    throw std::logic_error("capacity identity failed: sum of measures differs from the integral of N");
  return by_measure;
}

StepFunction1D degree_function(const StepGraphon& w) {
  StepFunction1D d;
  d.breaks = w.breaks();
  d.values.assign(w.cells(), kZero);
  for (std::size_t i = 0; i < w.cells(); ++i)
    for (std::size_t j = 0; j < w.cells(); ++j) d.values[i] += w.value(i, j) * w.width(j);
  return d;
}

QuantizationConstants quantization(const Rational& delta) {
  require_delta(delta);
  const BigInt ell = floor_div(Rational(1) / (2 * delta));
  return {ell, kHalf - Rational(ell) * delta};
}

double lemma41_rhs(const GraphonSeparatingSystem& s, const Rational& delta) {
  require_delta(delta);
  require_bounded(s, delta);
  const Rational eps = kOne - fullness(s);
  require(eps > 0, "lemma41_rhs needs eps = 1 - fullness > 0");
  const auto [ell, tau] = quantization(delta);

  const StepFunction1D n = n_function(s);
  double integral = 0.0;
  for (std::size_t i = 0; i < n.values.size(); ++i) {
    const BigInt count = floor_div(n.values[i]);
    const BigInt top = std::min(ell, count);
    Rational sum = 0;
    BigInt binom = 1;  // C(count, j)
    for (BigInt j = 0; j <= top; ++j) {
      sum += (kHalf + tau - delta * Rational(j)) * Rational(binom);
      binom = binom * (count - j) / (j + 1);
    }
    integral += log2_rational(sum) * to_double(n.breaks[i + 1] - n.breaks[i]);
  }
  return log2_rational(kOne / eps) + integral;
}

bool GraphonBoundsReport::any_violation() const noexcept {
  return !unweighted.holds || (weighted && !weighted->holds) || !integral.holds;
}

GraphonBoundsReport check_graphon_bounds(const GraphonSeparatingSystem& s, const Rational& delta) {
  require_delta(delta);
  require_bounded(s, delta);
  GraphonBoundsReport r;
  r.capacity = capacity(s);
  r.fullness = fullness(s);
  r.epsilon = kOne - r.fullness;
  require(r.epsilon > 0, "graphon bounds need eps = 1 - fullness > 0");
  r.delta = delta;
  r.sup_norm = kZero;
  for (const auto& e : s.elements()) r.sup_norm = std::max(r.sup_norm, e.w.sup_norm());
  r.ell_integral = quantization(delta).ell;
  r.ell_weighted = floor_div((kOne - delta) / (2 * delta));

  const double cap = to_double(r.capacity);
  const double log_inv_eps = log2_rational(kOne / r.epsilon);
  r.unweighted = check(cap, log_inv_eps);
  if (r.epsilon < 1) {
    TwoBranchBound b;
    b.first = to_double(2 * (kOne - r.epsilon) / delta);
    b.second = log_inv_eps - to_double(kOne / delta) - 1.0;
    if (r.ell_weighted > 0) b.second += r.ell_weighted.convert_to<double>() * std::log2(to_double(delta) * log_inv_eps);
    r.weighted_branches = b;
    r.weighted = check(cap, b.value());
  }
  r.integral = check(cap, lemma41_rhs(s, delta));
  return r;
}

}  // namespace hansel

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

#include "hansel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "hansel/error.hpp"

namespace hansel {

bool Square::inside_triangle() const { return side > 0 && y0 >= 0 && x0 + side <= 1 && y0 + side <= x0; }

SquareFamily dyadic_family(unsigned depth) {
  require(depth >= 1, "dyadic family needs depth >= 1");
  require(depth <= 24, "dyadic family depth above 24 is not supported");

  // A triangle {ox <= x <= ox + s, oy <= y <= oy + (x - ox)}.
  struct Tri {
    Rational ox, oy, s;
  };
  SquareFamily f;
  f.construction = "dyadic";
  f.depth = depth;
  f.squares.reserve((std::size_t{1} << depth) - 1);
  std::vector<Tri> level{{Rational(0), Rational(0), Rational(1)}};
  for (unsigned j = 1; j <= depth; ++j) {
    std::vector<Tri> next;
    next.reserve(level.size() * 2);
    for (const Tri& t : level) {
      const Rational h = t.s / 2;
      f.squares.push_back({t.ox + h, t.oy, h});
      if (j < depth) {
        next.push_back({t.ox, t.oy, h});
        next.push_back({t.ox + h, t.oy + h, h});
      }
    }
    level = std::move(next);
  }
  return f;
}

SeriesSums obs51_sums(unsigned depth) {
  require(depth >= 1, "series depth must be >= 1");
  const double ratio = 2.0 * std::sqrt(2.0) / 3.0;
  const double first = (std::sqrt(2.0) + 1.0) / 3.0;
  SeriesSums out;
  double term = first;
  for (unsigned k = 1; k <= depth; ++k) {
    out.partial += term;
    term *= ratio;
  }
  out.limit = 7.0 + 5.0 * std::sqrt(2.0);
  return out;
}

namespace {

// Sweep over x; squares whose x-range still overlaps the sweep line are kept
// keyed by y0. Their y-ranges are pairwise disjoint, so only neighbours of a
// new square need checking.
template <typename T>
bool sweep_disjoint(const std::vector<T>& x0, const std::vector<T>& y0, const std::vector<T>& side) {
  std::vector<std::size_t> order(x0.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return x0[p] < x0[q]; });

  std::map<T, std::size_t> active;
  using Expiry = std::pair<T, std::size_t>;
  std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiries;

  for (std::size_t idx : order) {
    while (!expiries.empty() && expiries.top().first <= x0[idx]) {
      active.erase(y0[expiries.top().second]);
      expiries.pop();
    }
    const T y1 = y0[idx] + side[idx];
    auto succ = active.lower_bound(y0[idx]);
    if (succ != active.end() && succ->first < y1) return false;
    if (succ != active.begin()) {
      const std::size_t p = std::prev(succ)->second;
      if (y0[p] + side[p] > y0[idx]) return false;
    }
    active.emplace(y0[idx], idx);
    expiries.emplace(x0[idx] + side[idx], idx);
  }
  return true;
}

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

// Coordinates scaled to a common denominator L <= 2^62, when one exists.
bool to_lattice(const std::vector<Square>& squares, std::vector<std::int64_t>& x0, std::vector<std::int64_t>& y0,
                std::vector<std::int64_t>& side) {
  const auto fits = [](const BigInt& v) { return v >= -kLimit && v <= kLimit; };
  std::int64_t lcm = 1;
  for (const auto& s : squares)
    for (const Rational* r : {&s.x0, &s.y0, &s.side}) {
      const BigInt& den = boost::multiprecision::denominator(*r);
      if (!fits(den)) return false;
      const auto d = den.convert_to<std::int64_t>();
      const __int128 next = static_cast<__int128>(lcm / std::gcd(lcm, d)) * d;
      if (next > kLimit) return false;
      lcm = static_cast<std::int64_t>(next);
    }
  const auto scale = [lcm, &fits](const Rational& r, std::int64_t& out) {
    const BigInt v = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
    if (!fits(v)) return false;
    out = v.convert_to<std::int64_t>();
    return true;
  };
  x0.resize(squares.size());
  y0.resize(squares.size());
  side.resize(squares.size());
  for (std::size_t i = 0; i < squares.size(); ++i)
    if (!scale(squares[i].x0, x0[i]) || !scale(squares[i].y0, y0[i]) || !scale(squares[i].side, side[i]))
      return false;
  return true;
}

}  // namespace

bool interior_disjoint(const std::vector<Square>& squares) {
  std::vector<std::int64_t> lx, ly, ls;
  if (to_lattice(squares, lx, ly, ls)) return sweep_disjoint(lx, ly, ls);
  std::vector<Rational> x0, y0, side;
  for (const auto& s : squares) {
    x0.push_back(s.x0);
    y0.push_back(s.y0);
    side.push_back(s.side);
  }
  return sweep_disjoint(x0, y0, side);
}

FamilyMetrics family_metrics(const SquareFamily& family, double power) {
  require(power >= 1.0, "power must be >= 1");
  for (std::size_t i = 0; i < family.squares.size(); ++i)
    require(family.squares[i].inside_triangle(), "square " + std::to_string(i) + " is not contained in T");
  require(interior_disjoint(family.squares), "squares overlap; only interior-disjoint families are supported");

  FamilyMetrics m;
  // Group by side length: the constructions reuse few distinct sides.
  std::map<Rational, std::size_t> by_side;
  for (const auto& s : family.squares) ++by_side[s.side];
  for (const auto& [side, count] : by_side) {
    const Rational c(static_cast<long long>(count));
    m.covered_measure += c * side * side;
    m.sum_sides += c * side;
    m.sum_side_power += static_cast<double>(count) * std::pow(to_double(side), power);
  }
  m.epsilon = Rational(1) - 2 * m.covered_measure;
  return m;
}

GraphonSeparatingSystem squares_to_system(const SquareFamily& family) {
  GraphonSeparatingSystem system;
  for (std::size_t i = 0; i < family.squares.size(); ++i) {
    const Square& s = family.squares[i];
    require(s.inside_triangle(), "square " + std::to_string(i) + " is not contained in T");
    IntervalSet a({{s.x0, s.x0 + s.side}});
    IntervalSet b({{s.y0, s.y0 + s.side}});
    std::vector<Rational> breaks{Rational(0), s.y0, s.y0 + s.side, s.x0, s.x0 + s.side, Rational(1)};
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const std::size_t k = breaks.size() - 1;
    std::vector<Rational> values(k * k, Rational(0));
    const auto ia = static_cast<std::size_t>(std::find(breaks.begin(), breaks.end(), s.x0) - breaks.begin());
    const auto ib = static_cast<std::size_t>(std::find(breaks.begin(), breaks.end(), s.y0) - breaks.begin());
    values[ia * k + ib] = 1;
    values[ib * k + ia] = 1;
    system.push_back({StepGraphon(std::move(breaks), std::move(values)), std::move(a), std::move(b)});
  }
  return system;
}

}  // namespace hansel

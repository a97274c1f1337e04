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

// Random step systems on sub-grids of a fixed 1/kGrid lattice, plus
// brute-force evaluation of their fullness and capacity on that lattice.

#ifndef HANSEL_TESTS_RANDOM_SYSTEMS_HPP
#define HANSEL_TESTS_RANDOM_SYSTEMS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "hansel/graphon.hpp"

namespace hansel::testing {

inline constexpr int kGrid = 24;

/// One element described on the kGrid lattice.
struct LatticeElement {
  int q = 1;                   // the element's own grid has q cells
  std::vector<int> side;       // per own cell: 0 none, 1 A, 2 B
  std::vector<Rational> vals;  // q x q own-grid values
};

struct RandomSystem {
  GraphonSeparatingSystem system;
  std::vector<LatticeElement> lattice;
};

inline IntervalSet cells_to_set(const std::vector<int>& side, int want, int q) {
  std::vector<Interval> ivs;
  for (int i = 0; i < q; ++i)
    if (side[i] == want) ivs.push_back({Rational(i, q), Rational(i + 1, q)});
  return IntervalSet(std::move(ivs));
}

/// Elements have values in {0, delta} (occasionally delta/2) on a random
/// divisor grid of kGrid, so the refinement logic meets unequal grids.
inline RandomSystem random_system(const Rational& delta, std::mt19937_64& rng) {
  static constexpr std::array<int, 6> kDivisors{2, 3, 4, 6, 8, 12};
  std::uniform_int_distribution<int> pick_q(0, kDivisors.size() - 1);
  std::uniform_int_distribution<int> pick_m(1, 10);
  std::uniform_int_distribution<int> pick_side(0, 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  RandomSystem out;
  const int m = pick_m(rng);
  for (int k = 0; k < m; ++k) {
    LatticeElement el;
    el.q = kDivisors[pick_q(rng)];
    el.side.resize(el.q);
    for (int& s : el.side) s = pick_side(rng);
    const int a_cell = std::uniform_int_distribution<int>(0, el.q - 1)(rng);
    const int b_cell = (a_cell + std::uniform_int_distribution<int>(1, el.q - 1)(rng)) % el.q;
    el.side[a_cell] = 1;
    el.side[b_cell] = 2;

    el.vals.assign(el.q * el.q, Rational(0));
    for (int i = 0; i < el.q; ++i)
      for (int j = 0; j < el.q; ++j)
        if (el.side[i] == 1 && el.side[j] == 2) {
          const double r = coin(rng);
          const Rational v = r < 0.6 ? delta : (r < 0.75 ? delta / 2 : Rational(0));
          el.vals[i * el.q + j] = v;
          el.vals[j * el.q + i] = v;
        }

    std::vector<Rational> breaks;
    for (int i = 0; i <= el.q; ++i) breaks.push_back(Rational(i, el.q));
    out.system.push_back({StepGraphon(breaks, el.vals), cells_to_set(el.side, 1, el.q), cells_to_set(el.side, 2, el.q)});
    out.lattice.push_back(std::move(el));
  }
  return out;
}

inline Rational lattice_fullness(const std::vector<LatticeElement>& els) {
  Rational total = 0;
  for (int x = 0; x < kGrid; ++x)
    for (int y = 0; y < kGrid; ++y) {
      Rational sum = 0;
      for (const auto& el : els) {
        const int s = kGrid / el.q;
        sum += el.vals[(x / s) * el.q + (y / s)];
      }
      total += std::min(sum, Rational(1));
    }
  return total / (kGrid * kGrid);
}

inline Rational lattice_capacity(const std::vector<LatticeElement>& els) {
  int cells = 0;
  for (int x = 0; x < kGrid; ++x)
    for (const auto& el : els)
      if (el.side[x / (kGrid / el.q)] != 0) ++cells;
  return Rational(cells, kGrid);
}

/// Lemma-style integral evaluated on the lattice with doubles and the
/// binomial recurrence, for comparison against the exact evaluator.
inline double lattice_integral_rhs(const std::vector<LatticeElement>& els, double delta) {
  const double eps = 1.0 - to_double(lattice_fullness(els));
  const int ell = static_cast<int>(std::floor(1.0 / (2.0 * delta) + 1e-12));
  const double tau = 0.5 - ell * delta;
  double integral = 0.0;
  for (int x = 0; x < kGrid; ++x) {
    int count = 0;
    for (const auto& el : els)
      if (el.side[x / (kGrid / el.q)] != 0) ++count;
    double sum = 0.0, binom = 1.0;
    for (int j = 0; j <= std::min(ell, count); ++j) {
      sum += (0.5 + tau - delta * j) * binom;
      binom = binom * (count - j) / (j + 1);
    }
    integral += std::log2(sum) / kGrid;
  }
  return std::log2(1.0 / eps) + integral;
}

}  // namespace hansel::testing

#endif  // HANSEL_TESTS_RANDOM_SYSTEMS_HPP

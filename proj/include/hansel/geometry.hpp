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

// Axis-parallel squares inside the triangle T = {0 <= y <= x <= 1}.
//
// A square [x0, x0+s] x [y0, y0+s] below the diagonal together with its
// mirror image is the bipartite graphon 1_{S u S*} with A = [x0, x0+s) and
// B = [y0, y0+s), so a family covering T up to (1-eps)/2 is a (1-eps)-full
// separating system of capacity 2 * sum of sides.

#ifndef HANSEL_GEOMETRY_HPP
#define HANSEL_GEOMETRY_HPP

#include <string>
#include <vector>

#include "hansel/graphon.hpp"
#include "hansel/rational.hpp"

namespace hansel {

struct Square {
  Rational x0;
  Rational y0;
  Rational side;

  /// y0 >= 0, x0 + side <= 1, y0 + side <= x0 and side > 0.
  bool inside_triangle() const;

  friend bool operator==(const Square&, const Square&) = default;
};

struct SquareFamily {
  std::vector<Square> squares;
  std::string construction;
  unsigned depth = 0;
};

/// Recursive dyadic covering: the square [1/2, 1] x [0, 1/2] leaves two
/// half-scale copies of T, which are filled the same way. Level j holds
/// 2^(j-1) squares of side 2^-j.
SquareFamily dyadic_family(unsigned depth);

struct SeriesSums {
  double partial = 0.0;
  double limit = 0.0;
};

/// sum_{k=1}^{depth} (2 sqrt 2 / 3)^(k-1) (sqrt 2 + 1) / 3 and its limit 7 + 5 sqrt 2
/// (side lengths of the rotated-square covering of T).
SeriesSums obs51_sums(unsigned depth);

struct FamilyMetrics {
  /// Area of the union; exact because squares are interior-disjoint.
  Rational covered_measure;
  /// eps = 1 - 2 * covered_measure.
  Rational epsilon;
  /// sum of side^power.
  double sum_side_power = 0.0;
  /// sum of sides, exact.
  Rational sum_sides;
};

/// Throws DomainError if two squares overlap in positive area or a square
/// leaves T. power must be >= 1.
FamilyMetrics family_metrics(const SquareFamily& family, double power);

/// True iff no two squares share interior points. O(k log k) sweep.
bool interior_disjoint(const std::vector<Square>& squares);

GraphonSeparatingSystem squares_to_system(const SquareFamily& family);

}  // namespace hansel

#endif  // HANSEL_GEOMETRY_HPP

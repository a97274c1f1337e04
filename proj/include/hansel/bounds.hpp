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

// Closed-form capacity bounds. All logarithms are base 2.

#ifndef HANSEL_BOUNDS_HPP
#define HANSEL_BOUNDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hansel/mgraph.hpp"

namespace hansel {

/// A max{first, second} bound with both branches kept for reporting.
/// The second branch may be negative (or -inf); it is never clamped.
struct TwoBranchBound {
  double first = 0.0;
  double second = 0.0;
  double value() const noexcept { return first > second ? first : second; }
};

/// n log2 n.
double hansel_lower(std::size_t n);

struct KatonaSzemerediBound {
  /// sum_v log2(n / (n - d(v))).
  double degree_form = 0.0;
  /// n log2(n^2 / (n^2 - 2 e(G))); never larger than degree_form.
  double edge_form = 0.0;
};

/// Simple graphs only.
KatonaSzemerediBound katona_szemeredi_lower(const Multigraph& g);

/// max{2 lambda (n-1), n (log n + floor((lambda-1)/2) log(log n / lambda) - lambda - 1)}.
TwoBranchBound multigraph_lower(std::size_t n, Multiplicity lambda);

/// Edge-density bound with T = lambda n^2 / (lambda n^2 - 2 e(G)):
/// max{2 (1 - 1/T) lambda n, n (log T + floor((lambda-1)/2) log(log T / lambda) - lambda - 1)}.
TwoBranchBound density_lower(const Multigraph& g, Multiplicity lambda);

/// Minimum capacity of a covering of K_n: nk + 2l for n = 2^k + l, 0 <= l < 2^k.
std::uint64_t bollobas_scott_exact(std::size_t n);

/// log2(delta_ex) / (1 - log2(1 + 1/alpha)); requires delta_ex >= alpha > 1.
double parts_upper_bound(double delta_ex, double alpha);

enum class BoundKind { kLower, kUpper, kExact };

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& text);

struct BoundEntry {
  std::string name;
  double value = 0.0;
  BoundKind kind = BoundKind::kLower;
};

struct BoundsReport {
  std::size_t n = 0;
  Multiplicity lambda = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  /// Every lower entry <= every exact entry <= every upper entry.
  bool consistent(double tolerance = 1e-9) const;
};

/// Entries: hansel (lambda = 1), thm13 and both its branches, exact
/// (lambda = 1), duplication = lambda * exact(n), and the supplied
/// covering capacity as an upper entry.
BoundsReport bounds_report(std::size_t n, Multiplicity lambda,
                           std::optional<std::uint64_t> covering_capacity = std::nullopt);

void write_bounds_json(std::ostream& out, const BoundsReport& report);
void write_bounds_csv(std::ostream& out, const BoundsReport& report);
BoundsReport read_bounds_json(std::istream& in);

}  // namespace hansel

#endif  // HANSEL_BOUNDS_HPP

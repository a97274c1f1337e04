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

// Exhaustive minimum-capacity covering search for small multigraphs.
//
// Capacity-first iterative deepening: for c = ceil(lower bound), c + 1, ...
// decide whether a covering of capacity <= c exists. Coverings are
// enumerated as nondecreasing sequences of canonical columns, where a
// column is an unordered pair of disjoint nonempty vertex sets with A
// holding the smallest vertex, ordered by (min vertex, bitmask).

#ifndef HANSEL_EXACT_HPP
#define HANSEL_EXACT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "hansel/mgraph.hpp"

namespace hansel {

/// Largest vertex count the search accepts (the column list grows as 3^n).
inline constexpr std::size_t kExactMaxVertices = 12;

struct SearchBudget {
  std::uint64_t max_capacity = 0;
  std::uint64_t max_nodes = 1'000'000'000;
  double time_limit_seconds = 300.0;

  /// max_capacity = 2 lambda n ceil(log2 n) with lambda the max multiplicity.
  static SearchBudget defaults_for(const Multigraph& g);
};

struct SearchOptions {
  /// Split the tree on the first column across OpenMP threads.
  bool parallel = false;
  /// Seed an incumbent from the peeling construction; the search stops
  /// as soon as the target capacity reaches it.
  bool use_incumbent = true;
};

enum class SearchStatus { kOptimal, kBudgetExceeded };

struct ExactResult {
  SearchStatus status = SearchStatus::kOptimal;
  /// Optimal capacity, or the incumbent's capacity on budget exhaustion.
  std::optional<std::uint64_t> value;
  /// Optimal covering, or the best covering known when the budget tripped.
  std::optional<Covering> witness;
  std::uint64_t nodes_expanded = 0;
  /// Largest capacity target proven infeasible (0 if none).
  std::uint64_t proven_lower = 0;
};

ExactResult min_capacity_exact(const Multigraph& g, const SearchBudget& budget,
                               const SearchOptions& options = {});

/// min_capacity_exact(K_n^1) == bollobas_scott_exact(n). Requires
/// lambda = 1 and n <= 7; throws BudgetExceeded if the search gives up.
bool verify_optimum(std::size_t n, Multiplicity lambda);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

void write_exact_json(std::ostream& out, const Multigraph& g, const ExactResult& result);

}  // namespace hansel

#endif  // HANSEL_EXACT_HPP

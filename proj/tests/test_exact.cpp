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

#include <doctest.h>
#include <omp.h>

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hansel/bounds.hpp"
#include "hansel/error.hpp"
#include "hansel/exact.hpp"
#include "hansel/io.hpp"
#include "hansel/peel.hpp"
#include "support/oracles.hpp"

using namespace hansel;

namespace {

std::uint64_t solve(const Multigraph& g, SearchOptions options = {}) {
  const auto r = min_capacity_exact(g, SearchBudget::defaults_for(g), options);
  REQUIRE(r.status == SearchStatus::kOptimal);
  REQUIRE(r.value.has_value());
  REQUIRE(r.witness.has_value());
  CHECK(verify_covering(g, *r.witness).valid);
  CHECK(r.witness->capacity() == *r.value);
  return *r.value;
}

}  // namespace

TEST_CASE("exact values of K_n") {
  const auto k2 = min_capacity_exact(complete_multigraph(2, 1), SearchBudget::defaults_for(complete_multigraph(2, 1)));
  CHECK(*k2.value == 2);
  CHECK(*k2.witness == Covering(2, {BipartitePart({0}, {1})}));
  for (std::size_t n = 2; n <= 6; ++n) CHECK(solve(complete_multigraph(n, 1)) == bollobas_scott_exact(n));
  CHECK(solve(complete_multigraph(5, 1)) == 12);
}

// No closed form exists for lambda >= 2; these are frozen outputs of the
// search, cross-checked below against the naive enumerator where feasible.
TEST_CASE("exact regression constants for multiplicity above one") {
  CHECK(solve(complete_multigraph(3, 2)) == 9);
  CHECK(solve(complete_multigraph(3, 3)) == 14);
  CHECK(solve(complete_multigraph(4, 2)) == 12);
  CHECK(solve(complete_multigraph(4, 3)) == 20);
  CHECK(solve(complete_multigraph(5, 2)) == 19);
}

TEST_CASE("K3^2 lies between the degree bound and duplication") {
  const auto v = solve(complete_multigraph(3, 2));
  CHECK(v >= 8);
  CHECK(v <= 10);
}

TEST_CASE("search agrees with the naive enumerator") {
  SUBCASE("complete multigraphs") {
    CHECK(testing::NaiveExact(complete_multigraph(2, 1)).solve(10) == 2);
    CHECK(testing::NaiveExact(complete_multigraph(3, 1)).solve(10) == 5);
    CHECK(testing::NaiveExact(complete_multigraph(4, 1)).solve(10) == 8);
    CHECK(testing::NaiveExact(complete_multigraph(3, 2)).solve(10) == 9);
    CHECK(testing::NaiveExact(complete_multigraph(3, 3)).solve(15) == 14);
  }
  SUBCASE("random small multigraphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
      const Multiplicity max_mult = n == 4 ? 1 : 3;
      const auto g = testing::random_multigraph(n, max_mult, 0.7, rng);
      const auto fast = solve(g, {false, false});
      const auto upper = g.has_edges() ? build_covering(g, 2.0, 0).covering.capacity() : 0;
      CHECK(testing::NaiveExact(g).solve(upper) == fast);
    }
  }
}

TEST_CASE("exact value respects lower and constructive upper bounds") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const auto g = testing::random_multigraph(n, 3, 0.6, rng);
    const auto value = static_cast<double>(solve(g, {false, false}));
    const Multiplicity lambda = std::max<Multiplicity>(1, g.max_mult());
    CHECK(value >= density_lower(g, lambda).value() - 1e-9);
    if (g.max_mult() <= 1) CHECK(value >= katona_szemeredi_lower(g).degree_form - 1e-9);
    if (g.has_edges())
      for (double alpha : {1.5, 2.0, 4.0})
        CHECK(value <= static_cast<double>(build_covering(g, alpha, trial).covering.capacity()));
  }
  for (std::size_t n = 2; n <= 5; ++n)
    for (Multiplicity lambda = 1; lambda <= 2; ++lambda) {
      const auto value = static_cast<double>(solve(complete_multigraph(n, lambda)));
      for (const auto& e : bounds_report(n, lambda).entries) {
        if (e.kind == BoundKind::kLower) CHECK(value >= e.value - 1e-9);
        if (e.kind == BoundKind::kUpper) CHECK(value <= e.value + 1e-9);
      }
    }
}

TEST_CASE("parallel search returns the same optimum") {
  omp_set_num_threads(4);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(solve(complete_multigraph(n, 1), {true, true}) == bollobas_scott_exact(n));
  CHECK(solve(complete_multigraph(4, 3), {true, false}) == 20);
  omp_set_num_threads(1);
}

TEST_CASE("edgeless graph needs nothing") {
  const auto r = min_capacity_exact(Multigraph(4), SearchBudget::defaults_for(Multigraph(4)));
  CHECK(*r.value == 0);
  CHECK(r.witness->parts().empty());
}

TEST_CASE("budget exhaustion") {
  const auto g = complete_multigraph(6, 1);
  SUBCASE("node budget") {
    SearchBudget b = SearchBudget::defaults_for(g);
    b.max_nodes = 100;
    const auto r = min_capacity_exact(g, b, {false, true});
    CHECK(r.status == SearchStatus::kBudgetExceeded);
    REQUIRE(r.witness.has_value());
    CHECK(verify_covering(g, *r.witness).valid);
    CHECK(*r.value == r.witness->capacity());
  }
  SUBCASE("capacity budget without incumbent") {
    SearchBudget b = SearchBudget::defaults_for(g);
    b.max_capacity = 14;
    const auto r = min_capacity_exact(g, b, {false, false});
    CHECK(r.status == SearchStatus::kBudgetExceeded);
    CHECK_FALSE(r.value.has_value());
    CHECK(r.proven_lower == 14);
  }
  SUBCASE("default budget") {
    const auto b = SearchBudget::defaults_for(complete_multigraph(5, 2));
    CHECK(b.max_capacity == 2 * 2 * 5 * 3);
    CHECK(b.max_nodes == 1'000'000'000);
    CHECK(b.time_limit_seconds == 300.0);
  }
  SUBCASE("too many vertices") {
    CHECK_THROWS_AS(min_capacity_exact(complete_multigraph(kExactMaxVertices + 1, 1), SearchBudget{}),
                    DomainError);
  }
}

TEST_CASE("verify_optimum") {
  CHECK(verify_optimum(3, 1));
  CHECK(verify_optimum(4, 1));
  CHECK(verify_optimum(6, 1));
  CHECK_THROWS_AS(verify_optimum(3, 2), DomainError);
  CHECK_THROWS_AS(verify_optimum(8, 1), DomainError);
}

TEST_CASE("result JSON") {
  const auto g = complete_multigraph(4, 1);
  const auto r = min_capacity_exact(g, SearchBudget::defaults_for(g));
  std::stringstream ss;
  write_exact_json(ss, g, r);
  const auto j = nlohmann::json::parse(ss.str());
  CHECK(j.at("n") == 4);
  CHECK(j.at("lambda") == 1);
  CHECK(j.at("value") == 8);
  CHECK(j.at("status") == "optimal");
  const auto witness = io::covering_from_json(j);
  CHECK(verify_covering(g, witness).valid);
  CHECK(witness.capacity() == 8);
}

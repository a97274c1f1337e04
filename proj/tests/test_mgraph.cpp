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

#include <random>

#include "hansel/error.hpp"
#include "hansel/mgraph.hpp"
#include "support/oracles.hpp"

using namespace hansel;

namespace {

Multigraph cycle4() {
  const std::vector<Edge> e{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
  return Multigraph::from_edges(4, e);
}

Covering k3_optimal() { return Covering(3, {BipartitePart({0}, {1, 2}), BipartitePart({1}, {2})}); }

}  // namespace

TEST_CASE("complete multigraph") {
  const auto g = complete_multigraph(3, 2);
  CHECK(g.mult(0, 1) == 2);
  CHECK(g.mult(0, 2) == 2);
  CHECK(g.mult(2, 1) == 2);
  CHECK(g.edge_total() == 6);

  const auto k2 = complete_multigraph(2, 1);
  CHECK(k2.edges() == std::vector<Edge>{{0, 1, 1}});
  CHECK(complete_multigraph(5, 3).edge_total() == 30);

  CHECK_THROWS_AS(complete_multigraph(1, 1), DomainError);
  CHECK_THROWS_AS(complete_multigraph(4, 0), DomainError);
}

TEST_CASE("from_edges validation") {
  const std::vector<Edge> loop{{1, 1, 1}};
  CHECK_THROWS_AS(Multigraph::from_edges(3, loop), DomainError);
  const std::vector<Edge> out{{0, 3, 1}};
  CHECK_THROWS_AS(Multigraph::from_edges(3, out), DomainError);
  const std::vector<Edge> dup{{0, 1, 1}, {1, 0, 2}};
  CHECK_THROWS_AS(Multigraph::from_edges(3, dup), DomainError);
  const std::vector<Edge> zero{{0, 1, 0}};
  CHECK_FALSE(Multigraph::from_edges(3, zero).has_edges());
}

TEST_CASE("bipartite part validation") {
  CHECK_THROWS_AS(BipartitePart({}, {1}), DomainError);
  CHECK_THROWS_AS(BipartitePart({0}, {}), DomainError);
  CHECK_THROWS_AS(BipartitePart({0, 1}, {1}), DomainError);
  CHECK_THROWS_AS(BipartitePart({0, 0}, {1}), DomainError);
  const BipartitePart p({2, 0}, {1});
  CHECK(p.size() == 3);
  CHECK(p.splits(1, 2));
  CHECK_FALSE(p.splits(0, 2));
}

TEST_CASE("subtract") {
  SUBCASE("K2 minus its edge is empty") {
    const auto r = subtract(complete_multigraph(2, 1), BipartitePart({0}, {1}));
    CHECK_FALSE(r.has_edges());
  }
  SUBCASE("K3^2 minus a star") {
    const auto g = complete_multigraph(3, 2);
    const auto r = subtract(g, BipartitePart({0}, {1, 2}));
    CHECK(r.mult(0, 1) == 1);
    CHECK(r.mult(0, 2) == 1);
    CHECK(r.mult(1, 2) == 2);
    CHECK(g.mult(0, 1) == 2);
  }
  SUBCASE("absent pair stays zero") {
    const std::vector<Edge> e{{1, 2, 1}};
    const auto r = subtract(Multigraph::from_edges(3, e), BipartitePart({0}, {1}));
    CHECK(r.mult(0, 1) == 0);
    CHECK(r.mult(1, 2) == 1);
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(subtract(complete_multigraph(2, 1), BipartitePart({0}, {2})), DomainError);
  }
}

TEST_CASE("subtract agrees with direct recomputation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const auto g = testing::random_multigraph(n, 4, 0.6, rng);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) {
      const int s = std::uniform_int_distribution<int>(0, 2)(rng);
      if (s == 1) a.push_back(v);
      if (s == 2) b.push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    const auto r = subtract(g, BipartitePart(a, b));
    const auto expect = testing::naive_subtract(g, a, b);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) REQUIRE(r.mult(u, v) == expect[u * n + v]);
  }
}

TEST_CASE("exponential degree") {
  const auto k4 = complete_multigraph(4, 3);
  for (Vertex v = 0; v < 4; ++v) CHECK(exp_degree(k4, 2.0, v) == doctest::Approx(24.0));

  for (double alpha : {1.5, 2.0, 8.0})
    for (std::size_t n : {3u, 7u, 16u})
      for (Multiplicity lambda : {1u, 2u, 5u}) {
        const double expect = std::pow(alpha, lambda) * static_cast<double>(n - 1);
        CHECK(max_exp_degree(complete_multigraph(n, lambda), alpha) == doctest::Approx(expect).epsilon(1e-12));
      }

  CHECK(exp_degree(cycle4(), 1.000001, 2) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(max_exp_degree(Multigraph(5), 3.0) == 0.0);
  CHECK_THROWS_AS(exp_degree(cycle4(), 1.0, 0), DomainError);
  CHECK_THROWS_AS(max_exp_degree(cycle4(), 0.5), DomainError);
}

TEST_CASE("exponential degree of a simple graph is degree times alpha") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_multigraph(10, 1, 0.5, rng);
    for (Vertex v = 0; v < g.n(); ++v) {
      CHECK(exp_degree(g, 3.25, v) == doctest::Approx(3.25 * static_cast<double>(g.degree(v))));
      CHECK(exp_degree(g, 3.25, v) == doctest::Approx(testing::naive_exp_degree(g, 3.25, v)));
    }
  }
}

TEST_CASE("verify covering") {
  SUBCASE("optimal K3") {
    const auto r = verify_covering(complete_multigraph(3, 1), k3_optimal());
    CHECK(r.valid);
    CHECK(r.deficits.empty());
    CHECK(r.capacity == 5);
    CHECK(r.parts == 2);
  }
  SUBCASE("K3^2 with a single-cover") {
    const auto r = verify_covering(complete_multigraph(3, 2), k3_optimal());
    CHECK_FALSE(r.valid);
    REQUIRE(r.deficits.size() == 3);
    CHECK(r.deficits[0] == Deficit{0, 1, 2, 1});
  }
  SUBCASE("K2 with nothing") {
    const auto r = verify_covering(complete_multigraph(2, 1), Covering(2));
    CHECK_FALSE(r.valid);
    REQUIRE(r.deficits.size() == 1);
    CHECK(r.deficits[0] == Deficit{0, 1, 1, 0});
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(verify_covering(complete_multigraph(4, 1), k3_optimal()), DomainError);
  }
}

TEST_CASE("covering rejects parts out of range") {
  Covering c(3);
  CHECK_THROWS_AS(c.push_back(BipartitePart({0}, {3})), DomainError);
}

TEST_CASE("label matrix round trip") {
  SUBCASE("star column") {
    const Covering c(3, {BipartitePart({0}, {1, 2})});
    const auto m = labels_from_covering(c);
    REQUIRE(m.cols() == 1);
    CHECK(m.at(0, 0) == Label::kLeft);
    CHECK(m.at(1, 0) == Label::kRight);
    CHECK(m.at(2, 0) == Label::kRight);
    CHECK(m.weight() == 3);
  }
  SUBCASE("optimal K3") {
    const auto back = covering_from_labels(labels_from_covering(k3_optimal()));
    CHECK(back == k3_optimal());
    CHECK(back.capacity() == 5);
  }
  SUBCASE("empty covering") {
    const auto m = labels_from_covering(Covering(4));
    CHECK(m.cols() == 0);
    CHECK(m.weight() == 0);
  }
  SUBCASE("column with an empty side") {
    LabelMatrix m(3, 1);
    m.set(0, 0, Label::kLeft);
    m.set(1, 0, Label::kStar);
    m.set(2, 0, Label::kStar);
    CHECK_THROWS_AS(covering_from_labels(m), DomainError);
  }
}

TEST_CASE("capacity equals label weight on random coverings") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    Covering c(n);
    const int m = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int k = 0; k < m; ++k) {
      std::vector<Vertex> a, b;
      for (Vertex v = 0; v < n; ++v) (std::uniform_int_distribution<int>(0, 1)(rng) ? a : b).push_back(v);
      if (a.empty() || b.empty()) continue;
      c.push_back(BipartitePart(a, b));
    }
    const auto m_labels = labels_from_covering(c);
    CHECK(m_labels.weight() == c.capacity());
    CHECK(covering_from_labels(m_labels) == c);
  }
}

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

#include "hansel/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>

#include <nlohmann/json.hpp>

#include "hansel/bounds.hpp"
#include "hansel/error.hpp"
#include "hansel/io.hpp"
#include "hansel/peel.hpp"

namespace hansel {
namespace {

using Mask = std::uint32_t;
using Clock = std::chrono::steady_clock;

struct Column {
  Mask a = 0;
  Mask b = 0;
  std::uint32_t size = 0;
  std::uint32_t min_vertex = 0;
};

// All unordered pairs (A, B) of disjoint nonempty subsets, A holding the
// smallest vertex, sorted by (min vertex, a | b << n).
std::vector<Column> canonical_columns(std::size_t n) {
  std::vector<Column> cols;
  for (std::uint32_t m = 0; m < n; ++m) {
    const std::size_t rest = n - 1 - m;
    std::uint64_t assignments = 1;
    for (std::size_t i = 0; i < rest; ++i) assignments *= 3;
    std::vector<Column> block;
    for (std::uint64_t code = 0; code < assignments; ++code) {
      Mask a = Mask{1} << m, b = 0;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < rest; ++i, c /= 3) {
        const Mask bit = Mask{1} << (m + 1 + i);
        if (c % 3 == 1) a |= bit;
        if (c % 3 == 2) b |= bit;
      }
      if (b == 0) continue;
      block.push_back({a, b, static_cast<std::uint32_t>(std::popcount(a) + std::popcount(b)), m});
    }
    std::sort(block.begin(), block.end(), [n](const Column& x, const Column& y) {
      return (std::uint64_t{x.a} | std::uint64_t{x.b} << n) < (std::uint64_t{y.a} | std::uint64_t{y.b} << n);
    });
    cols.insert(cols.end(), block.begin(), block.end());
  }
  return cols;
}

// Shared between worker threads of one capacity level.
struct SearchControl {
  const SearchBudget* budget = nullptr;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> found{false};
  std::atomic<bool> exhausted{false};
  std::mutex witness_mutex;
  std::vector<std::size_t> witness;
};

class Searcher {
 public:
  Searcher(const Multigraph& g, const std::vector<Column>& columns, SearchControl& control)
      : n_(g.n()), columns_(columns), control_(control), deficit_(n_ * n_, 0), need_(n_, 0) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (const Multiplicity m = g.mult(u, v); m > 0) {
          deficit_[u * n_ + v] = m;
          need_[u] |= Mask{1} << v;
        }
  }

  /// Columns that can open a solution of capacity <= limit.
  std::vector<std::size_t> first_choices(std::uint64_t limit) const {
    std::vector<std::size_t> out;
    if (done()) return out;
    const std::uint32_t p = first_needy();
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i].min_vertex > p) break;
      if (columns_[i].size <= limit && useful(columns_[i])) out.push_back(i);
    }
    return out;
  }

  /// Searches with column i forced first. True on success (witness published).
  bool run_from(std::size_t first, std::uint64_t limit) {
    const Column& c = columns_[first];
    if (c.size > limit) return false;
    std::vector<std::uint32_t> undo;
    apply(c, undo);
    stack_.push_back(first);
    const bool ok = dfs(first, limit - c.size);
    if (!ok) {
      stack_.pop_back();
      revert(undo);
    }
    return ok;
  }


 private:
  bool done() const {
    return std::all_of(need_.begin(), need_.end(), [](Mask m) { return m == 0; });
  }

  std::uint32_t first_needy() const {
    for (std::uint32_t v = 0; v < n_; ++v)
      if (need_[v] != 0) return v;
    return static_cast<std::uint32_t>(n_);
  }

  // Every vertex of the column must still owe a pair to the opposite side;
  // otherwise dropping it gives a cheaper covering found elsewhere.
  bool useful(const Column& c) const {
    for (Mask rest = c.a; rest != 0; rest &= rest - 1)
      if ((need_[std::countr_zero(rest)] & c.b) == 0) return false;
    for (Mask rest = c.b; rest != 0; rest &= rest - 1)
      if ((need_[std::countr_zero(rest)] & c.a) == 0) return false;
    return true;
  }

  // Each vertex v lies in at least max_u deficit(v, u) further columns; a
  // column of size s splits at most s^2/4 pairs.
  bool bound_allows(std::uint64_t remaining) const {
    std::uint64_t vertex_bound = 0, pair_total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint32_t worst = 0;
      for (Mask rest = need_[v]; rest != 0; rest &= rest - 1) {
        const std::uint32_t d = deficit_[v * n_ + std::countr_zero(rest)];
        worst = std::max(worst, d);
        pair_total += d;
      }
      vertex_bound += worst;
    }
    pair_total /= 2;
    if (vertex_bound > remaining) return false;
    // sum s_i^2 / 4 <= remaining * n / 4 when every s_i <= n.
    return 4 * pair_total <= remaining * n_;
  }

  void apply(const Column& c, std::vector<std::uint32_t>& undo) {
    for (Mask ra = c.a; ra != 0; ra &= ra - 1) {
      const auto x = static_cast<std::uint32_t>(std::countr_zero(ra));
      for (Mask rb = c.b; rb != 0; rb &= rb - 1) {
        const auto y = static_cast<std::uint32_t>(std::countr_zero(rb));
        auto& d = deficit_[x * n_ + y];
        if (d == 0) continue;
        --d;
        --deficit_[y * n_ + x];
        undo.push_back(x * static_cast<std::uint32_t>(n_) + y);
        if (d == 0) {
          need_[x] &= ~(Mask{1} << y);
          need_[y] &= ~(Mask{1} << x);
        }
      }
    }
  }

  void revert(const std::vector<std::uint32_t>& undo) {
    for (std::uint32_t key : undo) {
      const std::uint32_t x = key / static_cast<std::uint32_t>(n_), y = key % static_cast<std::uint32_t>(n_);
      ++deficit_[x * n_ + y];
      ++deficit_[y * n_ + x];
      need_[x] |= Mask{1} << y;
      need_[y] |= Mask{1} << x;
    }
  }

  bool should_stop() {
    if (control_.found.load(std::memory_order_relaxed) || control_.exhausted.load(std::memory_order_relaxed))
      return true;
    const std::uint64_t count = control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > control_.budget->max_nodes || ((count & 1023) == 0 && Clock::now() > control_.deadline)) {
      control_.exhausted.store(true);
      return true;
    }
    return false;
  }

  bool dfs(std::size_t start, std::uint64_t remaining) {
    if (done()) {
      std::lock_guard lock(control_.witness_mutex);
      if (!control_.found.exchange(true)) control_.witness = stack_;
      return true;
    }
    if (should_stop()) return false;
    if (!bound_allows(remaining)) return false;
    const std::uint32_t p = first_needy();
    std::vector<std::uint32_t> undo;
    for (std::size_t i = start; i < columns_.size(); ++i) {
      const Column& c = columns_[i];
      if (c.min_vertex > p) break;
      if (c.size > remaining || !useful(c)) continue;
      undo.clear();
      apply(c, undo);
      stack_.push_back(i);
      if (dfs(i, remaining - c.size)) return true;
      stack_.pop_back();
      revert(undo);
      if (control_.found.load(std::memory_order_relaxed) || control_.exhausted.load(std::memory_order_relaxed))
        return false;
    }
    return false;
  }

  std::size_t n_;
  const std::vector<Column>& columns_;
  SearchControl& control_;
  std::vector<std::uint32_t> deficit_;
  std::vector<Mask> need_;
  std::vector<std::size_t> stack_;
};

Covering covering_from_columns(std::size_t n, const std::vector<Column>& columns,
                               const std::vector<std::size_t>& chosen) {
  Covering c(n);
  for (std::size_t i : chosen) {
    std::vector<Vertex> a, b;
    for (Mask r = columns[i].a; r != 0; r &= r - 1) a.push_back(static_cast<Vertex>(std::countr_zero(r)));
    for (Mask r = columns[i].b; r != 0; r &= r - 1) b.push_back(static_cast<Vertex>(std::countr_zero(r)));
    c.push_back(BipartitePart(std::move(a), std::move(b)));
  }
  return c;
}

std::uint64_t starting_target(const Multigraph& g) {
  const Multiplicity lambda = g.max_mult();
  const double density = density_lower(g, lambda).value();
  const auto from_density = static_cast<std::uint64_t>(std::max(0.0, std::ceil(density - 1e-9)));
  std::uint64_t per_vertex = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto r = g.row(v);
    per_vertex += *std::max_element(r.begin(), r.end());
  }
  return std::max(from_density, per_vertex);
}

std::optional<Covering> peeling_incumbent(const Multigraph& g) {
  const double alpha = choose_alpha(std::max<std::size_t>(g.n(), 3), g.max_mult(), AlphaStrategy::automatic());
  std::optional<Covering> best;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Covering c = build_covering(g, alpha, seed).covering;
    if (!best || c.capacity() < best->capacity()) best = std::move(c);
  }
  return best;
}

}  // namespace

SearchBudget SearchBudget::defaults_for(const Multigraph& g) {
  const auto n = static_cast<std::uint64_t>(g.n());
  const std::uint64_t log_ceil = n <= 1 ? 0 : std::bit_width(n - 1);
  SearchBudget b;
  b.max_capacity = 2 * std::max<std::uint64_t>(g.max_mult(), 1) * n * std::max<std::uint64_t>(log_ceil, 1);
  return b;
}

ExactResult min_capacity_exact(const Multigraph& g, const SearchBudget& budget, const SearchOptions& options) {
  require(g.n() <= kExactMaxVertices, "exact search supports at most " + std::to_string(kExactMaxVertices) +
                                          " vertices, got " + std::to_string(g.n()));
  ExactResult result;
  if (!g.has_edges()) {
    result.value = 0;
    result.witness = Covering(g.n());
    return result;
  }

  const auto columns = canonical_columns(g.n());
  std::optional<Covering> incumbent;
  if (options.use_incumbent) incumbent = peeling_incumbent(g);

  SearchControl control;
  control.budget = &budget;
  control.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(budget.time_limit_seconds));

  const auto give_up = [&] {
    result.status = SearchStatus::kBudgetExceeded;
    if (incumbent) {
      result.value = incumbent->capacity();
      result.witness = *incumbent;
    }
    result.nodes_expanded = control.nodes.load();
    return result;
  };

  for (std::uint64_t target = starting_target(g);; ++target) {
    if (incumbent && target >= incumbent->capacity()) {
      // Nothing cheaper than the incumbent exists.
      result.value = incumbent->capacity();
      result.witness = *incumbent;
      result.nodes_expanded = control.nodes.load();
      return result;
    }
    if (target > budget.max_capacity) return give_up();

    Searcher root(g, columns, control);
    const auto firsts = root.first_choices(target);
    if (options.parallel) {
      const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel
      {
        Searcher local(g, columns, control);
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
          if (control.found.load() || control.exhausted.load()) continue;
          local.run_from(firsts[static_cast<std::size_t>(i)], target);
        }
      }
    } else {
      Searcher local(g, columns, control);
      for (std::size_t first : firsts) {
        if (control.found.load() || control.exhausted.load()) break;
        local.run_from(first, target);
      }
    }

    if (control.found.load()) {
      Covering witness = covering_from_columns(g.n(), columns, control.witness);
      // The search accepts any covering with capacity <= target; targets
      // below were refuted, so the witness is exactly optimal.
      result.value = witness.capacity();
      result.witness = std::move(witness);
      result.nodes_expanded = control.nodes.load();
      return result;
    }
    if (control.exhausted.load()) return give_up();
    result.proven_lower = target;
  }
}

bool verify_optimum(std::size_t n, Multiplicity lambda) {
  require(lambda == 1, "verify_optimum compares against the lambda = 1 closed form");
  require(n >= 2 && n <= 7, "verify_optimum needs 2 <= n <= 7");
  const Multigraph g = complete_multigraph(n, 1);
  const ExactResult r = min_capacity_exact(g, SearchBudget::defaults_for(g));
  if (r.status == SearchStatus::kBudgetExceeded)
    throw BudgetExceeded("exact search for K_" + std::to_string(n) + " exceeded its budget");
  return *r.value == bollobas_scott_exact(n);
}

void write_exact_json(std::ostream& out, const Multigraph& g, const ExactResult& result) {
  nlohmann::json j;
  j["n"] = g.n();
  j["lambda"] = g.max_mult();
  j["status"] = result.status == SearchStatus::kOptimal ? "optimal" : "budget_exceeded";
  j["value"] = result.value ? nlohmann::json(*result.value) : nlohmann::json(nullptr);
  j["nodes_expanded"] = result.nodes_expanded;
  j["witness"] = result.witness ? io::to_json(*result.witness) : nlohmann::json(nullptr);
  out << j.dump(2) << '\n';
}

}  // namespace hansel

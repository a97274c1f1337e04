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

#include "hansel/bounds.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

#include "hansel/error.hpp"

namespace hansel {
namespace {

// n (log T + floor((lambda-1)/2) log(log T / lambda) - lambda - 1), shared by
// the multigraph and density bounds. A zero coefficient suppresses the
// middle term even when log T = 0.
double log_branch(double n, double log_t, Multiplicity lambda) {
  const double coefficient = std::floor((static_cast<double>(lambda) - 1.0) / 2.0);
  double middle = 0.0;
  if (coefficient > 0.0)
    middle = log_t > 0.0 ? coefficient * std::log2(log_t / lambda) : -std::numeric_limits<double>::infinity();
  return n * (log_t + middle - static_cast<double>(lambda) - 1.0);
}

}  // namespace

double hansel_lower(std::size_t n) {
  require(n >= 2, "hansel_lower needs n >= 2");
  const double x = static_cast<double>(n);
  return x * std::log2(x);
}

KatonaSzemerediBound katona_szemeredi_lower(const Multigraph& g) {
  require(g.max_mult() <= 1, "Katona-Szemeredi bound applies to simple graphs only");
  const double n = static_cast<double>(g.n());
  KatonaSzemerediBound out;
  for (Vertex v = 0; v < g.n(); ++v)
    out.degree_form += std::log2(n / (n - static_cast<double>(g.degree(v))));
  out.edge_form = n * std::log2(n * n / (n * n - 2.0 * static_cast<double>(g.edge_total())));
  return out;
}

TwoBranchBound multigraph_lower(std::size_t n, Multiplicity lambda) {
  require(n >= 2, "multigraph_lower needs n >= 2");
  require(lambda >= 1, "multigraph_lower needs lambda >= 1");
  const double x = static_cast<double>(n);
  return {2.0 * lambda * (x - 1.0), log_branch(x, std::log2(x), lambda)};
}

TwoBranchBound density_lower(const Multigraph& g, Multiplicity lambda) {
  require(lambda >= 1, "density_lower needs lambda >= 1");
  require(lambda >= g.max_mult(), "density_lower: lambda is below the maximum multiplicity");
  const double n = static_cast<double>(g.n());
  const double full = static_cast<double>(lambda) * n * n;
  const double twice_edges = 2.0 * static_cast<double>(g.edge_total());
  require(twice_edges < full, "density_lower: 2 e(G) >= lambda n^2, T undefined");
  const double t = full / (full - twice_edges);
  return {2.0 * (1.0 - 1.0 / t) * lambda * n, log_branch(n, std::log2(t), lambda)};
}

std::uint64_t bollobas_scott_exact(std::size_t n) {
  require(n >= 2, "bollobas_scott_exact needs n >= 2");
  const auto x = static_cast<std::uint64_t>(n);
  const std::uint64_t k = std::bit_width(x) - 1;
  const std::uint64_t l = x - (std::uint64_t{1} << k);
  return x * k + 2 * l;
}

double parts_upper_bound(double delta_ex, double alpha) {
  require(alpha > 1.0, "parts_upper_bound needs alpha > 1");
  require(delta_ex >= alpha, "parts_upper_bound needs delta_ex >= alpha");
  return std::log2(delta_ex) / (1.0 - std::log2(1.0 + 1.0 / alpha));
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kLower: return "lower";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kExact: return "exact";
  }
  return "lower";
}

BoundKind bound_kind_from_string(const std::string& text) {
  if (text == "lower") return BoundKind::kLower;
  if (text == "upper") return BoundKind::kUpper;
  if (text == "exact") return BoundKind::kExact;
  throw DomainError("unknown bound kind '" + text + "'");
}

const BoundEntry* BoundsReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

bool BoundsReport::consistent(double tolerance) const {
  double max_lower = -std::numeric_limits<double>::infinity();
  double min_upper = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    if (e.kind == BoundKind::kLower) max_lower = std::max(max_lower, e.value);
    if (e.kind == BoundKind::kUpper) min_upper = std::min(min_upper, e.value);
  }
  for (const auto& e : entries)
    if (e.kind == BoundKind::kExact && (e.value < max_lower - tolerance || e.value > min_upper + tolerance))
      return false;
  return max_lower <= min_upper + tolerance;
}

BoundsReport bounds_report(std::size_t n, Multiplicity lambda, std::optional<std::uint64_t> covering_capacity) {
  BoundsReport r{n, lambda, {}};
  const TwoBranchBound thm = multigraph_lower(n, lambda);
  const auto exact = static_cast<double>(bollobas_scott_exact(n));
  if (lambda == 1) r.entries.push_back({"hansel", hansel_lower(n), BoundKind::kLower});
  r.entries.push_back({"thm13", thm.value(), BoundKind::kLower});
  r.entries.push_back({"thm13_degree_branch", thm.first, BoundKind::kLower});
  r.entries.push_back({"thm13_log_branch", thm.second, BoundKind::kLower});
  if (lambda == 1) r.entries.push_back({"exact", exact, BoundKind::kExact});
  r.entries.push_back({"duplication", static_cast<double>(lambda) * exact, BoundKind::kUpper});
  if (covering_capacity)
    r.entries.push_back({"covering", static_cast<double>(*covering_capacity), BoundKind::kUpper});
  return r;
}

void write_bounds_json(std::ostream& out, const BoundsReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["lambda"] = report.lambda;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    // JSON has no infinities; a -inf branch is written as null.
    nlohmann::json value = std::isfinite(e.value) ? nlohmann::json(e.value) : nlohmann::json(nullptr);
    j["entries"].push_back({{"name", e.name}, {"value", value}, {"kind", to_string(e.kind)}});
  }
  out << j.dump(2) << '\n';
}

void write_bounds_csv(std::ostream& out, const BoundsReport& report) {
  out << "name,value\n";
  const auto old_precision = out.precision(17);
  for (const auto& e : report.entries) out << e.name << ',' << e.value << '\n';
  out.precision(old_precision);
}

BoundsReport read_bounds_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    BoundsReport r;
    r.n = j.at("n").get<std::size_t>();
    r.lambda = j.at("lambda").get<Multiplicity>();
    for (const auto& e : j.at("entries")) {
      const auto& v = e.at("value");
      r.entries.push_back({e.at("name").get<std::string>(),
                           v.is_null() ? -std::numeric_limits<double>::infinity() : v.get<double>(),
                           bound_kind_from_string(e.at("kind").get<std::string>())});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bounds report JSON: ") + e.what());
  }
}

}  // namespace hansel

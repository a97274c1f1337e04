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

// hansel: command-line front end.
//
// Exit codes: 0 success, 1 domain/validation error, 2 search budget exhausted.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hansel/bounds.hpp"
#include "hansel/error.hpp"
#include "hansel/exact.hpp"
#include "hansel/geometry.hpp"
#include "hansel/graphon.hpp"
#include "hansel/io.hpp"
#include "hansel/peel.hpp"

namespace {

using namespace hansel;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

struct RunConfig {
  std::optional<std::size_t> n;
  std::optional<Multiplicity> lambda;
  std::string graph;
  std::string covering;
  std::string alpha = "auto";
  std::uint64_t seed = 0;
  std::string output;
  std::string trace;
  std::string format = "human";
  int threads = 1;

  // bounds
  std::optional<std::uint64_t> capacity;
  std::string report_in;

  // exact
  std::optional<std::uint64_t> max_capacity;
  std::uint64_t max_nodes = 1'000'000'000;
  double time_limit = 300.0;
  bool deterministic = false;

  // graphon-check
  std::string system;
  std::string from_covering;
  std::string delta = "1";
  std::string system_out;

  // triangle
  std::string construction = "dyadic";
  unsigned depth = 10;
  double power = 1.0;
  std::string input;

  // bench
  std::vector<std::size_t> n_list{8, 16, 32, 64, 128, 256};
  std::vector<Multiplicity> lambda_list{1, 2, 4, 8};
  std::string summarize;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("HANSEL_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  require(*end == '\0' && env[0] != '-', std::string("HANSEL_SEED is not a nonnegative integer: '") + env + "'");
  return v;
}

void set_threads(int threads) {
  require(threads >= 1, "--threads must be >= 1");
  omp_set_num_threads(threads);
}

// K_n^lambda from --n/--lambda, or a multigraph file from --graph.
Multigraph load_graph(const RunConfig& c) {
  if (!c.graph.empty()) {
    require(!c.n && !c.lambda, "use either --graph or --n/--lambda, not both");
    return io::multigraph_from_json(io::read_json_file(c.graph));
  }
  require(c.n.has_value(), "missing --n (or --graph)");
  return complete_multigraph(*c.n, c.lambda.value_or(1));
}

Multiplicity graph_lambda(const Multigraph& g) { return std::max<Multiplicity>(1, g.max_mult()); }

double resolve_alpha(const RunConfig& c, const Multigraph& g) {
  if (c.alpha == "auto") {
    require(g.n() >= 3, "--alpha auto needs n >= 3; pass an explicit --alpha");
    return choose_alpha(g.n(), graph_lambda(g), AlphaStrategy::automatic());
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(c.alpha, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == c.alpha.size() && used > 0, "--alpha must be 'auto' or a number, got '" + c.alpha + "'");
  require(value > 1.0, "--alpha must exceed 1");
  return value;
}

std::string fmt(double x, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

void print_two_branch(std::ostream& out, const std::string& label, const TwoBranchBound& b) {
  out << label << " = max{" << fmt(b.first, 10) << ", " << fmt(b.second, 10) << "} = " << fmt(b.value(), 10)
      << " (" << (b.first >= b.second ? "degree" : "log") << " branch)\n";
}

// -------------------------------------------------------------------- cover

int run_cover(const RunConfig& c) {
  set_threads(c.threads);
  const Multigraph g = load_graph(c);
  const double alpha = resolve_alpha(c, g);
  const Multiplicity lambda = graph_lambda(g);
  const BuildResult built = build_covering(g, alpha, c.seed);
  const CoverReport report = verify_covering(g, built.covering);
  require(report.valid, "internal: constructed covering failed verification");

  if (!c.output.empty()) io::write_json_file(c.output, io::to_json(built.covering));
  if (!c.trace.empty()) {
    std::ofstream out(c.trace);
    require(static_cast<bool>(out), "cannot write '" + c.trace + "'");
    write_trace_csv(out, built.trace);
  }

  const std::size_t parts = built.covering.parts().size();
  const std::uint64_t cap = built.covering.capacity();
  std::cout << "n = " << g.n() << ", lambda = " << lambda << ", alpha = " << fmt(alpha, 10) << ", seed = " << c.seed
            << '\n';
  std::cout << "parts = " << parts << '\n';
  std::cout << "capacity = " << cap << '\n';
  const TwoBranchBound lower = density_lower(g, lambda);
  print_two_branch(std::cout, "lower bound", lower);
  std::cout << "sandwich: " << fmt(lower.value(), 10) << " <= " << cap << " <= " << g.n() * parts << " (n * parts)\n";
  const double delta_ex = max_exp_degree(g, alpha);
  if (delta_ex >= alpha)
    std::cout << "parts bound = " << fmt(parts_upper_bound(delta_ex, alpha), 10) << " (max exp degree "
              << fmt(delta_ex, 10) << ")\n";
  if (!c.graph.empty()) return kExitOk;
  std::cout << "duplication baseline = " << static_cast<std::uint64_t>(lambda) * bollobas_scott_exact(g.n()) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int run_verify(const RunConfig& c) {
  if (!c.trace.empty()) {
    std::ifstream in(c.trace);
    require(static_cast<bool>(in), "cannot open '" + c.trace + "'");
    const PeelTrace trace = read_trace_csv(in);
    std::optional<double> alpha;
    if (c.alpha != "auto") {
      alpha = std::stod(c.alpha);
      require(*alpha > 1.0, "--alpha must exceed 1");
    }
    bool ok = trace.empty() || trace.back().max_exp_degree_after == 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto& s = trace[i];
      ok = ok && s.iteration == i && s.part_size >= 2 && s.max_exp_degree_after < s.max_exp_degree_before;
      if (alpha) ok = ok && s.max_exp_degree_after <= 0.5 * (1.0 + 1.0 / *alpha) * s.max_exp_degree_before + 1e-9;
      if (i > 0) ok = ok && s.max_exp_degree_before == trace[i - 1].max_exp_degree_after;
    }
    std::cout << "trace: " << trace.size() << " iterations, " << (ok ? "consistent" : "INCONSISTENT") << '\n';
    if (!ok) return kExitError;
    if (c.covering.empty()) return kExitOk;
  }

  require(!c.covering.empty(), "missing --covering");
  const Multigraph g = load_graph(c);
  const Covering cov = io::covering_from_json(io::read_json_file(c.covering));
  const CoverReport r = verify_covering(g, cov);
  std::cout << (r.valid ? "valid" : "INVALID") << ": parts = " << r.parts << ", capacity = " << r.capacity << '\n';
  for (const auto& d : r.deficits)
    std::cout << "  deficit {" << d.u << ", " << d.v << "}: need " << d.required << ", have " << d.achieved << '\n';
  return r.valid ? kExitOk : kExitError;
}

// ------------------------------------------------------------------- bounds

BoundsReport read_report(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  in >> std::ws;
  if (in.peek() == '{') return read_bounds_json(in);

  // CSV: only entries whose names are known carry a kind.
  BoundsReport r;
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == "name,value", "bounds CSV: unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    require(comma != std::string::npos, "bounds CSV: malformed row '" + line + "'");
    const std::string name = line.substr(0, comma);
    const double value = std::stod(line.substr(comma + 1));
    BoundKind kind = BoundKind::kLower;
    if (name == "exact") kind = BoundKind::kExact;
    if (name == "duplication" || name == "covering") kind = BoundKind::kUpper;
    r.entries.push_back({name, value, kind});
  }
  return r;
}

void print_bounds_human(std::ostream& out, const BoundsReport& r) {
  out << "n = " << r.n << ", lambda = " << r.lambda << '\n';
  for (const auto& e : r.entries)
    out << "  " << std::left << std::setw(22) << e.name << std::setw(6) << to_string(e.kind) << ' '
        << fmt(e.value, 12) << '\n';
  const BoundEntry* first = r.find("thm13_degree_branch");
  const BoundEntry* second = r.find("thm13_log_branch");
  if (first && second) {
    out << "thm13 = max{2 lambda (n-1) = " << fmt(first->value, 12) << ", n(log n + floor((lambda-1)/2) log(log n / "
        << "lambda) - lambda - 1) = " << fmt(second->value, 12) << "}\n";
    out << "larger branch: " << (first->value >= second->value ? "degree" : "log") << '\n';
  }
  out << "consistent: " << (r.consistent() ? "yes" : "NO") << '\n';
}

int run_bounds(const RunConfig& c) {
  BoundsReport r;
  if (!c.report_in.empty()) {
    r = read_report(c.report_in);
  } else {
    require(c.n.has_value(), "missing --n (or --report-in)");
    r = bounds_report(*c.n, c.lambda.value_or(1), c.capacity);
  }
  std::ostringstream text;
  if (c.format == "json")
    write_bounds_json(text, r);
  else if (c.format == "csv")
    write_bounds_csv(text, r);
  else
    print_bounds_human(text, r);
  if (c.output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(c.output);
    require(static_cast<bool>(out), "cannot write '" + c.output + "'");
    out << text.str();
  }
  return r.consistent() ? kExitOk : kExitError;
}

// -------------------------------------------------------------------- exact

int run_exact(const RunConfig& c) {
  set_threads(c.threads);
  const Multigraph g = load_graph(c);
  SearchBudget budget = SearchBudget::defaults_for(g);
  if (c.max_capacity) budget.max_capacity = *c.max_capacity;
  budget.max_nodes = c.max_nodes;
  budget.time_limit_seconds = c.time_limit;
  SearchOptions options;
  options.parallel = c.threads > 1 && !c.deterministic;
  const ExactResult r = min_capacity_exact(g, budget, options);

  if (!c.output.empty()) {
    std::ofstream out(c.output);
    require(static_cast<bool>(out), "cannot write '" + c.output + "'");
    write_exact_json(out, g, r);
  }
  if (c.format == "json") {
    write_exact_json(std::cout, g, r);
  } else {
    if (r.status == SearchStatus::kOptimal) {
      std::cout << "value = " << *r.value << '\n';
    } else {
      std::cout << "budget exceeded after " << r.nodes_expanded << " nodes; proven lower bound > " << r.proven_lower
                << '\n';
      if (r.value) std::cout << "incumbent = " << *r.value << '\n';
    }
    std::cout << "nodes expanded = " << r.nodes_expanded << '\n';
    if (r.witness) {
      std::cout << "witness:\n";
      for (const auto& p : r.witness->parts()) {
        std::cout << "  A = {";
        for (std::size_t i = 0; i < p.a().size(); ++i) std::cout << (i ? ", " : "") << p.a()[i];
        std::cout << "}, B = {";
        for (std::size_t i = 0; i < p.b().size(); ++i) std::cout << (i ? ", " : "") << p.b()[i];
        std::cout << "}\n";
      }
    }
  }
  return r.status == SearchStatus::kOptimal ? kExitOk : kExitBudget;
}

// ------------------------------------------------------------ graphon-check

nlohmann::json check_json(const InequalityCheck& c) {
  return {{"bound", std::isfinite(c.bound) ? nlohmann::json(c.bound) : nlohmann::json(nullptr)},
          {"slack", std::isfinite(c.slack) ? nlohmann::json(c.slack) : nlohmann::json(nullptr)},
          {"holds", c.holds}};
}

int run_graphon_check(const RunConfig& c) {
  require(c.system.empty() != c.from_covering.empty(), "pass exactly one of --system or --from-covering");
  GraphonSeparatingSystem s;
  if (!c.system.empty()) {
    s = io::system_from_json(io::read_json_file(c.system));
  } else {
    const Covering cov = io::covering_from_json(io::read_json_file(c.from_covering));
    s = system_from_covering(cov, c.lambda.value_or(1));
  }
  if (!c.system_out.empty()) io::write_json_file(c.system_out, io::to_json(s));

  const Rational delta = parse_rational(c.delta);
  const GraphonBoundsReport r = check_graphon_bounds(s, delta);

  if (c.format == "json") {
    nlohmann::json j{{"capacity", format_rational(r.capacity)},
                     {"fullness", format_rational(r.fullness)},
                     {"epsilon", format_rational(r.epsilon)},
                     {"delta", format_rational(r.delta)},
                     {"sup_norm", format_rational(r.sup_norm)},
                     {"ell_integral", r.ell_integral.str()},
                     {"ell_weighted", r.ell_weighted.str()},
                     {"unweighted", check_json(r.unweighted)},
                     {"integral", check_json(r.integral)},
                     {"violation", r.any_violation()}};
    if (r.weighted) j["weighted"] = check_json(*r.weighted);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "elements = " << s.size() << '\n'
              << "capacity = " << format_rational(r.capacity) << " (" << fmt(to_double(r.capacity), 12) << ")\n"
              << "fullness = " << format_rational(r.fullness) << ", eps = " << format_rational(r.epsilon) << '\n'
              << "delta = " << format_rational(r.delta) << ", sup norm = " << format_rational(r.sup_norm) << '\n'
              << "floor(1/(2 delta)) = " << r.ell_integral << ", floor((1-delta)/(2 delta)) = " << r.ell_weighted
              << '\n';
    const auto line = [](const std::string& name, const InequalityCheck& k) {
      std::cout << name << ": bound " << fmt(k.bound, 12) << ", slack " << fmt(k.slack, 12) << ", "
                << (k.holds ? "holds" : "VIOLATED") << '\n';
    };
    line("log(1/eps) bound", r.unweighted);
    if (r.weighted) {
      std::cout << "weighted bound = max{" << fmt(r.weighted_branches->first, 12) << ", "
                << fmt(r.weighted_branches->second, 12) << "}\n";
      line("weighted bound", *r.weighted);
    }
    line("integral bound", r.integral);
  }
  return r.any_violation() ? kExitError : kExitOk;
}

// ----------------------------------------------------------------- triangle

int run_triangle(const RunConfig& c) {
  if (c.construction == "obs51" && c.input.empty()) {
    const SeriesSums s = obs51_sums(c.depth);
    std::cout << std::setprecision(15) << "partial sum (" << c.depth << " terms) = " << s.partial << '\n'
              << "limit 7 + 5 sqrt(2) = " << s.limit << '\n'
              << "gap = " << s.limit - s.partial << '\n';
    return kExitOk;
  }

  SquareFamily f;
  if (!c.input.empty())
    f = io::squares_from_json(io::read_json_file(c.input));
  else
    f = dyadic_family(c.depth);
  if (!c.output.empty()) io::write_json_file(c.output, io::to_json(f));

  const FamilyMetrics m = family_metrics(f, c.power);
  std::cout << "squares = " << f.squares.size() << '\n'
            << "covered measure = " << format_rational(m.covered_measure) << '\n'
            << "eps = " << format_rational(m.epsilon) << '\n'
            << std::setprecision(15) << "sum side^" << c.power << " = " << m.sum_side_power << '\n'
            << "sum side = " << format_rational(m.sum_sides) << '\n';
  if (m.epsilon <= 0) {
    std::cout << "eps <= 0: no bound to check\n";
    return kExitOk;
  }
  const double sum = to_double(m.sum_sides);
  const double bound = 0.5 * log2_rational(Rational(1) / m.epsilon);
  const bool holds = sum >= bound - 1e-12;
  const bool tight = std::abs(sum - bound) <= 1e-12;
  std::cout << "bound 1/2 log(1/eps) = " << bound << '\n'
            << "tight-bound check: " << (holds && tight ? "PASS" : holds ? "holds (not tight)" : "FAIL") << '\n';
  return holds ? kExitOk : kExitError;
}

// -------------------------------------------------------------------- bench

constexpr const char* kBenchHeader =
    "n,lambda,alpha,parts,capacity,lower_thm13,parts_bound_lemma32,duplication_baseline";

int summarize_bench(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == kBenchHeader, "bench CSV: unexpected header");
  std::size_t rows = 0, failures = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<double> v;
    std::string cell;
    while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
    require(v.size() == 8, "bench CSV: expected 8 columns in '" + line + "'");
    const bool ok = std::ceil(v[5] - 1e-9) <= v[4] && v[4] <= v[0] * v[3] && v[3] <= v[6];
    ++rows;
    if (!ok) {
      ++failures;
      std::cout << "sandwich FAILS: " << line << '\n';
    }
  }
  std::cout << rows << " rows, " << failures << " sandwich failures\n";
  return failures == 0 ? kExitOk : kExitError;
}

int run_bench(const RunConfig& c) {
  if (!c.summarize.empty()) return summarize_bench(c.summarize);
  set_threads(c.threads);
  std::ostringstream csv;
  csv << kBenchHeader << '\n' << std::setprecision(17);
  for (std::size_t n : c.n_list)
    for (Multiplicity lambda : c.lambda_list) {
      const Multigraph g = complete_multigraph(n, lambda);
      const double alpha = resolve_alpha(c, g);
      const BuildResult built = build_covering(g, alpha, c.seed);
      const double delta_ex = std::pow(alpha, lambda) * static_cast<double>(n - 1);
      csv << n << ',' << lambda << ',' << alpha << ',' << built.covering.parts().size() << ','
          << built.covering.capacity() << ',' << multigraph_lower(n, lambda).value() << ','
          << parts_upper_bound(delta_ex, alpha) << ',' << static_cast<std::uint64_t>(lambda) * bollobas_scott_exact(n)
          << '\n';
    }
  if (c.output.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(c.output);
    require(static_cast<bool>(out), "cannot write '" + c.output + "'");
    out << csv.str();
  }
  return kExitOk;
}

// --------------------------------------------------------------------- main

void add_graph_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n, "vertex count of K_n^lambda")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  sub->add_option("--lambda", c.lambda, "edge multiplicity of K_n^lambda")->check(CLI::PositiveNumber);
  sub->add_option("--graph", c.graph, "multigraph JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Bipartite coverings of multigraphs: construction, bounds, exact search, graphon checks"};
  app.require_subcommand(1);

  try {
    c.seed = default_seed();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  auto* cover = app.add_subcommand("cover", "build a covering by iterated exponential max-cut peeling");
  add_graph_options(cover, c);
  cover->add_option("--alpha", c.alpha, "'auto' or a number > 1");
  cover->add_option("--seed", c.seed, "random seed (default $HANSEL_SEED or 0)");
  cover->add_option("-o,--output", c.output, "write the covering as JSON");
  cover->add_option("--trace", c.trace, "write the peeling trace as CSV");
  cover->add_option("--threads", c.threads, "OpenMP threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a covering (or exact result) against a multigraph");
  add_graph_options(verify, c);
  verify->add_option("--covering", c.covering, "covering or exact-result JSON file");
  verify->add_option("--trace", c.trace, "check a peeling trace CSV");
  verify->add_option("--alpha", c.alpha, "alpha used for the trace contraction check");

  auto* bounds = app.add_subcommand("bounds", "evaluate lower/upper bounds for K_n^lambda");
  bounds->add_option("--n", c.n, "vertex count")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  bounds->add_option("--lambda", c.lambda, "multiplicity")->check(CLI::PositiveNumber);
  bounds->add_option("--capacity", c.capacity, "capacity of a known covering (upper entry)");
  bounds->add_option("--format", c.format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
  bounds->add_option("-o,--output", c.output, "write the report to a file");
  bounds->add_option("--report-in", c.report_in, "re-read a JSON or CSV report instead of computing one");

  auto* exact = app.add_subcommand("exact", "exact minimum capacity by exhaustive search (n <= 12)");
  add_graph_options(exact, c);
  exact->add_option("--max-capacity", c.max_capacity, "capacity budget");
  exact->add_option("--max-nodes", c.max_nodes, "node budget");
  exact->add_option("--time-limit", c.time_limit, "seconds")->check(CLI::PositiveNumber);
  exact->add_option("--threads", c.threads, "OpenMP threads")->check(CLI::PositiveNumber);
  exact->add_flag("--deterministic", c.deterministic, "single-threaded search with a reproducible witness");
  exact->add_option("-o,--output", c.output, "write the result as JSON");
  exact->add_option("--format", c.format, "json or human")->check(CLI::IsMember({"json", "human"}));

  auto* graphon = app.add_subcommand("graphon-check", "capacity, fullness and lower bounds of a step system");
  graphon->add_option("--system", c.system, "system JSON file");
  graphon->add_option("--from-covering", c.from_covering, "covering JSON file, scaled by 1/lambda");
  graphon->add_option("--lambda", c.lambda, "scale for --from-covering")->check(CLI::PositiveNumber);
  graphon->add_option("--delta", c.delta, "upper bound on every element, as p/q");
  graphon->add_option("--system-out", c.system_out, "write the system as JSON");
  graphon->add_option("--format", c.format, "json or human")->check(CLI::IsMember({"json", "human"}));

  auto* triangle = app.add_subcommand("triangle", "square families in the triangle below the diagonal");
  triangle->add_option("--construction", c.construction, "dyadic or obs51")
      ->check(CLI::IsMember({"dyadic", "obs51"}));
  triangle->add_option("--depth", c.depth, "recursion depth / number of series terms")->check(CLI::PositiveNumber);
  triangle->add_option("--power", c.power, "exponent d >= 1 for sum side^d");
  triangle->add_option("-o,--output", c.output, "write the family as JSON");
  triangle->add_option("--input", c.input, "read a square family JSON file instead");

  auto* bench = app.add_subcommand("bench", "capacity-vs-bound table for K_n^lambda as CSV");
  bench->add_option("--n-list", c.n_list, "vertex counts")->delimiter(',');
  bench->add_option("--lambda-list", c.lambda_list, "multiplicities")->delimiter(',');
  bench->add_option("--alpha", c.alpha, "'auto' or a number > 1");
  bench->add_option("--seed", c.seed, "random seed");
  bench->add_option("--threads", c.threads, "OpenMP threads")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", c.output, "write CSV to a file");
  bench->add_option("--summarize", c.summarize, "re-read a bench CSV and check every row's sandwich");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*cover) return run_cover(c);
    if (*verify) return run_verify(c);
    if (*bounds) return run_bounds(c);
    if (*exact) return run_exact(c);
    if (*graphon) return run_graphon_check(c);
    if (*triangle) return run_triangle(c);
    if (*bench) return run_bench(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

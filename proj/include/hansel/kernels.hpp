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

// Data-parallel inner loops shared by the peeling and verification code.
//
// Every kernel has an OpenMP version (the one the library calls) and a
// plain serial version with identical semantics. The serial versions are
// the reference the tests and the benchmark compare against; results are
// bitwise identical because each output element is reduced by one thread
// in the same order.

#ifndef HANSEL_KERNELS_HPP
#define HANSEL_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hansel/mgraph.hpp"

namespace hansel::kernels {

/// Dense n x n matrix of alpha^mu(uv), zero where mu(uv) = 0.
std::vector<double> exp_weights(const Multigraph& g, double alpha);
std::vector<double> exp_weights_serial(const Multigraph& g, double alpha);

/// Row sums of exp_weights: d^ex(alpha, v) for every v.
std::vector<double> exp_degrees(const Multigraph& g, double alpha);
std::vector<double> exp_degrees_serial(const Multigraph& g, double alpha);

/// Side membership used by the cut kernels.
enum Side : std::int8_t { kNone = -1, kSideA = 0, kSideB = 1 };

/// For every vertex v with side[v] != kNone, cross[v] is the weight from v
/// to vertices on the other side and same[v] the weight to its own side.
/// Vertices with kNone get zeros.
void side_sums(std::span<const double> weights, std::span<const Side> side,
               std::span<double> cross, std::span<double> same);
void side_sums_serial(std::span<const double> weights, std::span<const Side> side,
                      std::span<double> cross, std::span<double> same);

/// n x n matrix: entry (u, v) is the number of parts that split {u, v}.
std::vector<std::uint32_t> split_counts(const Covering& c);
std::vector<std::uint32_t> split_counts_serial(const Covering& c);

}  // namespace hansel::kernels

#endif  // HANSEL_KERNELS_HPP

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

// JSON file formats.
//
//   multigraph  {"n": int, "edges": [[u, v, mult], ...]}           u < v, mult >= 1
//   covering    {"n": int, "parts": [{"A": [...], "B": [...]}, ...]}
//   system      {"elements": [{"breaks": ["p/q", ...], "values": [["p/q", ...], ...],
//                              "A": [["a/b", "c/d"], ...], "B": [...]}, ...]}
//   squares     {"squares": [{"x0": "p/q", "y0": "p/q", "side": "p/q"}, ...]}
//
// Readers throw DomainError on anything malformed, including duplicate
// pairs and overlapping A/B.

#ifndef HANSEL_IO_HPP
#define HANSEL_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hansel/geometry.hpp"
#include "hansel/graphon.hpp"
#include "hansel/mgraph.hpp"

namespace hansel::io {

nlohmann::json to_json(const Multigraph& g);
nlohmann::json to_json(const Covering& c);
nlohmann::json to_json(const GraphonSeparatingSystem& s);
nlohmann::json to_json(const SquareFamily& f);

Multigraph multigraph_from_json(const nlohmann::json& j);
/// Also accepts an exact-search result and reads its "witness".
Covering covering_from_json(const nlohmann::json& j);
GraphonSeparatingSystem system_from_json(const nlohmann::json& j);
SquareFamily squares_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace hansel::io

#endif  // HANSEL_IO_HPP

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

#ifndef HANSEL_ERROR_HPP
#define HANSEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hansel {

/// Raised whenever an argument violates an operation's precondition
/// (out-of-range vertex, alpha <= 1, malformed file, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace hansel

#endif  // HANSEL_ERROR_HPP

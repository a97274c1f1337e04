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

#ifndef HANSEL_RATIONAL_HPP
#define HANSEL_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hansel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Rejects zero denominators and trailing junk.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// log2 of a positive rational, accurate even when numerator or denominator
/// overflow a double.
double log2_rational(const Rational& value);
double log2_bigint(const BigInt& value);

/// 2^-k as an exact rational.
Rational dyadic(unsigned k);

}  // namespace hansel

#endif  // HANSEL_RATIONAL_HPP

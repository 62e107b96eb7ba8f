// Copyright 2026 The Reebtrap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace reebtrap {

using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. Always held in lowest terms
/// with a positive denominator; every arithmetic operation and comparison
/// is exact. All coordinates in this library are Rationals — no floating
/// point enters any geometric decision.
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses an integer ("5", "-3"), a fraction ("14/9"), or a finite decimal
/// ("3.25"). Decimals are expanded over powers of ten, so the result is the
/// exact decimal value, never a binary-float round trip.
///
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
/// parse_rational(to_string(r)) == r for every r.
std::string to_string(const Rational& value);

}  // namespace reebtrap

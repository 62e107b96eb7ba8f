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

#include "doctest.h"
#include "reebtrap/rational.hpp"
#include "support.hpp"

using namespace reebtrap;

TEST_CASE("parse_rational handles the three spellings") {
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("14/9") == Rational(14, 9));
  CHECK(parse_rational("3.25") == Rational(13, 4));
  CHECK(parse_rational("-3.25") == Rational(-13, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0.500") == Rational(1, 2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("123456789123456789123456789/3") ==
        Rational(Int("123456789123456789123456789"), 3));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 / 2"), ParseError);
  CHECK_THROWS_AS(parse_rational("2."), ParseError);
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(to_string(Rational(14, 9)) == "14/9");
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(5) / Rational(-10)) == "-1/2");  // q stays positive
}

TEST_CASE("parse/render round trip on random rationals") {
  testing::Rng rng(20260810);
  for (int i = 0; i < 500; ++i) {
    const Rational r(testing::rand_int(rng, -100000, 100000),
                     testing::rand_int(rng, 1, 9999));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("arithmetic stays in lowest terms with positive denominator") {
  const Rational a(6, 4), b(-10, 15);
  CHECK(numerator(a) == 3);
  CHECK(denominator(a) == 2);
  CHECK(numerator(b) == -2);
  CHECK(denominator(b) == 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a * b == Rational(-1));
  CHECK(a / b == Rational(-9, 4));
  CHECK_THROWS(a / Rational(0));
}

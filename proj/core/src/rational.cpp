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

#include "reebtrap/rational.hpp"

#include <cctype>

namespace reebtrap {

namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_int(std::string_view text, std::string_view whole) {
  if (!is_integer_text(text)) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Int num = parse_int(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    // Sign belongs to the numerator only.
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    const Int den = parse_int(den_text, text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view head = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_text(frac) || frac.front() == '-' || frac.front() == '+') {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    const bool negative = !head.empty() && head.front() == '-';
    const std::string_view digits =
        (!head.empty() && (head.front() == '-' || head.front() == '+')) ? head.substr(1) : head;
    const Int whole = digits.empty() ? Int(0) : parse_int(digits, text);
    // "3.25" -> 325/100 via text expansion.
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int magnitude = whole * scale + Int(std::string(frac));
    return Rational(negative ? -magnitude : magnitude, scale);
  }

  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace reebtrap

// Copyright 2026 The Dimer Authors.
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

#include "dimer/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dimer/errors.hpp"

namespace dimer {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!AllDigits(digits)) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!AllDigits(den_text)) {
      throw Error(ErrorCode::kParse, "bad denominator in '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional fraction and exponent, converted exactly.
  std::string_view rest = text;
  int exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class exp_value = ParseInteger(rest.substr(e + 1));
    if (!exp_value.fits_sint_p() || abs(exp_value) > 4096) {
      throw Error(ErrorCode::kParse, "exponent out of range in '" + std::string(text) + "'");
    }
    exponent = static_cast<int>(exp_value.get_si());
    rest = rest.substr(0, e);
  }
  std::string mantissa;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !AllDigits(int_part)) ||
      (!frac_part.empty() && !AllDigits(frac_part))) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
  }
  mantissa.append(int_part);
  mantissa.append(frac_part);
  exponent -= static_cast<int>(frac_part.size());
  mpz_class num(mantissa, 10);
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return q;
}

std::string FormatRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string FormatDouble(double value) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

}  // namespace dimer

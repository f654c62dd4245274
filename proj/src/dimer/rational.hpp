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

#ifndef DIMER_RATIONAL_HPP_
#define DIMER_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dimer {

// Exact weights and Pfaffians are carried as GMP rationals.
using Rational = mpq_class;

// Accepts "p", "p/q" and plain decimals such as "-1.25" or "3e-2".
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise; always canonical.
std::string FormatRational(const Rational& value);

inline double ToDouble(const Rational& value) { return value.get_d(); }

// Formats a double with 9 significant digits.
std::string FormatDouble(double value);

}  // namespace dimer

#endif  // DIMER_RATIONAL_HPP_

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

#ifndef DIMER_LAURENT_HPP_
#define DIMER_LAURENT_HPP_

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimer/rational.hpp"

namespace dimer {

using Exponent = std::pair<int, int>;  // (power of z, power of w)

// Laurent polynomial in z, w with exact coefficients; zero terms are never
// stored.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  static LaurentPoly2 Monomial(const Rational& coeff, int m, int n);
  static LaurentPoly2 Constant(const Rational& coeff) { return Monomial(coeff, 0, 0); }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  Rational Coefficient(int m, int n) const;
  void AddTerm(int m, int n, const Rational& coeff);

  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  LaurentPoly2& operator*=(const Rational& scale);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Rational& s) { return a *= s; }
  bool operator==(const LaurentPoly2&) const = default;

  std::complex<double> Evaluate(std::complex<double> z, std::complex<double> w) const;
  // Exact evaluation at nonzero rationals.
  Rational Evaluate(const Rational& z, const Rational& w) const;

  // Sum of |coefficients|, a scale for zero tests.
  double L1Norm() const;

 private:
  std::map<Exponent, Rational> terms_;
};

// canonical = sign * z^shift_m * w^shift_n * input, chosen so the
// lexicographically smallest exponent becomes (0,0) with positive coefficient.
struct CanonicalForm {
  LaurentPoly2 poly;
  int sign = 1;
  int shift_m = 0;
  int shift_n = 0;
};

CanonicalForm Canonicalize(const LaurentPoly2& p);

// "coeff m n" lines, ordered by power of w, then power of z.
std::string FormatTriples(const LaurentPoly2& p);

struct NewtonPolygon {
  std::vector<Exponent> vertices;  // counterclockwise, starting lowest-left
  Rational area;
  long long interior_points = 0;  // g
  long long boundary_points = 0;
  bool nondegenerate = false;      // area > 0
};

// Throws ZeroPolynomial.
NewtonPolygon ComputeNewtonPolygon(const LaurentPoly2& p);

}  // namespace dimer

#endif  // DIMER_LAURENT_HPP_

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

#include "dimer/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dimer/errors.hpp"

namespace dimer {

LaurentPoly2 LaurentPoly2::Monomial(const Rational& coeff, int m, int n) {
  LaurentPoly2 p;
  p.AddTerm(m, n, coeff);
  return p;
}

Rational LaurentPoly2::Coefficient(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly2::AddTerm(int m, int n, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace({m, n}, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e.first, e.second, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& scale) {
  if (sgn(scale) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.AddTerm(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

std::complex<double> LaurentPoly2::Evaluate(std::complex<double> z, std::complex<double> w) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += c.get_d() * std::pow(z, e.first) * std::pow(w, e.second);
  }
  return sum;
}

namespace {

Rational Power(const Rational& base, int exponent) {
  Rational result = 1;
  Rational factor = exponent >= 0 ? base : Rational(1 / base);
  for (int i = 0; i < std::abs(exponent); ++i) result *= factor;
  return result;
}

}  // namespace

Rational LaurentPoly2::Evaluate(const Rational& z, const Rational& w) const {
  if (sgn(z) == 0 || sgn(w) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Laurent polynomials need nonzero arguments");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * Power(z, e.first) * Power(w, e.second);
  return sum;
}

double LaurentPoly2::L1Norm() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += std::abs(c.get_d());
  return s;
}

CanonicalForm Canonicalize(const LaurentPoly2& p) {
  CanonicalForm out;
  if (p.IsZero()) return out;
  const auto& [lowest, coeff] = *p.terms().begin();
  out.shift_m = -lowest.first;
  out.shift_n = -lowest.second;
  out.sign = sgn(coeff) > 0 ? 1 : -1;
  for (const auto& [e, c] : p.terms()) {
    out.poly.AddTerm(e.first + out.shift_m, e.second + out.shift_n, out.sign * c);
  }
  return out;
}

std::string FormatTriples(const LaurentPoly2& p) {
  std::vector<std::pair<Exponent, Rational>> rows(p.terms().begin(), p.terms().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.second, a.first.first) <
           std::make_pair(b.first.second, b.first.first);
  });
  std::ostringstream out;
  for (const auto& [e, c] : rows) {
    out << FormatRational(c) << ' ' << e.first << ' ' << e.second << '\n';
  }
  return out.str();
}

NewtonPolygon ComputeNewtonPolygon(const LaurentPoly2& p) {
  if (p.IsZero()) throw Error(ErrorCode::kZeroPolynomial, "the zero polynomial has no Newton polygon");
  // Monotone chain over the (already lexicographically sorted) support.
  std::vector<Exponent> pts;
  for (const auto& [e, c] : p.terms()) pts.push_back(e);
  auto cross = [](const Exponent& o, const Exponent& a, const Exponent& b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
  };
  NewtonPolygon poly;
  if (pts.size() == 1) {
    poly.vertices = pts;
    poly.area = 0;
    poly.boundary_points = 1;
    return poly;
  }
  std::vector<Exponent> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  poly.vertices = hull;

  long long twice_area = 0;
  long long boundary = 0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Exponent& a = hull[i];
    const Exponent& b = hull[(i + 1) % hull.size()];
    twice_area += static_cast<long long>(a.first) * b.second - static_cast<long long>(b.first) * a.second;
    boundary += std::gcd(std::abs(b.first - a.first), std::abs(b.second - a.second));
  }
  if (hull.size() == 2) boundary /= 2;  // a segment is walked there and back
  poly.area = Rational(static_cast<long>(twice_area), 2L);
  poly.area.canonicalize();
  poly.boundary_points = hull.size() == 2 ? boundary + 1 : boundary;
  poly.nondegenerate = twice_area > 0;
  // Pick: A = I + B/2 - 1.
  poly.interior_points = poly.nondegenerate ? (twice_area - boundary + 2) / 2 : 0;
  return poly;
}

}  // namespace dimer

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

#include "dimer/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "dimer/errors.hpp"
#include "dimer/parallel.hpp"
#include "dimer/rational.hpp"

namespace dimer {

namespace {

constexpr double kZeroThreshold = 1e-12;

// Neumaier summation.
class CompensatedSum {
 public:
  void Add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// e^{i pi k / n} with k reduced mod 2n first.
std::complex<double> RootOfUnity(long long k, int n) {
  long long r = k % (2LL * n);
  if (r < 0) r += 2LL * n;
  if (r == 0) return 1.0;
  if (r == n) return -1.0;
  if (2 * r == n) return {0.0, 1.0};
  if (2 * r == 3LL * n) return {0.0, -1.0};
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / n);
}

}  // namespace

double RiemannSum(const LaurentPoly2& p, int theta, int tau, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "Riemann sum needs n >= 1");
  if (p.IsZero()) throw Error(ErrorCode::kZeroPolynomial, "log of the zero polynomial");
  if (p.terms().size() == 1) return std::log(std::abs(p.terms().begin()->second.get_d()));

  // Group terms by the power of w.
  std::map<int, std::vector<std::pair<int, double>>> by_w;
  for (const auto& [e, c] : p.terms()) by_w[e.second].push_back({e.first, c.get_d()});
  const double threshold = kZeroThreshold * p.L1Norm();

  std::vector<double> rows(n);
  std::vector<char> hit_zero(n, 0);
  ParallelFor(n, [&](int a) {
    const long long ku = 2LL * a + theta;
    std::vector<std::pair<int, std::complex<double>>> coeffs;
    for (const auto& [power, terms] : by_w) {
      std::complex<double> c = 0.0;
      for (const auto& [m, value] : terms) c += value * RootOfUnity(ku * m, n);
      coeffs.push_back({power, c});
    }
    CompensatedSum row;
    for (int b = 0; b < n; ++b) {
      const long long kv = 2LL * b + tau;
      std::complex<double> value = 0.0;
      for (const auto& [power, c] : coeffs) value += c * RootOfUnity(kv * power, n);
      const double mag = std::abs(value);
      if (mag <= threshold) {
        hit_zero[a] = 1;
        return;
      }
      row.Add(std::log(mag));
    }
    rows[a] = row.value();
  });
  if (std::any_of(hit_zero.begin(), hit_zero.end(), [](char c) { return c != 0; })) {
    return -std::numeric_limits<double>::infinity();
  }
  CompensatedSum total;
  for (double r : rows) total.Add(r);
  return total.value() / (static_cast<double>(n) * n);
}

namespace {

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t k = values.size();
  return k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

// Largest set of finite families agreeing pairwise within tol; ties go to the
// lower family indices.
std::vector<int> AgreeingFamilies(const std::array<double, 4>& sums, double tol) {
  std::vector<int> best;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> members;
    bool ok = true;
    for (int f = 0; f < 4 && ok; ++f) {
      if (!(mask & (1 << f))) continue;
      if (!std::isfinite(sums[f])) ok = false;
      for (int g : members) ok = ok && std::abs(sums[f] - sums[g]) < tol;
      members.push_back(f);
    }
    if (ok && members.size() > best.size()) best = members;
  }
  return best;
}

}  // namespace

FreeEnergyResult FreeEnergy(const LaurentPoly2& p, double tol, int start_n, int max_n) {
  if (p.IsZero()) throw Error(ErrorCode::kZeroPolynomial, "log of the zero polynomial");
  if (!(tol > 0) || start_n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "free energy needs positive tolerance and n");
  }
  FreeEnergyResult result;
  for (int n = start_n; n <= max_n; n *= 2) {
    FreeEnergyLevel level{n, {}};
    for (int f = 0; f < 4; ++f) level.sums[f] = RiemannSum(p, f & 1, f >> 1, n);
    result.table.push_back(level);
    std::vector<int> agree = AgreeingFamilies(level.sums, tol);
    if (agree.size() < 3 || result.table.size() < 2) continue;
    // Median of the same families one level down.
    const FreeEnergyLevel& before = result.table[result.table.size() - 2];
    std::vector<double> values, earlier;
    for (int f : agree) {
      values.push_back(level.sums[f]);
      earlier.push_back(before.sums[f]);
    }
    const double median = Median(values);
    const double previous = Median(earlier);
    if (std::isfinite(previous) && std::abs(median - previous) < tol) {
      result.value = median;
      result.selected = agree;
      for (int f = 0; f < 4; ++f) {
        if (std::find(agree.begin(), agree.end(), f) == agree.end()) result.diverging_family = f;
      }
      return result;
    }
  }
  throw Error(ErrorCode::kNoConvergence,
              "families did not settle within " + FormatDouble(tol) + " by n = " +
                  std::to_string(max_n));
}

}  // namespace dimer

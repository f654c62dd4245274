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

#ifndef DIMER_PFAFFIAN_HPP_
#define DIMER_PFAFFIAN_HPP_

#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

#include "dimer/errors.hpp"
#include "dimer/graph.hpp"
#include "dimer/rational.hpp"

namespace dimer {

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {}

  int size() const { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  void SwapRows(int i, int j) {
    for (int c = 0; c < n_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void SwapCols(int i, int j) {
    for (int r = 0; r < n_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

// Skew-symmetric matrix; the setters keep a(j,i) = -a(i,j).
template <class T>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(int n) : m_(n) {}

  int size() const { return m_.size(); }
  const T& at(int i, int j) const { return m_(i, j); }
  void Set(int i, int j, const T& value) {
    m_(i, j) = value;
    m_(j, i) = -value;
  }
  void Add(int i, int j, const T& value) { Set(i, j, m_(i, j) + value); }

  const SquareMatrix<T>& dense() const { return m_; }

  // Simultaneous row and column swap, which keeps skew symmetry.
  void SwapIndices(int i, int j) {
    m_.SwapRows(i, j);
    m_.SwapCols(i, j);
  }

 private:
  SquareMatrix<T> m_;
};

namespace internal {

template <class T>
inline constexpr bool kExact = std::is_same_v<T, Rational>;

template <class T>
bool IsZero(const T& x) {
  if constexpr (kExact<T>) {
    return sgn(x) == 0;
  } else {
    return x == T(0);
  }
}

template <class T>
double Magnitude(const T& x) {
  if constexpr (kExact<T>) {
    return std::abs(x.get_d());
  } else {
    return std::abs(x);
  }
}

// Exact mode takes the first nonzero candidate, float mode the largest.
template <class T, class Get>
int ChoosePivot(int first, int last, Get get) {
  int best = -1;
  double best_mag = 0.0;
  for (int j = first; j < last; ++j) {
    const T& x = get(j);
    if (IsZero(x)) continue;
    if constexpr (kExact<T>) {
      return j;
    } else {
      double mag = Magnitude(x);
      if (best < 0 || mag > best_mag) {
        best = j;
        best_mag = mag;
      }
    }
  }
  return best;
}

}  // namespace internal

// Skew Gaussian elimination: Pf(B A B^T) = det(B) Pf(A) with symmetric
// pivoting. Odd sizes give 0; singular input gives 0.
template <class T>
T Pfaffian(SkewMatrix<T> a) {
  const int n = a.size();
  if (n % 2 != 0) return T(0);
  T result(1);
  for (int k = 0; k < n; k += 2) {
    int pivot = internal::ChoosePivot<T>(k + 1, n, [&](int j) -> const T& { return a.at(k, j); });
    if (pivot < 0) return T(0);
    if (pivot != k + 1) {
      a.SwapIndices(pivot, k + 1);
      result = -result;
    }
    const T p = a.at(k, k + 1);
    result *= p;
    for (int i = k + 2; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        T update = (a.at(i, k) * a.at(k + 1, j) - a.at(i, k + 1) * a.at(k, j)) / p;
        if (!internal::IsZero(update)) a.Add(i, j, update);
      }
    }
  }
  return result;
}

template <class T>
T Determinant(SquareMatrix<T> m) {
  const int n = m.size();
  T result(1);
  for (int k = 0; k < n; ++k) {
    int pivot = internal::ChoosePivot<T>(k, n, [&](int i) -> const T& { return m(i, k); });
    if (pivot < 0) return T(0);
    if (pivot != k) {
      m.SwapRows(pivot, k);
      result = -result;
    }
    const T p = m(k, k);
    result *= p;
    for (int i = k + 1; i < n; ++i) {
      if (internal::IsZero(m(i, k))) continue;
      T factor = m(i, k) / p;
      for (int j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return result;
}

SkewMatrix<double> ToDouble(const SkewMatrix<Rational>& a);

// a(i,j) = sum over edges e between i and j of ±weight(e), + iff K orients
// e from i to j.
SkewMatrix<Rational> KasteleynMatrix(const WeightedGraph& g, const Orientation& k);

// ε^K(D): sign of the permutation listing each dimer tail-then-head under K.
int MatchingSign(const WeightedGraph& g, const Orientation& k, const DimerConfiguration& d);

// Sign of a permutation given as a sequence of 0..n-1.
int PermutationSign(const std::vector<int>& sequence);

enum class Color { kBlack, kWhite };

struct BipartiteReduction {
  SquareMatrix<Rational> m;   // rows black, columns white (index order)
  std::vector<int> blacks;
  std::vector<int> whites;
  // Pf of the blacks-then-whites permuted matrix is block_sign * det(m).
  int block_sign = 1;
  // Pf of the input matrix is pfaffian_sign * det(m).
  int pfaffian_sign = 1;
};

BipartiteReduction BipartiteReduce(const SkewMatrix<Rational>& a, const std::vector<Color>& colors);

}  // namespace dimer

#endif  // DIMER_PFAFFIAN_HPP_

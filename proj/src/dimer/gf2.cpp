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

#include "dimer/gf2.hpp"

#include <utility>

namespace dimer {

Gf2Matrix Gf2Matrix::Identity(int n) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

int Gf2Matrix::Form(Gf2Vector x, Gf2Vector y) const {
  int acc = 0;
  for (int i = 0; i < n_; ++i) {
    if (Bit(x, i)) acc ^= Parity(rows_[i] & y);
  }
  return acc;
}

Gf2Vector Gf2Matrix::Apply(Gf2Vector x) const {
  Gf2Vector out = 0;
  for (int i = 0; i < n_; ++i) {
    if (Parity(rows_[i] & x)) out |= Gf2Vector{1} << i;
  }
  return out;
}

Gf2Matrix Gf2Matrix::Transposed() const {
  Gf2Matrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

int Gf2Matrix::Rank() const {
  std::vector<Gf2Vector> r = rows_;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int i = rank; i < n_; ++i) {
      if (Bit(r[i], col)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(r[rank], r[pivot]);
    for (int i = 0; i < n_; ++i) {
      if (i != rank && Bit(r[i], col)) r[i] ^= r[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<Gf2Matrix> Gf2Matrix::Inverse() const {
  std::vector<Gf2Vector> a = rows_;
  Gf2Matrix inv = Identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int i = col; i < n_; ++i) {
      if (Bit(a[i], col)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv.rows_[col], inv.rows_[pivot]);
    for (int i = 0; i < n_; ++i) {
      if (i != col && Bit(a[i], col)) {
        a[i] ^= a[col];
        inv.rows_[i] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

bool Gf2Matrix::IsSymmetric() const { return *this == Transposed(); }

}  // namespace dimer

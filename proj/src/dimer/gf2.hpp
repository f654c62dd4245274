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

#ifndef DIMER_GF2_HPP_
#define DIMER_GF2_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace dimer {

// Vectors over Z/2 of dimension <= 64, packed into a word.
using Gf2Vector = std::uint64_t;

inline int Parity(Gf2Vector v) { return std::popcount(v) & 1; }
inline int Bit(Gf2Vector v, int i) { return static_cast<int>((v >> i) & 1u); }

// Square matrix over Z/2; row i is a packed vector.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(int n) : n_(n), rows_(n, 0) {}

  static Gf2Matrix Identity(int n);

  int size() const { return n_; }
  int at(int i, int j) const { return Bit(rows_[i], j); }
  void set(int i, int j, int value) {
    if (value & 1) {
      rows_[i] |= Gf2Vector{1} << j;
    } else {
      rows_[i] &= ~(Gf2Vector{1} << j);
    }
  }
  Gf2Vector row(int i) const { return rows_[i]; }

  // Bilinear form x^T A y.
  int Form(Gf2Vector x, Gf2Vector y) const;
  // A x.
  Gf2Vector Apply(Gf2Vector x) const;
  Gf2Matrix Transposed() const;
  int Rank() const;
  std::optional<Gf2Matrix> Inverse() const;

  bool IsSymmetric() const;
  bool operator==(const Gf2Matrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Gf2Vector> rows_;
};

}  // namespace dimer

#endif  // DIMER_GF2_HPP_

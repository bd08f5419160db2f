// Copyright (c) 2026 the qclone authors.
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

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qclone/tensor_space.hpp"

namespace qclone {

// Sparse operator on (C^d)^{x n} with exact rational (real) entries, used
// for state constructions that must stay exact until a spectral routine
// needs floating point.
class RationalSparseOp {
 public:
  RationalSparseOp() = default;
  explicit RationalSparseOp(TensorSpace space) : space_(space) {}

  const TensorSpace& space() const { return space_; }
  const std::map<std::pair<long, long>, Rational>& entries() const {
    return entries_;
  }

  void add(long row, long col, const Rational& v);
  RationalSparseOp operator+(const RationalSparseOp& o) const;
  RationalSparseOp scaled(const Rational& c) const;

  Rational trace() const;
  // Exact marginal on factors (i, j), i < j: trace out everything else.
  RationalSparseOp pair_marginal(int i, int j) const;
  // <a, b> = Tr[a^T b] for real rational operators.
  Rational inner(const RationalSparseOp& o) const;
  bool is_symmetric() const;

  Mat to_dense() const;

 private:
  TensorSpace space_;
  std::map<std::pair<long, long>, Rational> entries_;
};

}  // namespace qclone

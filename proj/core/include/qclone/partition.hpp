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

#include <compare>
#include <string>
#include <vector>

#include "qclone/common.hpp"

namespace qclone {

// Integer partition with weakly decreasing positive parts; the empty list is
// the partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int row(int i) const { return parts_.at(i); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  // Sum over boxes of (column - row), both 0-indexed.
  long content() const;
  int odd_row_count() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Irrep label of the Brauer algebra B_N(d): a partition of N-2k plus the
// number k of removed box pairs.
struct BrauerLabel {
  Partition lambda;
  int k = 0;
  auto operator<=>(const BrauerLabel&) const = default;
};

// Number of standard Young tableaux, by the branching recurrence.
BigInt syt_count(const Partition& lambda);
// Number of semistandard tableaux with entries in {1..d}, by backtracking
// enumeration; 0 when the first column exceeds d.
BigInt ssyt_count(const Partition& lambda, int d);

// All partitions of N in reverse-lexicographic order, optionally restricted
// to at most maxRows rows.
std::vector<Partition> all_partitions(int N, int maxRows = -1);
// Irreducible labels appearing in the Schur-Weyl decomposition of
// (C^d)^{x N}: partitions of N with at most d rows.
std::vector<Partition> irr_symmetric(int N, int d);
// Labels (lambda, k) with lambda'_1 + lambda'_2 <= d.
std::vector<BrauerLabel> irr_brauer(int N, int d);

}  // namespace qclone

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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qclone/common.hpp"
#include "qclone/group_algebra.hpp"

namespace qclone {

// Set-partition diagram on 2k vertices. Right column carries 1..k, left
// column k+1..2k. Blocks are kept in canonical form: each block sorted,
// blocks ordered by least element.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int k, std::vector<std::vector<int>> blocks);

  int k() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  static Diagram identity(int k);
  // Blocks {i, k + sigma(i)} for a permutation in one-line form over {0..k-1}.
  static Diagram from_permutation(const Perm& sigma);

  // Swap vertex i and k+i for each selected row (1-based rows).
  Diagram partial_transpose_rows(const std::set<int>& rows) const;
  // Components after joining i with k+i for every row.
  int closure_loop_count() const;

  std::string to_string() const;       // "1,3|2,6|4,5"
  std::string to_string_full() const;  // "1,3|2,6|4,5@k=3"
  static Diagram parse(const std::string& text);

  auto operator<=>(const Diagram&) const = default;

 private:
  int k_ = 0;
  std::vector<std::vector<int>> blocks_;
};

struct Family {
  enum Kind { Symmetric, PartitionMonoid, Brauer, WalledBrauer, UniformBlock };
  Kind kind = PartitionMonoid;
  // Wall split for WalledBrauer: first `wall` rows on one side, rest on the
  // other; total k = wall + (k - wall).
  int wall = 0;

  static Family symmetric() { return {Symmetric, 0}; }
  static Family partition_monoid() { return {PartitionMonoid, 0}; }
  static Family brauer() { return {Brauer, 0}; }
  static Family walled_brauer(int kLeft) { return {WalledBrauer, kLeft}; }
  static Family uniform_block() { return {UniformBlock, 0}; }
  std::string name() const;
};

// Glue q's left column to p's right column, drop the loops, return the
// composite and the number of removed loops.
std::pair<Diagram, int> compose(const Diagram& p, const Diagram& q);

bool is_member(const Diagram& p, const Family& family);
std::vector<Diagram> enumerate_family(const Family& family, int k);

}  // namespace qclone

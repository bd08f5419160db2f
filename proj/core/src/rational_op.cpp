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

#include "qclone/rational_op.hpp"

namespace qclone {

void RationalSparseOp::add(long row, long col, const Rational& v) {
  if (row < 0 || col < 0 || row >= space_.dim() || col >= space_.dim())
    throw DimensionError("RationalSparseOp::add: index out of range");
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (v != 0) entries_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

RationalSparseOp RationalSparseOp::operator+(const RationalSparseOp& o) const {
  if (space_.d != o.space_.d || space_.n != o.space_.n)
    throw DimensionError("RationalSparseOp: space mismatch");
  RationalSparseOp out = *this;
  for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, v);
  return out;
}

RationalSparseOp RationalSparseOp::scaled(const Rational& c) const {
  RationalSparseOp out(space_);
  if (c == 0) return out;
  for (const auto& [rc, v] : entries_) out.entries_[rc] = v * c;
  return out;
}

Rational RationalSparseOp::trace() const {
  Rational t = 0;
  for (const auto& [rc, v] : entries_)
    if (rc.first == rc.second) t += v;
  return t;
}

RationalSparseOp RationalSparseOp::pair_marginal(int i, int j) const {
  const int d = space_.d, n = space_.n;
  if (i < 0 || j < 0 || i >= j || j >= n)
    throw DimensionError("pair_marginal: need 0 <= i < j < n");
  RationalSparseOp out(TensorSpace{d, 2});
  std::vector<int> ri(n), ci(n);
  for (const auto& [rc, v] : entries_) {
    long tmp = rc.first;
    for (int f = n - 1; f >= 0; --f) {
      ri[f] = static_cast<int>(tmp % d);
      tmp /= d;
    }
    tmp = rc.second;
    for (int f = n - 1; f >= 0; --f) {
      ci[f] = static_cast<int>(tmp % d);
      tmp /= d;
    }
    bool diagonalElsewhere = true;
    for (int f = 0; f < n; ++f)
      if (f != i && f != j && ri[f] != ci[f]) {
        diagonalElsewhere = false;
        break;
      }
    if (!diagonalElsewhere) continue;
    out.add(ri[i] * d + ri[j], ci[i] * d + ci[j], v);
  }
  return out;
}

Rational RationalSparseOp::inner(const RationalSparseOp& o) const {
  Rational t = 0;
  for (const auto& [rc, v] : entries_) {
    auto it = o.entries_.find(rc);
    if (it != o.entries_.end()) t += v * it->second;
  }
  return t;
}

bool RationalSparseOp::is_symmetric() const {
  for (const auto& [rc, v] : entries_) {
    auto it = entries_.find({rc.second, rc.first});
    if (it == entries_.end() || it->second != v) return false;
  }
  return true;
}

Mat RationalSparseOp::to_dense() const {
  space_.check_cap();
  Mat out = Mat::Zero(space_.dim(), space_.dim());
  for (const auto& [rc, v] : entries_)
    out(rc.first, rc.second) = static_cast<double>(v);
  return out;
}

}  // namespace qclone

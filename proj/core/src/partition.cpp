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

#include "qclone/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qclone {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw DimensionError("invalid partition");
    n_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0]);
  for (int col = 1; col <= parts_[0]; ++col)
    out[col - 1] =
        static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                       [col](int p) { return p >= col; }));
  return Partition(out);
}

long Partition::content() const {
  long c = 0;
  for (size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) c += j - static_cast<long>(i);
  return c;
}

int Partition::odd_row_count() const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2; }));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {
BigInt syt_rec(std::vector<int> lam,
               std::map<std::vector<int>, BigInt>& memo) {
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (lam.empty()) return 1;
  auto it = memo.find(lam);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i + 1 == lam.size() || lam[i] > lam[i + 1]) {
      std::vector<int> mu = lam;
      mu[i] -= 1;
      total += syt_rec(mu, memo);
    }
  }
  memo[lam] = total;
  return total;
}
}  // namespace

BigInt syt_count(const Partition& lambda) {
  std::map<std::vector<int>, BigInt> memo;
  return syt_rec(lambda.parts(), memo);
}

namespace {
BigInt ssyt_rec(const std::vector<int>& lam, int d,
                std::vector<std::vector<int>>& fill, int cell,
                const std::vector<std::pair<int, int>>& cells) {
  if (cell == static_cast<int>(cells.size())) return 1;
  auto [i, j] = cells[cell];
  int lo = 1;
  if (j > 0) lo = std::max(lo, fill[i][j - 1]);      // weak along rows
  if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);  // strict down columns
  BigInt total = 0;
  for (int v = lo; v <= d; ++v) {
    fill[i][j] = v;
    total += ssyt_rec(lam, d, fill, cell + 1, cells);
  }
  return total;
}
}  // namespace

BigInt ssyt_count(const Partition& lambda, int d) {
  if (d < 1) throw DimensionError("ssyt_count: d must be >= 1");
  if (lambda.rows() > d) return 0;
  if (lambda.n() > 12 || d > 6)
    throw CapExceeded("ssyt_count enumeration cap (n <= 12, d <= 6)");
  const auto& lam = lambda.parts();
  std::vector<std::vector<int>> fill(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) fill[i].assign(lam[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  return ssyt_rec(lam, d, fill, 0, cells);
}

namespace {
void partitions_rec(int n, int maxPart, int maxRows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (maxRows >= 0 && static_cast<int>(cur.size()) >= maxRows) return;
  for (int first = std::min(n, maxPart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, maxRows, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> all_partitions(int N, int maxRows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(N, N == 0 ? 1 : N, maxRows, cur, out);
  if (N == 0) out = {Partition{}};
  return out;
}

std::vector<Partition> irr_symmetric(int N, int d) {
  return all_partitions(N, d);
}

std::vector<BrauerLabel> irr_brauer(int N, int d) {
  std::vector<BrauerLabel> out;
  for (int k = 0; 2 * k <= N; ++k) {
    for (const auto& lam : all_partitions(N - 2 * k)) {
      Partition conj = lam.conjugate();
      int c1 = conj.rows() > 0 ? conj.row(0) : 0;
      int c2 = conj.rows() > 1 ? conj.row(1) : 0;
      if (c1 + c2 <= d) out.push_back({lam, k});
    }
  }
  return out;
}

}  // namespace qclone

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

#include "qclone/group_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace qclone {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& sigma, const Perm& tau) {
  if (sigma.size() != tau.size())
    throw DimensionError("perm_compose: degree mismatch");
  Perm out(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) out[i] = sigma[tau[i]];
  return out;
}

Perm perm_inverse(const Perm& sigma) {
  Perm out(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) out[sigma[i]] = static_cast<int>(i);
  return out;
}

int perm_sign(const Perm& sigma) {
  int inv = 0;
  for (size_t i = 0; i < sigma.size(); ++i)
    for (size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

std::vector<Perm> all_perms(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void SymAlgebraElement::add(const Perm& sigma, const Rational& coeff) {
  if (static_cast<int>(sigma.size()) != n_)
    throw DimensionError("SymAlgebraElement: degree mismatch");
  auto it = terms_.find(sigma);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(sigma, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymAlgebraElement SymAlgebraElement::operator+(
    const SymAlgebraElement& other) const {
  SymAlgebraElement out = *this;
  for (const auto& [p, c] : other.terms_) out.add(p, c);
  return out;
}

SymAlgebraElement SymAlgebraElement::operator*(
    const SymAlgebraElement& other) const {
  SymAlgebraElement out(n_);
  for (const auto& [p, cp] : terms_)
    for (const auto& [q, cq] : other.terms_)
      out.add(perm_compose(p, q), cp * cq);
  return out;
}

SymAlgebraElement SymAlgebraElement::scaled(const Rational& c) const {
  SymAlgebraElement out(n_);
  if (c == 0) return out;
  for (const auto& [p, cp] : terms_) out.add(p, cp * c);
  return out;
}

bool SymAlgebraElement::operator==(const SymAlgebraElement& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

SymAlgebraElement SymAlgebraElement::identity(int n) {
  SymAlgebraElement e(n);
  e.add(perm_identity(n), 1);
  return e;
}

namespace {
void syt_rec(const std::vector<int>& lam, int k, int n,
             std::vector<std::vector<int>>& fill,
             std::vector<std::vector<std::vector<int>>>& out) {
  if (k > n) {
    out.push_back(fill);
    return;
  }
  for (size_t i = 0; i < lam.size(); ++i) {
    int j = static_cast<int>(
        std::count_if(fill[i].begin(), fill[i].end(), [](int v) { return v; }));
    if (j >= lam[i]) continue;
    if (i > 0 && fill[i - 1][j] == 0) continue;
    fill[i][j] = k;
    syt_rec(lam, k + 1, n, fill, out);
    fill[i][j] = 0;
  }
}

// All permutations fixing each block of `blocks` setwise, as a product set.
std::vector<Perm> block_stabilizer(const std::vector<std::vector<int>>& blocks,
                                   int n) {
  std::vector<Perm> result = {perm_identity(n)};
  for (const auto& b : blocks) {
    std::vector<Perm> next;
    std::vector<int> target = b;
    std::sort(target.begin(), target.end());
    do {
      Perm m = perm_identity(n);
      for (size_t i = 0; i < b.size(); ++i) m[b[i]] = target[i];
      for (const auto& r : result) next.push_back(perm_compose(r, m));
    } while (std::next_permutation(target.begin(), target.end()));
    result = std::move(next);
  }
  return result;
}

SymAlgebraElement symmetrizer_for(const Partition& lambda,
                                  const std::vector<std::vector<int>>& T) {
  int n = lambda.n();
  std::vector<std::vector<int>> rowBlocks, colBlocks;
  for (const auto& row : T) {
    std::vector<int> b;
    for (int v : row) b.push_back(v - 1);
    rowBlocks.push_back(b);
  }
  int ncols = lambda.rows() ? lambda.row(0) : 0;
  for (int j = 0; j < ncols; ++j) {
    std::vector<int> b;
    for (const auto& row : T)
      if (j < static_cast<int>(row.size())) b.push_back(row[j] - 1);
    colBlocks.push_back(b);
  }
  SymAlgebraElement out(n);
  for (const auto& r : block_stabilizer(rowBlocks, n))
    for (const auto& c : block_stabilizer(colBlocks, n))
      out.add(perm_compose(r, c), perm_sign(c));
  return out;
}
}  // namespace

std::vector<std::vector<std::vector<int>>> standard_tableaux(
    const Partition& lambda) {
  const auto& lam = lambda.parts();
  std::vector<std::vector<int>> fill(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) fill[i].assign(lam[i], 0);
  std::vector<std::vector<std::vector<int>>> out;
  syt_rec(lam, 1, lambda.n(), fill, out);
  return out;
}

SymAlgebraElement young_symmetrizer(const Partition& lambda, int cap) {
  if (lambda.n() > cap) throw CapExceeded("young_symmetrizer cap");
  // canonical tableau: row-major consecutive filling
  std::vector<std::vector<int>> T(lambda.rows());
  int v = 1;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.row(i); ++j) T[i].push_back(v++);
  return symmetrizer_for(lambda, T);
}

namespace {
// Irreducible character chi_lambda on a cycle type, by rim-hook removal on
// the beta-number encoding of lambda.
BigInt character_value(std::vector<int> lambda, std::vector<int> cycles) {
  if (cycles.empty()) return lambda.empty() ? 1 : 0;
  int r = cycles.back();
  cycles.pop_back();
  int L = static_cast<int>(lambda.size());
  std::vector<long> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
  BigInt total = 0;
  for (int i = 0; i < L; ++i) {
    long target = beta[i] - r;
    if (target < 0) continue;
    bool collide = false;
    int jumped = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == target) collide = true;
      if (beta[j] > target && beta[j] < beta[i]) ++jumped;
    }
    if (collide) continue;
    std::vector<long> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nl;
    for (int j = 0; j < L; ++j) {
      int part = static_cast<int>(nb[j] - (L - 1 - j));
      if (part > 0) nl.push_back(part);
    }
    BigInt sub = character_value(nl, cycles);
    if (jumped % 2)
      total -= sub;
    else
      total += sub;
  }
  return total;
}

std::vector<int> cycle_type(const Perm& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = sigma[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}
}  // namespace

SymAlgebraElement isotypic_projector(const Partition& lambda, int cap) {
  if (lambda.n() > cap) throw CapExceeded("isotypic_projector cap");
  int n = lambda.n();
  Rational scale(syt_count(lambda), factorial(n));
  std::map<std::vector<int>, BigInt> charCache;
  SymAlgebraElement total(n);
  for (const Perm& sigma : all_perms(n)) {
    std::vector<int> type = cycle_type(sigma);
    auto it = charCache.find(type);
    if (it == charCache.end())
      it = charCache.emplace(type, character_value(lambda.parts(), type))
               .first;
    if (it->second != 0) total.add(sigma, scale * Rational(it->second));
  }
  return total;
}

}  // namespace qclone

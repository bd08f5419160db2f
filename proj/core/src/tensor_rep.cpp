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

#include "qclone/tensor_rep.hpp"

namespace qclone {

namespace {
// Visit the nonzero (row, col) pairs of psi(p): one free index per block.
template <typename F>
void visit_nonzeros(const Diagram& p, int d, F&& emit) {
  const int k = p.k();
  const auto& blocks = p.blocks();
  const int nb = static_cast<int>(blocks.size());
  std::vector<int> choice(nb, 0);
  while (true) {
    long row = 0, col = 0;
    // vertex v belongs to block owner[v]; row reads vertices k+1..2k,
    // col reads 1..k
    static thread_local std::vector<int> owner;
    owner.assign(2 * k + 1, -1);
    for (int b = 0; b < nb; ++b)
      for (int v : blocks[b]) owner[v] = b;
    for (int i = 1; i <= k; ++i) {
      row = row * d + choice[owner[k + i]];
      col = col * d + choice[owner[i]];
    }
    emit(row, col);
    int pos = nb - 1;
    while (pos >= 0 && ++choice[pos] == d) choice[pos--] = 0;
    if (pos < 0) break;
  }
}
}  // namespace

Mat tensor_rep(const Diagram& p, int d) {
  TensorSpace space{d, p.k()};
  space.check_cap();
  Mat out = Mat::Zero(space.dim(), space.dim());
  visit_nonzeros(p, d, [&](long r, long c) { out(r, c) = 1.0; });
  return out;
}

RationalSparseOp tensor_rep_exact(const Diagram& p, int d) {
  RationalSparseOp out(TensorSpace{d, p.k()});
  visit_nonzeros(p, d, [&](long r, long c) { out.add(r, c, 1); });
  return out;
}

Mat tensor_rep(const DiagramAlgebraElement& x, int d) {
  TensorSpace space{d, x.k()};
  space.check_cap();
  Mat out = Mat::Zero(space.dim(), space.dim());
  for (const auto& [p, coeff] : x.terms())
    out += static_cast<double>(coeff.evaluate(d)) * tensor_rep(p, d);
  return out;
}

Mat perm_rep(const Perm& sigma, int d) {
  const int n = static_cast<int>(sigma.size());
  TensorSpace space{d, n};
  space.check_cap();
  Mat out = Mat::Zero(space.dim(), space.dim());
  std::vector<int> colIdx(n), rowIdx(n);
  for (long c = 0; c < space.dim(); ++c) {
    long tmp = c;
    for (int f = n - 1; f >= 0; --f) {
      colIdx[f] = static_cast<int>(tmp % d);
      tmp /= d;
    }
    for (int f = 0; f < n; ++f) rowIdx[sigma[f]] = colIdx[f];
    long r = 0;
    for (int f = 0; f < n; ++f) r = r * d + rowIdx[f];
    out(r, c) = 1.0;
  }
  return out;
}

Mat sym_algebra_rep(const SymAlgebraElement& x, int d) {
  TensorSpace space{d, x.degree()};
  space.check_cap();
  Mat out = Mat::Zero(space.dim(), space.dim());
  for (const auto& [sigma, coeff] : x.terms())
    out += static_cast<double>(coeff) * perm_rep(sigma, d);
  return out;
}

BigInt trace_rep(const Diagram& p, int d) {
  BigInt r = 1;
  for (int i = 0; i < p.closure_loop_count(); ++i) r *= d;
  return r;
}

}  // namespace qclone

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

#include "qclone/tensor_space.hpp"

#include <algorithm>

namespace qclone {

void TensorSpace::check_cap() const {
  if (dim() > dense_cap())
    throw CapExceeded("tensor space dimension " + std::to_string(dim()) +
                      " exceeds dense cap " + std::to_string(dense_cap()));
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat embed_pair(const Mat& pairOp, int i, int j, const TensorSpace& space) {
  const int d = space.d, n = space.n;
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw DimensionError("embed_pair: bad factor indices");
  if (pairOp.rows() != d * d || pairOp.cols() != d * d)
    throw DimensionError("embed_pair: pair operator size");
  space.check_cap();
  const long dim = space.dim();
  Mat out = Mat::Zero(dim, dim);
  std::vector<int> rest;
  for (int f = 0; f < n; ++f)
    if (f != i && f != j) rest.push_back(f);
  const long strideI = ipow(d, n - 1 - i), strideJ = ipow(d, n - 1 - j);
  const long restCombos = ipow(d, n - 2);
  for (long rc = 0; rc < restCombos; ++rc) {
    long base = 0;
    long tmp = rc;
    for (int f = static_cast<int>(rest.size()) - 1; f >= 0; --f) {
      base += (tmp % d) * ipow(d, n - 1 - rest[f]);
      tmp /= d;
    }
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e) {
            Complex v = pairOp(a * d + b, c * d + e);
            if (v == Complex(0, 0)) continue;
            out(base + a * strideI + b * strideJ,
                base + c * strideI + e * strideJ) += v;
          }
  }
  return out;
}

Mat partial_trace(const Mat& a, const TensorSpace& space,
                  const std::vector<int>& drop) {
  const int d = space.d, n = space.n;
  if (a.rows() != space.dim() || a.cols() != space.dim())
    throw DimensionError("partial_trace: size mismatch");
  std::vector<bool> dropped(n, false);
  for (int f : drop) {
    if (f < 0 || f >= n) throw DimensionError("partial_trace: bad factor");
    dropped[f] = true;
  }
  std::vector<int> keep;
  for (int f = 0; f < n; ++f)
    if (!dropped[f]) keep.push_back(f);
  const long outDim = ipow(d, static_cast<int>(keep.size()));
  const long dropDim = ipow(d, static_cast<int>(drop.size()));
  Mat out = Mat::Zero(outDim, outDim);
  std::vector<int> keepIdxR(keep.size()), keepIdxC(keep.size());
  for (long r = 0; r < outDim; ++r) {
    long tmp = r;
    for (int f = static_cast<int>(keep.size()) - 1; f >= 0; --f) {
      keepIdxR[f] = static_cast<int>(tmp % d);
      tmp /= d;
    }
    for (long c = 0; c < outDim; ++c) {
      tmp = c;
      for (int f = static_cast<int>(keep.size()) - 1; f >= 0; --f) {
        keepIdxC[f] = static_cast<int>(tmp % d);
        tmp /= d;
      }
      Complex sum(0, 0);
      for (long t = 0; t < dropDim; ++t) {
        long row = 0, col = 0;
        long tt = t;
        std::vector<int> dropIdx(drop.size());
        for (int f = static_cast<int>(drop.size()) - 1; f >= 0; --f) {
          dropIdx[f] = static_cast<int>(tt % d);
          tt /= d;
        }
        size_t ki = 0, di = 0;
        for (int f = 0; f < n; ++f) {
          int rv, cv;
          if (dropped[f]) {
            rv = cv = dropIdx[di++];
          } else {
            rv = keepIdxR[ki];
            cv = keepIdxC[ki];
            ++ki;
          }
          row = row * d + rv;
          col = col * d + cv;
        }
        sum += a(row, col);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

Mat partial_transpose(const Mat& a, const TensorSpace& space,
                      const std::vector<int>& rows) {
  const int d = space.d, n = space.n;
  if (a.rows() != space.dim() || a.cols() != space.dim())
    throw DimensionError("partial_transpose: size mismatch");
  std::vector<bool> flip(n, false);
  for (int f : rows) {
    if (f < 0 || f >= n) throw DimensionError("partial_transpose: bad factor");
    flip[f] = true;
  }
  const long dim = space.dim();
  Mat out(dim, dim);
  std::vector<int> ri(n), ci(n);
  for (long r = 0; r < dim; ++r) {
    long tmp = r;
    for (int f = n - 1; f >= 0; --f) {
      ri[f] = static_cast<int>(tmp % d);
      tmp /= d;
    }
    for (long c = 0; c < dim; ++c) {
      tmp = c;
      for (int f = n - 1; f >= 0; --f) {
        ci[f] = static_cast<int>(tmp % d);
        tmp /= d;
      }
      long srcR = 0, srcC = 0;
      for (int f = 0; f < n; ++f) {
        srcR = srcR * d + (flip[f] ? ci[f] : ri[f]);
        srcC = srcC * d + (flip[f] ? ri[f] : ci[f]);
      }
      out(r, c) = a(srcR, srcC);
    }
  }
  return out;
}

bool is_hermitian(const Mat& a, double tol) {
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

}  // namespace qclone

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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qclone/common.hpp"

namespace qclone {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Tensor factor bookkeeping for (C^d)^{x n}. Basis order is big-endian:
// index = sum_j i_j d^{n-1-j}, factor 0 leftmost.
struct TensorSpace {
  int d = 2;
  int n = 1;
  long dim() const { return ipow(d, n); }
  void check_cap() const;
};

Mat kron(const Mat& a, const Mat& b);

// Place a two-factor operator on factors (i, j) of an n-factor space,
// identity elsewhere. i != j; i may exceed j (factor order is respected).
Mat embed_pair(const Mat& pairOp, int i, int j, const TensorSpace& space);

// Trace out the factors listed in `drop`.
Mat partial_trace(const Mat& a, const TensorSpace& space,
                  const std::vector<int>& drop);
// Transpose the row/column indices of the factors in `rows`.
Mat partial_transpose(const Mat& a, const TensorSpace& space,
                      const std::vector<int>& rows);

bool is_hermitian(const Mat& a, double tol = 1e-12);

}  // namespace qclone

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

#include "qclone/states.hpp"

#include <cmath>

#include "qclone/group_algebra.hpp"
#include "qclone/tensor_rep.hpp"

namespace qclone {

Vec max_entangled_vec(int d) {
  Vec v = Vec::Zero(static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i) v(static_cast<long>(i) * d + i) = 1.0;
  return v / std::sqrt(static_cast<double>(d));
}

Mat max_entangled(int d) {
  Vec v = max_entangled_vec(d);
  return v * v.adjoint();
}

Mat max_mixed_pair(int d) {
  return Mat::Identity(static_cast<long>(d) * d, static_cast<long>(d) * d) /
         static_cast<double>(d * d);
}

Mat swap_op(int d) {
  Mat s = Mat::Zero(static_cast<long>(d) * d, static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      s(static_cast<long>(i) * d + j, static_cast<long>(j) * d + i) = 1.0;
  return s;
}

Mat flip_state(int d) { return swap_op(d) / static_cast<double>(d); }

Mat diagonal_corr_state(int d) {
  Mat x = Mat::Zero(static_cast<long>(d) * d, static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i)
    x(static_cast<long>(i) * d + i, static_cast<long>(i) * d + i) =
        1.0 / static_cast<double>(d);
  return x;
}

Mat isotropic_state(double lambda, int d) {
  double lo = -1.0 / (d * d - 1);
  if (lambda < lo - 1e-12 || lambda > 1 + 1e-12)
    throw DimensionError("isotropic_state: lambda out of range");
  return lambda * max_entangled(d) + (1 - lambda) * max_mixed_pair(d);
}

Mat werner_state(double lambda, int d) {
  if (lambda < 1.0 / (1 - d) - 1e-12 || lambda > 1.0 / (1 + d) + 1e-12)
    throw DimensionError("werner_state: lambda out of range");
  return lambda * flip_state(d) + (1 - lambda) * max_mixed_pair(d);
}

Mat symmetric_projector(int n, int d) {
  TensorSpace space{d, n};
  space.check_cap();
  Mat p = Mat::Zero(space.dim(), space.dim());
  double nf = 0;
  for (const auto& sigma : all_perms(n)) {
    p += perm_rep(sigma, d);
    nf += 1.0;
  }
  return p / nf;
}

double fidelity_pure(const Mat& rhoPure, const Mat& sigma) {
  double trace = std::real(rhoPure.trace());
  double purity = std::real((rhoPure * rhoPure).trace());
  if (std::abs(trace - 1.0) > 1e-8 || std::abs(purity - 1.0) > 1e-8)
    throw DimensionError("fidelity_pure: reference must be a rank-1 state");
  return std::real((rhoPure * sigma).trace());
}

}  // namespace qclone

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

#include "qclone/spectral.hpp"

#include <Eigen/Eigenvalues>

namespace qclone {

namespace {
void require_hermitian(const Mat& a) {
  if (!is_hermitian(a, 1e-10))
    throw DimensionError("spectral routine: matrix is not hermitian");
}

// Power iteration on a + shift*I so the target eigenvalue dominates.
std::pair<double, Vec> power_top(const Mat& a) {
  const double shift = a.cwiseAbs().rowwise().sum().maxCoeff() + 1.0;
  Vec v = Vec::Ones(a.rows()).normalized();
  double lam = 0.0;
  for (int it = 0; it < 100000; ++it) {
    Vec w = a * v + shift * v;
    double nw = w.norm();
    if (nw == 0.0) return {-shift, v};
    w /= nw;
    double newLam = std::real((w.adjoint() * (a * w))(0));
    if (it > 2 && std::abs(newLam - lam) <
                      1e-10 * std::max(1.0, std::abs(newLam))) {
      return {newLam, w};
    }
    lam = newLam;
    v = w;
  }
  throw VerificationError("power iteration did not converge");
}
}  // namespace

double lambda_max(const Mat& a) {
  require_hermitian(a);
  if (a.rows() > dense_cap()) return power_top(a).first;
  Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double lambda_min(const Mat& a) {
  require_hermitian(a);
  if (a.rows() > dense_cap()) return -power_top(Mat(-a)).first;
  Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Vec top_eigvec(const Mat& a) {
  require_hermitian(a);
  if (a.rows() > dense_cap()) return power_top(a).second;
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  return es.eigenvectors().col(a.rows() - 1);
}

std::vector<Vec> top_eigenspace(const Mat& a, double relTol) {
  require_hermitian(a);
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const auto& vals = es.eigenvalues();
  double top = vals(a.rows() - 1);
  double tol = relTol * std::max(1.0, std::abs(top));
  std::vector<Vec> out;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (top - vals(i) <= tol) out.push_back(es.eigenvectors().col(i));
  return out;
}

bool is_psd(const Mat& a, double tol) {
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return lambda_min((a + a.adjoint()) / 2.0) >= -tol * scale;
}

}  // namespace qclone

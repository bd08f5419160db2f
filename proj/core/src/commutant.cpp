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

#include "qclone/commutant.hpp"

#include <Eigen/SVD>

#include "qclone/random.hpp"
#include "qclone/tensor_rep.hpp"

namespace qclone {

namespace {
int rank_of_span(const std::vector<Mat>& mats, double tol = 1e-8) {
  if (mats.empty()) return 0;
  const long dim = mats[0].rows() * mats[0].cols();
  Mat stacked(static_cast<long>(mats.size()), dim);
  for (size_t i = 0; i < mats.size(); ++i)
    stacked.row(static_cast<long>(i)) =
        Eigen::Map<const Vec>(mats[i].data(), dim).transpose();
  Eigen::JacobiSVD<Mat> svd(stacked);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank;
}

Mat tensor_power(const Mat& g, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, g);
  return out;
}

Mat dual_group_sample(const Family& family, int d, Rng& rng) {
  switch (family.kind) {
    case Family::Symmetric:
    case Family::WalledBrauer:
      return haar_unitary(d, rng);
    case Family::Brauer:
      return haar_orthogonal(d, rng).cast<Complex>();
    case Family::UniformBlock: {
      // diagonal unitary times a permutation matrix
      Mat g = Mat::Zero(d, d);
      Perm sigma = perm_identity(d);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
      for (int i = 0; i < d; ++i)
        g(sigma[i], i) = std::polar(1.0, angle(rng));
      return g;
    }
    case Family::PartitionMonoid: {
      Mat g = Mat::Zero(d, d);
      Perm sigma = perm_identity(d);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      for (int i = 0; i < d; ++i) g(sigma[i], i) = 1.0;
      return g;
    }
  }
  throw DimensionError("dual_group_sample: unknown family");
}
}  // namespace

CommutantReport commutant_dimension(const Family& family, int n, int d,
                                    int samples, std::uint64_t seed) {
  TensorSpace space{d, n};
  space.check_cap();
  CommutantReport report;
  std::vector<Mat> diagramMats;
  for (const auto& p : enumerate_family(family, n))
    diagramMats.push_back(tensor_rep(p, d));
  report.diagramSpanRank = rank_of_span(diagramMats);

  Rng rng = make_rng(seed);
  std::vector<Mat> groupMats;
  for (int s = 0; s < samples; ++s) {
    Mat g = dual_group_sample(family, d, rng);
    if (family.kind == Family::WalledBrauer) {
      // mixed power: g on the rows before the wall, conj(g) after it
      Mat acc = Mat::Identity(1, 1);
      for (int f = 0; f < n; ++f)
        acc = kron(acc, f < family.wall ? g : Mat(g.conjugate()));
      groupMats.push_back(acc);
    } else {
      groupMats.push_back(tensor_power(g, n));
    }
  }
  report.groupSpanRank = rank_of_span(groupMats);

  for (const auto& gm : groupMats)
    for (const auto& dm : diagramMats) {
      double norm = (gm * dm - dm * gm).cwiseAbs().maxCoeff();
      report.maxCommutatorNorm = std::max(report.maxCommutatorNorm, norm);
    }
  return report;
}

}  // namespace qclone

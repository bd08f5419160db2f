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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qclone/cloning.hpp"
#include "qclone/random.hpp"
#include "qclone/spectral.hpp"
#include "qclone/states.hpp"

using namespace qclone;

namespace {
std::vector<double> random_direction(int N, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> a(N);
  double sum = 0;
  for (double& v : a) sum += (v = u(rng));
  for (double& v : a) v /= sum;
  return a;
}
}  // namespace

TEST_CASE("q-norm of coordinate and uniform directions") {
  for (int d : {2, 3}) {
    for (int N : {2, 3}) {
      std::vector<double> e1(N, 0.0);
      e1[0] = 1.0;
      CHECK(std::abs(q_norm(e1, d) - 1.0) < 1e-10);
      std::vector<double> uni(N, 1.0 / N);
      double expect = static_cast<double>(d + N) / (N * (d + 1));
      CHECK(std::abs(q_norm(uni, d) - expect) < 1e-10);
    }
  }
}

TEST_CASE("q-norm homogeneity, symmetry, triangle, monotonicity") {
  Rng rng = make_rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int d : {2, 3}) {
    for (int N : {2, 3}) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> x(N), y(N);
        for (double& v : x) v = u(rng);
        for (double& v : y) v = u(rng);
        double qx = q_norm(x, d), qy = q_norm(y, d);
        // absolute homogeneity
        std::vector<double> x2 = x;
        for (double& v : x2) v *= -1.7;
        CHECK(std::abs(q_norm(x2, d) - 1.7 * qx) < 1e-9);
        // permutation symmetry
        std::vector<double> xr(x.rbegin(), x.rend());
        CHECK(std::abs(q_norm(xr, d) - qx) < 1e-10);
        // triangle inequality
        std::vector<double> s(N);
        for (int i = 0; i < N; ++i) s[i] = x[i] + y[i];
        CHECK(q_norm(s, d) <= qx + qy + 1e-9);
        // monotone in the entrywise absolute values
        std::vector<double> shrunk = x;
        std::uniform_real_distribution<double> w(0.0, 1.0);
        for (double& v : shrunk) v *= w(rng);
        CHECK(q_norm(shrunk, d) <= qx + 1e-9);
      }
    }
  }
}

TEST_CASE("upper bound matches its eigenvalue form") {
  Rng rng = make_rng(5);
  for (int d : {2, 3}) {
    std::vector<double> a = random_direction(3, rng);
    double viaNorm = 0;
    for (double v : a) viaNorm += std::abs(v);
    viaNorm = viaNorm / d + (1.0 - 1.0 / d) * q_norm(a, d);
    double viaEig = upper_bound(a, d, CloneMode::Universal);
    CHECK(std::abs(viaNorm - viaEig) < 1e-10);
    CHECK(std::abs(viaEig - lambda_max(r_matrix(a, d, CloneMode::Universal)) /
                                (d + 1)) < 1e-12);
    CHECK(std::abs(upper_bound(a, d, CloneMode::Equatorial) -
                   lambda_max(r_matrix(a, d, CloneMode::Equatorial)) / d) <
          1e-12);
  }
}

TEST_CASE("top-eigenvector weights satisfy the normalization identity") {
  Rng rng = make_rng(31);
  for (int d : {2, 3}) {
    for (int N : {2, 3, 4}) {
      std::vector<double> a = random_direction(N, rng);
      BCoefficients bc = b_from_direction(a, d);
      double sumB = 0, sumB2 = 0;
      for (double v : bc.b) {
        sumB += v;
        sumB2 += v * v;
      }
      CHECK(std::abs((d - 1) * sumB2 + sumB * sumB - 1.0) < 1e-9);
      double lam = 0;
      for (int i = 0; i < N; ++i) {
        double s = (d - 1) * bc.b[i] + sumB;
        lam += a[i] * s * s;
      }
      CHECK(std::abs(lam - bc.lambdaMax) < 1e-9);
      CHECK(std::abs(bc.lambdaMax - lambda_max(s_matrix(a, d))) < 1e-9);
    }
  }
}

TEST_CASE("degenerate direction is flagged and still consistent") {
  BCoefficients bc = b_from_direction({1.0, 0.0}, 2);
  CHECK(bc.degenerate);
  double sumB = bc.b[0] + bc.b[1];
  CHECK(std::abs(1.0 * ((2 - 1) * bc.b[0] + sumB) *
                     ((2 - 1) * bc.b[0] + sumB) -
                 bc.lambdaMax) < 1e-8);
}

TEST_CASE("symmetric cloner shrink factors") {
  for (auto [N, d] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    Mat choi = optimal_symmetric_channel(N, d);
    CHECK(cptp_check(choi, d, ipow(d, N)).ok());
    FidelityPoint fp = marginal_report(choi, N, d, 4, 77);
    CHECK(fp.maxFitResidual < 1e-10);
    double expect = static_cast<double>(d + N) / (N * (d + 1));
    for (double p : fp.p) CHECK(std::abs(p - expect) < 1e-9);
  }
}

TEST_CASE("asymmetric cloner saturates the bound") {
  Rng rng = make_rng(13);
  for (auto [N, d] : {std::pair{2, 2}, {2, 3}}) {
    std::vector<double> a = random_direction(N, rng);
    Mat choi = optimal_asymmetric_channel(a, d);
    CHECK(cptp_check(choi, d, ipow(d, N)).ok());
    FidelityPoint fp = marginal_report(choi, N, d, 4, 78);
    double achieved = 0;
    for (int i = 0; i < N; ++i) achieved += a[i] * fp.f[i];
    CHECK(std::abs(achieved - upper_bound(a, d, CloneMode::Universal)) < 1e-8);
    CHECK(std::abs(necessary_condition_residual(fp.p, N, d)) < 1e-7);
  }
}

TEST_CASE("boundary points and region membership") {
  int d = 2;
  // the symmetric point is on the boundary, scaled-down copies are inside
  std::vector<double> sym = region_boundary_point({0.5, 0.5}, d);
  for (double p : sym)
    CHECK(std::abs(p - static_cast<double>(d + 2) / (2 * (d + 1))) < 1e-9);
  RegionResult inside = region_membership({0.5, 0.5}, d, 40, 6, 3);
  CHECK(inside.inside);
  RegionResult outside = region_membership({1.0, 1.0}, d, 40, 6, 3);
  CHECK(!outside.inside);
  CHECK(outside.margin > 0.1);
  // a boundary point sits within tolerance of margin zero
  RegionResult edge = region_membership(sym, d, 40, 6, 3);
  CHECK(std::abs(edge.margin) < 1e-6);
}

TEST_CASE("two-clone region closed form") {
  for (int d : {2, 3}) {
    // (1,0): cloning one output perfectly forces the other to shrink fully
    Region1to2Result r = region_1to2(1.0, 0.0, d);
    CHECK(r.inside);
    Region1to2Result q = region_1to2(1.0, 1e-3, d);
    CHECK(!q.inside);
    Region1to2Result both = region_1to2(1.0, 1.0, d);
    CHECK(!both.inside);
    double popt = static_cast<double>(d + 2) / (2 * (d + 1));
    CHECK(region_1to2(popt, popt, d).inside);
    CHECK(restricted_region_check(popt, popt, d));
    CHECK(!restricted_region_check(1.0, 1.0, d));
  }
}

TEST_CASE("twirled Choi blocks reproduce the assembled spectrum") {
  Rng rng = make_rng(41);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      Choi1to2Coeffs c;
      c.d = d;
      c.alpha = u(rng) + 0.4;
      c.beta = u(rng) + 0.4;
      c.gamma = Complex(u(rng), u(rng));
      c.eps2 = u(rng) * 0.1;
      // solve the trace condition for eps1
      c.eps1 = (1.0 - d * (c.alpha + c.beta) - 2 * c.gamma.real() -
                d * c.eps2) /
               (d * d);
      Choi1to2Blocks blocks = choi_1to2_blocks(c);
      Mat full = assemble_choi_1to2(c);
      std::vector<double> fromBlocks;
      for (const auto& blk : blocks.blocks) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(blk);
        fromBlocks.push_back(es.eigenvalues()(0));
        fromBlocks.push_back(es.eigenvalues()(1));
      }
      for (int i = 0; i < blocks.multPlus; ++i)
        fromBlocks.push_back(blocks.scalarPlus);
      for (int i = 0; i < blocks.multMinus; ++i)
        fromBlocks.push_back(blocks.scalarMinus);
      std::sort(fromBlocks.begin(), fromBlocks.end());
      REQUIRE(static_cast<long>(fromBlocks.size()) == full.rows());
      Eigen::SelfAdjointEigenSolver<Mat> es(full);
      for (long i = 0; i < full.rows(); ++i)
        CHECK(std::abs(es.eigenvalues()(i) - fromBlocks[i]) < 1e-10);
    }
  }
}

TEST_CASE("coefficients for a region point give a valid Choi") {
  for (int d : {2, 3}) {
    double popt = static_cast<double>(d + 2) / (2 * (d + 1));
    Region1to2Result r = region_1to2(popt, popt, d);
    REQUIRE(r.inside);
    REQUIRE(r.lambdaWitness.has_value());
    Choi1to2Coeffs c = coeffs_for_point(popt, popt, *r.lambdaWitness, d);
    Mat choi = assemble_choi_1to2(c);
    CHECK(cptp_check(choi, d, static_cast<long>(d) * d).ok(1e-8, 1e-8));
    FidelityPoint fp = marginal_report(choi, 2, d, 4, 9);
    CHECK(std::abs(fp.p[0] - popt) < 1e-8);
    CHECK(std::abs(fp.p[1] - popt) < 1e-8);
  }
}

TEST_CASE("sigma subsets and the partial-trace lemma") {
  CHECK(sigma_subsets(1, 1, 2).size() == 1);
  CHECK(sigma_subsets(1, 1, 3).size() == 2);
  CHECK(sigma_subsets(1, 2, 3).size() == 2);
  for (const Perm& sigma : sigma_subsets(1, 2, 3)) {
    CHECK(sigma[0] == 1);
    CHECK(sigma[2] == 0);
  }
  for (int d : {2, 3}) {
    CHECK(sigma_partial_trace_check(1, 1, 2, d).ok);
    CHECK(sigma_partial_trace_check(1, 2, 2, d).ok);
    CHECK(sigma_partial_trace_check(1, 2, 3, d).ok);
    CHECK(sigma_partial_trace_check(2, 2, 3, d).ok);
  }
}

TEST_CASE("unitary twirl preserves an already-invariant Choi") {
  int d = 2;
  Mat choi = optimal_symmetric_channel(2, d);
  Mat avg = twirl_estimate(choi, 2, d, TwirlGroup::Unitary, 600, 123);
  CHECK((avg - choi).cwiseAbs().maxCoeff() < 0.08);
}

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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qclone/channels.hpp"
#include "qclone/group_algebra.hpp"
#include "qclone/tensor_space.hpp"

namespace qclone {

enum class CloneMode { Universal, Equatorial };

// S_x = sum_i |x_i| (d omega_{(0,i)}) x I^{x(N-1)} on factors {0..N}.
Mat s_matrix(const std::vector<double>& x, int d);
// Universal: S_a + ||a||_1 I. Equatorial: additionally -d X_{(0,i)} terms.
Mat r_matrix(const std::vector<double>& a, int d, CloneMode mode);

// (d lambda_max(S_x) - ||x||_1) / (d^2 - 1)
double q_norm(const std::vector<double>& x, int d);
// Universal: (1/d)||a||_1 + (1 - 1/d)||a||_Q = lambda_max(R_a)/(d+1);
// equatorial: lambda_max(R_a)/d.
double upper_bound(const std::vector<double>& a, int d, CloneMode mode);

struct BCoefficients {
  std::vector<double> b;
  double lambdaMax = 0.0;
  bool degenerate = false;
};
// Weights of the top eigenvector of S_a in its product form; satisfies
// (d-1) sum b_i^2 + (sum b_i)^2 = 1 and
// lambda_max = sum_i a_i ((d-1) b_i + sum_j b_j)^2.
BCoefficients b_from_direction(const std::vector<double>& a, int d);

// Choi matrix of the symmetric-projector cloner; every marginal shrink
// factor is (d+N)/(N(d+1)).
Mat optimal_symmetric_channel(int N, int d);
// Choi matrix of the weighted-projector cloner attaining the upper bound in
// direction a.
Mat optimal_asymmetric_channel(const std::vector<double>& a, int d);

struct FidelityPoint {
  std::vector<double> p;
  std::vector<double> f;
  double maxFitResidual = 0.0;
};
// Fit each marginal of the channel as p_i rho + (1-p_i) I/d on Haar-random
// pure inputs.
FidelityPoint marginal_report(const Mat& choi, int N, int d, int trials,
                              std::uint64_t seed);

struct RegionResult {
  bool inside = false;
  double margin = 0.0;  // sup over directions of <p,a> - ||a||_Q
  std::vector<double> witness;
};
// Membership of p in the achievable shrink-factor region: sup over the
// simplex of <p,a> - ||a||_Q <= 0.
RegionResult region_membership(const std::vector<double>& p, int d,
                               int resolution, int restarts,
                               std::uint64_t seed);
// Boundary point of the region in direction a (the marginals of the optimal
// channel for that direction).
std::vector<double> region_boundary_point(const std::vector<double>& a, int d);

struct Region1to2Result {
  bool inside = false;
  std::optional<double> lambdaWitness;
};
// 1 -> 2 region via the closed-form quadratic feasibility in the ellipse
// parameter lambda in (0, d].
Region1to2Result region_1to2(double p1, double p2, int d);
// (1-p1)(1-p2)/d^2 >= ((p1+p2-1)/2)^2
bool restricted_region_check(double p1, double p2, int d);

struct EllipseParams {
  double lambda = 0.0, a = 0.0, b = 0.0, c = 0.0;
};
EllipseParams ellipse_params(double lambda, int d);

struct Choi1to2Coeffs {
  double alpha = 0.0, beta = 0.0;
  std::complex<double> gamma{0.0, 0.0};
  double eps1 = 0.0, eps2 = 0.0;
  int d = 2;
};
struct Choi1to2Blocks {
  std::vector<Eigen::Matrix2cd> blocks;  // d identical 2x2 blocks
  double scalarPlus = 0.0;               // eps1 + eps2
  int multPlus = 0;
  double scalarMinus = 0.0;  // eps1 - eps2
  int multMinus = 0;
};
// Block-diagonal form of the twirled 1->2 Choi matrix; PSD iff blocks PSD
// and eps1 >= |eps2|.
Choi1to2Blocks choi_1to2_blocks(const Choi1to2Coeffs& c);
// Assemble the full d^3 x d^3 Choi matrix from the coefficients.
Mat assemble_choi_1to2(const Choi1to2Coeffs& c);
// Coefficients realizing marginals (p1, p2) at ellipse parameter lambda.
Choi1to2Coeffs coeffs_for_point(double p1, double p2, double lambda, int d);

// N + (d^2-1) sum p_i - d(d-1) - (sum sqrt((d^2-1)p_i + 1))^2 / (N+d-1)
double necessary_condition_residual(const std::vector<double>& p, int N,
                                    int d);

// Permutations of {0..N} with sigma(0) = a and sigma^{-1}(0) = b.
std::vector<Perm> sigma_subsets(int aIdx, int bIdx, int N);
struct SigmaTraceReport {
  double residual = 0.0;
  bool ok = false;
};
// Verify that tracing the outputs of sum_{sigma in Sigma_{a,b}} of the
// partially transposed permutation operators leaves a multiple of I_d with
// the predicted coefficient.
SigmaTraceReport sigma_partial_trace_check(int aIdx, int bIdx, int N, int d);

enum class TwirlGroup { Unitary, DiagonalUnitaryTimesPermutation };
// Monte-Carlo average of (conj(M) x M^{x N})-conjugations of the Choi.
Mat twirl_estimate(const Mat& choi, int N, int d, TwirlGroup group,
                   int samples, std::uint64_t seed);

}  // namespace qclone

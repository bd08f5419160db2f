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

#include <string>
#include <utility>
#include <vector>

#include "qclone/partition.hpp"
#include "qclone/rational_op.hpp"
#include "qclone/tensor_space.hpp"

namespace qclone {

// Largest p such that an N-party state can have the isotropic state with
// parameter p as every pair marginal; closed two-regime formula.
Rational p_closed(int N, int d);

// All perfect matchings of K_N (empty for odd N), as lists of index pairs.
std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int N);

// Uniform mixture of maximally entangled products over perfect matchings
// (even N) or vertex-deleted matchings with a maximally mixed leftover
// factor (odd N). Exact rational entries.
RationalSparseOp matching_state(int N, int d);

struct IsotropicFit {
  double p = 0.0;
  double residual = 0.0;
};
// Least-squares fit of a pair state onto span{omega, I/d^2}.
IsotropicFit isotropic_fit(const Mat& rhoPair, int d);
// Exact fit; the returned flag is false when the residual is nonzero.
std::pair<Rational, bool> isotropic_fit_exact(const RationalSparseOp& rhoPair);

// Dual certificate operator: sum over edges of
// (c - x)(I - d Swap_e) + x (Swap_e - d omega_e), c = 2/(N(N-1)(1-d)).
Mat h_operator(double x, int N, int d);

struct DualResult {
  double value = 0.0;
  double xStar = 0.0;
};
// min_x lambda_max(H(x)) by bracketed golden-section search.
DualResult dual_numeric(int N, int d, double tol = 1e-10);

struct AffineFn {
  Rational slope;
  Rational offset;
  Partition lambda;
  Partition mu;
  int k = 0;
  Rational operator()(const Rational& x) const { return offset + slope * x; }
};
struct AffineFamily {
  int N = 0, d = 0;
  Rational xTilde;  // 2/(N(N-1)(1-d))
  Rational h(const Partition& lambda) const;
  Rational g(const Partition& lambda) const;
  Rational a(const Partition& mu) const;
  AffineFn f(const Partition& lambda, int k, const Partition& mu) const;
};
AffineFamily affine_family(int N, int d);

struct SpecialPartitions {
  Partition lambda1, lambda2, mu1, mu2, mu3;
  int k = 0, m = 0;
};
// The five distinguished labels for odd N >= d >= 2 (both odd).
SpecialPartitions special_partitions(int N, int d);
// (lambda, mu) admissible: lambda a single column of height m and mu with
// exactly m odd rows, 1 <= m <= d.
bool gamma_membership(const Partition& lambda, const Partition& mu, int d);

struct DualClosed {
  Rational value;
  Rational xStar;
  std::string regime;  // "flat" (N >= 2d+3) or "crossing" (N <= 2d+1)
};
// Closed-form dual value for N >= d, both odd; always equals p_closed.
DualClosed dual_closed(int N, int d);

// The exact N=3, d=3 optimizer: (1/57)[nine contraction diagrams
// + 2(id + both 3-cycles - all transpositions)].
RationalSparseOp optimal_state_3_3();

struct CentralCheckItem {
  Partition lambda;
  int k = 0;
  double eigenvalue = 0.0;
  double residual = 0.0;
};
struct CentralCheckReport {
  bool ok = false;
  std::vector<CentralCheckItem> items;
};
enum class CentralAlgebra { Symmetric, Brauer };
// J = sum_{i<j} of the transposition operators (symmetric) or transposition
// minus contraction operators (Brauer). Symmetric: eigenvalue c(lambda) on
// each isotypic component (checked with exact projectors). Brauer: spectrum
// matches {c(lambda) - k(d-1)} over the admissible labels.
CentralCheckReport central_element_check(int n, int d, CentralAlgebra which);

}  // namespace qclone

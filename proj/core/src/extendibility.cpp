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

#include "qclone/extendibility.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qclone/diagram.hpp"
#include "qclone/group_algebra.hpp"
#include "qclone/spectral.hpp"
#include "qclone/states.hpp"
#include "qclone/tensor_rep.hpp"

namespace qclone {

namespace {

// Exact omega on a d^2-dimensional pair space.
RationalSparseOp exact_omega(int d) {
  RationalSparseOp om(TensorSpace{d, 2});
  Rational inv(1, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      om.add(static_cast<long>(i) * d + i, static_cast<long>(j) * d + j, inv);
  return om;
}

void add_matching_term(RationalSparseOp& rho,
                       const std::vector<std::pair<int, int>>& pairs, int free,
                       int N, int d, const Rational& weight) {
  const int P = static_cast<int>(pairs.size());
  std::vector<int> avals(P, 0), bvals(P, 0);
  std::vector<int> row(N), col(N);
  auto emit = [&]() {
    for (int pi = 0; pi < P; ++pi) {
      row[pairs[pi].first] = row[pairs[pi].second] = avals[pi];
      col[pairs[pi].first] = col[pairs[pi].second] = bvals[pi];
    }
    int freeLimit = (free >= 0) ? d : 1;
    for (int fv = 0; fv < freeLimit; ++fv) {
      if (free >= 0) row[free] = col[free] = fv;
      long ri = 0, ci = 0;
      for (int x : row) ri = ri * d + x;
      for (int x : col) ci = ci * d + x;
      rho.add(ri, ci, weight);
    }
  };
  while (true) {
    emit();
    int pos = P - 1;
    while (pos >= 0 && ++bvals[pos] == d) bvals[pos--] = 0;
    if (pos >= 0) continue;
    pos = P - 1;
    while (pos >= 0 && ++avals[pos] == d) avals[pos--] = 0;
    if (pos < 0) break;
  }
}

void matchings_of(std::vector<int> verts,
                  std::vector<std::pair<int, int>>& current,
                  std::vector<std::vector<std::pair<int, int>>>& out) {
  if (verts.empty()) {
    out.push_back(current);
    return;
  }
  int a = verts[0];
  for (size_t i = 1; i < verts.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 1; j < verts.size(); ++j)
      if (j != i) rest.push_back(verts[j]);
    current.emplace_back(a, verts[i]);
    matchings_of(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

Rational p_closed(int N, int d) {
  if (N < 2 || d < 2) throw DimensionError("p_closed: N, d must be >= 2");
  if (d > N || d % 2 == 0 || N % 2 == 0)
    return Rational(1, N + (N % 2) - 1);
  Rational crossing(2 * d + 1, 2 * d * N + 1);
  Rational flat(1, N - 1);
  return std::min(crossing, flat);
}

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int N) {
  if (N > 12) throw CapExceeded("perfect_matchings: N > 12");
  std::vector<std::vector<std::pair<int, int>>> out;
  if (N % 2 != 0) return out;
  std::vector<int> verts(N);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<std::pair<int, int>> current;
  matchings_of(verts, current, out);
  return out;
}

RationalSparseOp matching_state(int N, int d) {
  TensorSpace space{d, N};
  space.check_cap();
  RationalSparseOp rho(space);
  if (N % 2 == 0) {
    auto ms = perfect_matchings(N);
    Rational w = Rational(1, static_cast<long>(ms.size())) /
                 Rational(ipow(d, N / 2), 1);
    for (const auto& m : ms) add_matching_term(rho, m, -1, N, d, w);
  } else {
    std::vector<std::vector<std::pair<int, int>>> all;
    std::vector<int> frees;
    for (int v = 0; v < N; ++v) {
      std::vector<int> verts;
      for (int x = 0; x < N; ++x)
        if (x != v) verts.push_back(x);
      std::vector<std::vector<std::pair<int, int>>> sub;
      std::vector<std::pair<int, int>> current;
      matchings_of(verts, current, sub);
      for (auto& m : sub) {
        all.push_back(std::move(m));
        frees.push_back(v);
      }
    }
    Rational w = Rational(1, static_cast<long>(all.size())) /
                 Rational(ipow(d, (N - 1) / 2) * d, 1);
    for (size_t i = 0; i < all.size(); ++i)
      add_matching_term(rho, all[i], frees[i], N, d, w);
  }
  return rho;
}

IsotropicFit isotropic_fit(const Mat& rhoPair, int d) {
  long dim = static_cast<long>(d) * d;
  if (rhoPair.rows() != dim || rhoPair.cols() != dim)
    throw DimensionError("isotropic_fit: expected a d^2 x d^2 operator");
  Mat om = max_entangled(d);
  Mat id = Mat::Identity(dim, dim) / static_cast<double>(dim);
  // Solve the 2x2 Gram system for the span{omega, I/d^2} projection.
  double g11 = 1.0, g12 = 1.0 / dim, g22 = 1.0 / dim;
  double r1 = std::real((om * rhoPair).trace());
  double r2 = std::real(rhoPair.trace()) / dim;
  double det = g11 * g22 - g12 * g12;
  double u = (g22 * r1 - g12 * r2) / det;
  double v = (g11 * r2 - g12 * r1) / det;
  IsotropicFit fit;
  fit.p = u;
  fit.residual = (rhoPair - u * om - v * id).cwiseAbs().maxCoeff();
  return fit;
}

std::pair<Rational, bool> isotropic_fit_exact(const RationalSparseOp& rhoPair) {
  const int d = rhoPair.space().d;
  if (rhoPair.space().n != 2)
    throw DimensionError("isotropic_fit_exact: expected a pair operator");
  long dim = static_cast<long>(d) * d;
  RationalSparseOp om = exact_omega(d);
  Rational g11(1), g12(1, dim), g22(1, dim);
  Rational r1 = om.inner(rhoPair);
  Rational r2 = rhoPair.trace() / dim;
  Rational det = g11 * g22 - g12 * g12;
  Rational u = (g22 * r1 - g12 * r2) / det;
  Rational v = (g11 * r2 - g12 * r1) / det;
  // Exactness: rho - u*omega - v*I must vanish entrywise.
  RationalSparseOp fit = rhoPair + om.scaled(-u);
  RationalSparseOp idPart(rhoPair.space());
  Rational diag = -v / dim;
  for (long i = 0; i < dim; ++i) idPart.add(i, i, diag);
  fit = fit + idPart;
  bool exact = true;
  for (const auto& [key, val] : fit.entries())
    if (val != 0) exact = false;
  return {u, exact};
}

Mat h_operator(double x, int N, int d) {
  TensorSpace space{d, N};
  space.check_cap();
  Mat dOmega = static_cast<double>(d) * max_entangled(d);
  Mat sw = swap_op(d);
  long dim2 = static_cast<long>(d) * d;
  Mat id2 = Mat::Identity(dim2, dim2);
  double c = 2.0 / (N * (N - 1.0) * (1.0 - d));
  Mat term = (c - x) * (id2 - d * sw) + x * (sw - dOmega);
  Mat h = Mat::Zero(space.dim(), space.dim());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) h += embed_pair(term, i, j, space);
  return h;
}

DualResult dual_numeric(int N, int d, double tol) {
  double c = 2.0 / (N * (N - 1.0) * (1.0 - d));
  auto f = [&](double x) { return lambda_max(h_operator(x, N, d)); };
  double width = 10 * std::abs(c);
  double a = c - width, b = c + width;
  double m = c, fa = f(a), fb = f(b), fm = f(m);
  int guard = 0;
  while (fa <= fm && guard++ < 60) {
    a -= width;
    width *= 2;
    fa = f(a);
  }
  guard = 0;
  while (fb <= fm && guard++ < 60) {
    b += width;
    width *= 2;
    fb = f(b);
  }
  if (fa <= fm || fb <= fm)
    throw VerificationError("dual_numeric: failed to bracket the minimum");
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 300 && (b - a) > tol; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  DualResult res;
  res.xStar = (a + b) / 2;
  res.value = f(res.xStar);
  return res;
}

Rational AffineFamily::h(const Partition& lambda) const {
  Partition conj = lambda.conjugate();
  Rational total(0);
  for (int i = 1; i <= conj.rows(); ++i) {
    long li = conj.row(i - 1);
    total += Rational(li * (d - li + 2 * (i - 1)), 2);
  }
  return total;
}

Rational AffineFamily::g(const Partition& lambda) const {
  return Rational(1, N - 1) + xTilde * h(lambda);
}

Rational AffineFamily::a(const Partition& mu) const {
  Rational c(mu.content(), 1);
  return (Rational(2 * d, 1) * c / Rational(static_cast<long>(N) * (N - 1), 1) -
          1) /
         Rational(d - 1, 1);
}

AffineFn AffineFamily::f(const Partition& lambda, int k,
                         const Partition& mu) const {
  AffineFn fn;
  fn.lambda = lambda;
  fn.mu = mu;
  fn.k = k;
  fn.offset = a(mu);
  fn.slope = Rational(lambda.content(), 1) +
             Rational(d, 1) * Rational(mu.content(), 1) -
             Rational(static_cast<long>(k) * (d - 1), 1) -
             Rational(static_cast<long>(N) * (N - 1), 2);
  return fn;
}

AffineFamily affine_family(int N, int d) {
  AffineFamily fam;
  fam.N = N;
  fam.d = d;
  fam.xTilde = Rational(2, 1) /
               Rational(static_cast<long>(N) * (N - 1) * (1 - d), 1);
  return fam;
}

SpecialPartitions special_partitions(int N, int d) {
  if (N < d || N % 2 == 0 || d % 2 == 0)
    throw DimensionError(
        "special_partitions: requires N >= d with both odd");
  SpecialPartitions sp;
  sp.lambda1 = Partition(std::vector<int>(d, 1));
  sp.lambda2 = Partition({1});
  sp.mu1 = Partition({N});
  std::vector<int> mu2{N - d + 1};
  mu2.insert(mu2.end(), d - 1, 1);
  sp.mu2 = Partition(mu2);
  int half = (N - d) / 2;
  sp.k = half / d;
  sp.m = half % d;
  std::vector<int> conj(2 * sp.k + 1, d);
  if (sp.m > 0) {
    conj.push_back(sp.m);
    conj.push_back(sp.m);
  }
  sp.mu3 = Partition(conj).conjugate();
  return sp;
}

bool gamma_membership(const Partition& lambda, const Partition& mu, int d) {
  int m = lambda.rows();
  if (m < 1 || m > d) return false;
  for (int part : lambda.parts())
    if (part != 1) return false;
  return mu.odd_row_count() == m;
}

DualClosed dual_closed(int N, int d) {
  if (N < d || N % 2 == 0 || d % 2 == 0)
    throw DimensionError("dual_closed: requires N >= d with both odd");
  AffineFamily fam = affine_family(N, d);
  SpecialPartitions sp = special_partitions(N, d);
  DualClosed out;
  if (N >= 2 * d + 3) {
    out.regime = "flat";
    out.value = fam.g(sp.lambda1);
    out.xStar = fam.xTilde;
  } else {
    out.regime = "crossing";
    AffineFn f1 = fam.f(sp.lambda2, (N - 1) / 2, sp.mu1);
    AffineFn f2 = fam.f(sp.lambda1, (N - d) / 2, sp.mu2);
    out.xStar = (f2.offset - f1.offset) / (f1.slope - f2.slope);
    out.value = f1(out.xStar);
  }
  if (out.value != p_closed(N, d))
    throw VerificationError("dual_closed: value disagrees with p_closed");
  return out;
}

RationalSparseOp optimal_state_3_3() {
  const int d = 3;
  const char* contractions[] = {
      "1,2|4,5|3,6", "1,3|4,6|2,5", "2,3|5,6|1,4",
      "1,2|4,6|5,3", "1,3|4,5|6,2", "2,3|4,6|5,1",
      "1,3|5,6|4,2", "2,3|4,5|6,1", "1,2|5,6|4,3"};
  const char* plus[] = {"1,4|2,5|3,6", "1,5|2,6|3,4", "1,6|2,4|3,5"};
  const char* minus[] = {"1,5|2,4|3,6", "1,6|2,5|3,4", "1,4|2,6|3,5"};
  RationalSparseOp rho(TensorSpace{d, 3});
  auto accumulate = [&](const char* text, const Rational& coeff) {
    RationalSparseOp term = tensor_rep_exact(Diagram::parse(text), d);
    rho = rho + term.scaled(coeff);
  };
  Rational inv57(1, 57);
  for (const char* s : contractions) accumulate(s, inv57);
  for (const char* s : plus) accumulate(s, Rational(2, 57));
  for (const char* s : minus) accumulate(s, Rational(-2, 57));

  if (rho.trace() != 1)
    throw VerificationError("optimal_state_3_3: trace is not 1");
  Rational p(7, 19);
  RationalSparseOp om = exact_omega(d);
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    RationalSparseOp marg = rho.pair_marginal(i, j);
    RationalSparseOp expect = om.scaled(p);
    Rational diag = (Rational(1) - p) / Rational(9);
    for (long r = 0; r < 9; ++r) expect.add(r, r, diag);
    RationalSparseOp diff = marg + expect.scaled(Rational(-1));
    for (const auto& [key, val] : diff.entries())
      if (val != 0)
        throw VerificationError("optimal_state_3_3: marginal mismatch");
  }
  if (lambda_min(rho.to_dense()) < -1e-10)
    throw VerificationError("optimal_state_3_3: not PSD");
  return rho;
}

CentralCheckReport central_element_check(int n, int d, CentralAlgebra which) {
  if (n > 5) throw CapExceeded("central_element_check: n > 5");
  TensorSpace space{d, n};
  space.check_cap();
  CentralCheckReport report;
  report.ok = true;
  if (which == CentralAlgebra::Symmetric) {
    Mat j = Mat::Zero(space.dim(), space.dim());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Perm t = perm_identity(n);
        std::swap(t[a], t[b]);
        j += perm_rep(t, d);
      }
    for (const Partition& lambda : irr_symmetric(n, d)) {
      Mat proj = sym_algebra_rep(isotypic_projector(lambda), d);
      double eig = static_cast<double>(lambda.content());
      double resid = (j * proj - eig * proj).cwiseAbs().maxCoeff();
      report.items.push_back({lambda, 0, eig, resid});
      if (resid > 1e-9) report.ok = false;
    }
    return report;
  }

  // Brauer: the symmetric-group projectors cannot isolate the Brauer
  // components, so match the full spectrum against the admissible labels.
  Mat jb = Mat::Zero(space.dim(), space.dim());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Perm t = perm_identity(n);
      std::swap(t[a], t[b]);
      Diagram cup = Diagram::from_permutation(t).partial_transpose_rows(
          {a + 1});
      jb += perm_rep(t, d) - tensor_rep(cup, d);
    }
  Eigen::SelfAdjointEigenSolver<Mat> solver((jb + jb.adjoint()) / 2.0);
  const auto& spectrum = solver.eigenvalues();
  std::vector<double> labelVals;
  for (const BrauerLabel& label : irr_brauer(n, d)) {
    double eig = static_cast<double>(label.lambda.content()) -
                 static_cast<double>(label.k) * (d - 1);
    double resid = 1e300;
    for (Eigen::Index e = 0; e < spectrum.size(); ++e)
      resid = std::min(resid, std::abs(spectrum(e) - eig));
    report.items.push_back({label.lambda, label.k, eig, resid});
    if (resid > 1e-8) report.ok = false;
    labelVals.push_back(eig);
  }
  for (Eigen::Index e = 0; e < spectrum.size(); ++e) {
    double gap = 1e300;
    for (double v : labelVals) gap = std::min(gap, std::abs(spectrum(e) - v));
    if (gap > 1e-8) report.ok = false;
  }
  return report;
}

}  // namespace qclone

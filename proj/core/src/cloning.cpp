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

#include "qclone/cloning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qclone/group_algebra.hpp"
#include "qclone/random.hpp"
#include "qclone/spectral.hpp"
#include "qclone/states.hpp"
#include "qclone/tensor_rep.hpp"

namespace qclone {

namespace {

double l1_norm(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += std::abs(v);
  return s;
}

// d*omega_{(0,i)} x I on factors {0..N}, one per clone index i.
std::vector<Mat> pair_projectors(int N, int d) {
  TensorSpace space{d, N + 1};
  space.check_cap();
  Mat dOmega = static_cast<double>(d) * max_entangled(d);
  std::vector<Mat> out;
  out.reserve(N);
  for (int i = 1; i <= N; ++i)
    out.push_back(embed_pair(dOmega, 0, i, space));
  return out;
}

std::vector<double> project_simplex(std::vector<double> v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0, theta = 0;
  int rho = 0;
  for (int i = 0; i < n; ++i) {
    cum += u[i];
    double t = (cum - 1.0) / (i + 1);
    if (u[i] - t > 0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(0.0, x - theta);
  return v;
}

int cycle_count(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n, 0);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = sigma[j]) seen[j] = 1;
  }
  return c;
}

// psi(sigma) with the first tensor factor partially transposed.
Mat pt0_perm(const Perm& sigma, int d) {
  TensorSpace space{d, static_cast<int>(sigma.size())};
  return partial_transpose(perm_rep(sigma, d), space, {0});
}

}  // namespace

Mat s_matrix(const std::vector<double>& x, int d) {
  const int N = static_cast<int>(x.size());
  TensorSpace space{d, N + 1};
  space.check_cap();
  Mat dOmega = static_cast<double>(d) * max_entangled(d);
  Mat s = Mat::Zero(space.dim(), space.dim());
  for (int i = 1; i <= N; ++i)
    s += std::abs(x[i - 1]) * embed_pair(dOmega, 0, i, space);
  return s;
}

Mat r_matrix(const std::vector<double>& a, int d, CloneMode mode) {
  const int N = static_cast<int>(a.size());
  TensorSpace space{d, N + 1};
  space.check_cap();
  Mat r = s_matrix(a, d);
  r += l1_norm(a) * Mat::Identity(space.dim(), space.dim());
  if (mode == CloneMode::Equatorial) {
    Mat dX = static_cast<double>(d) * diagonal_corr_state(d);
    for (int i = 1; i <= N; ++i)
      r -= std::abs(a[i - 1]) * embed_pair(dX, 0, i, space);
  }
  return r;
}

double q_norm(const std::vector<double>& x, int d) {
  return (d * lambda_max(s_matrix(x, d)) - l1_norm(x)) / (d * d - 1.0);
}

double upper_bound(const std::vector<double>& a, int d, CloneMode mode) {
  double lm = lambda_max(r_matrix(a, d, mode));
  return mode == CloneMode::Universal ? lm / (d + 1.0) : lm / d;
}

BCoefficients b_from_direction(const std::vector<double>& a, int d) {
  const int N = static_cast<int>(a.size());
  Mat s = s_matrix(a, d);
  std::vector<Vec> basis = top_eigenspace(s);
  std::vector<Mat> proj = pair_projectors(N, d);

  Vec chi = basis[0];
  BCoefficients out;
  out.degenerate = basis.size() > 1;
  out.lambdaMax = lambda_max(s);
  if (out.degenerate) {
    // Deterministic tie-break: maximize sum_i sqrt(<chi|Q_i|chi>) inside the
    // top eigenspace by projected gradient ascent from each basis vector.
    auto overlap_sum = [&](const Vec& v) {
      double t = 0;
      for (const Mat& q : proj)
        t += std::sqrt(std::max(0.0, std::real(v.dot(q * v))));
      return t;
    };
    double best = -1;
    for (size_t s0 = 0; s0 <= basis.size(); ++s0) {
      Vec v;
      if (s0 < basis.size()) {
        v = basis[s0];
      } else {
        v = Vec::Zero(basis[0].size());
        for (const Vec& b : basis) v += b;
        v.normalize();
      }
      for (int it = 0; it < 200; ++it) {
        Vec g = Vec::Zero(v.size());
        for (const Mat& q : proj) {
          double si = std::sqrt(std::max(1e-12, std::real(v.dot(q * v))));
          g += (q * v) / si;
        }
        Vec gp = Vec::Zero(v.size());
        for (const Vec& b : basis) gp += b * b.dot(g);
        v = (v + 0.1 * gp).normalized();
      }
      double val = overlap_sum(v);
      if (val > best) {
        best = val;
        chi = v;
      }
    }
  }

  std::vector<double> sVals(N);
  for (int i = 0; i < N; ++i)
    sVals[i] = std::sqrt(std::max(0.0, std::real(chi.dot(proj[i] * chi))));
  double mean = std::accumulate(sVals.begin(), sVals.end(), 0.0) / (N + d - 1);
  out.b.resize(N);
  for (int i = 0; i < N; ++i)
    out.b[i] = std::max(0.0, (sVals[i] - mean) / (d - 1));
  return out;
}

Mat optimal_symmetric_channel(int N, int d) {
  TensorSpace space{d, N + 1};
  space.check_cap();
  Mat p = symmetric_projector(N, d);
  double trP = static_cast<double>(binomial(N + d - 1, N));
  double c = d / trP;
  long dimRest = ipow(d, N - 1);
  Mat idRest = Mat::Identity(dimRest, dimRest);
  auto phi = [&](const Mat& x) -> Mat {
    return c * (p * kron(x, idRest) * p.adjoint());
  };
  return choi_of_map(phi, d);
}

Mat optimal_asymmetric_channel(const std::vector<double>& a, int d) {
  const int N = static_cast<int>(a.size());
  TensorSpace space{d, N + 1};
  space.check_cap();
  BCoefficients bc = b_from_direction(a, d);
  long dimOut = ipow(d, N);
  Mat pa = Mat::Zero(dimOut, dimOut);
  for (const Perm& sigma : all_perms(N))
    pa += bc.b[sigma[0]] * perm_rep(sigma, d);
  pa /= static_cast<double>(factorial(N));
  double trP = static_cast<double>(binomial(N + d - 1, N));
  double c = d * N * (N + d - 1) / trP;
  long dimRest = ipow(d, N - 1);
  Mat idRest = Mat::Identity(dimRest, dimRest);
  auto phi = [&](const Mat& x) -> Mat {
    return c * (pa * kron(x, idRest) * pa.adjoint());
  };
  Mat choi = choi_of_map(phi, d);
  CptpReport rep = cptp_check(choi, d, dimOut);
  if (!rep.psd || rep.traceCondResidual > 1e-6)
    throw VerificationError("optimal_asymmetric_channel: Choi failed CPTP");
  return choi;
}

FidelityPoint marginal_report(const Mat& choi, int N, int d, int trials,
                              std::uint64_t seed) {
  TensorSpace outSpace{d, N};
  Rng rng = make_rng(seed);
  FidelityPoint point;
  point.p.resize(N);
  point.f.resize(N);
  for (int i = 0; i < N; ++i) {
    double acc = 0;
    for (int t = 0; t < trials; ++t) {
      Vec v = haar_pure_state(d, rng);
      Mat rho = v * v.adjoint();
      Mat out = apply_choi(choi, rho, d);
      std::vector<int> drop;
      for (int j = 0; j < N; ++j)
        if (j != i) drop.push_back(j);
      Mat outi = partial_trace(out, outSpace, drop);
      double p = (std::real((outi * rho).trace()) - 1.0 / d) / (1.0 - 1.0 / d);
      Mat fit = outi - p * rho -
                (1 - p) / d * Mat::Identity(d, d);
      point.maxFitResidual =
          std::max(point.maxFitResidual, fit.cwiseAbs().maxCoeff());
      acc += p;
    }
    point.p[i] = acc / trials;
    point.f[i] = point.p[i] + (1 - point.p[i]) / d;
  }
  return point;
}

RegionResult region_membership(const std::vector<double>& p, int d,
                               int resolution, int restarts,
                               std::uint64_t seed) {
  const int N = static_cast<int>(p.size());
  std::vector<Mat> proj = pair_projectors(N, d);

  // Objective <p,a> - ||a||_Q on the simplex; concave, with supergradient
  // p_i - (d <chi|Q_i|chi> - 1)/(d^2-1) from the top eigenvector of S_a.
  auto evaluate = [&](const std::vector<double>& a, std::vector<double>* grad) {
    Mat s = s_matrix(a, d);
    double val = -q_norm(a, d);
    for (int i = 0; i < N; ++i) val += p[i] * a[i];
    if (grad) {
      Vec chi = top_eigvec(s);
      grad->resize(N);
      for (int i = 0; i < N; ++i) {
        double si2 = std::real(chi.dot(proj[i] * chi));
        (*grad)[i] = p[i] - (d * si2 - 1.0) / (d * d - 1.0);
      }
    }
    return val;
  };

  RegionResult result;
  result.margin = -1e300;
  auto consider = [&](const std::vector<double>& a, double val) {
    if (val > result.margin) {
      result.margin = val;
      result.witness = a;
    }
  };

  Rng rng = make_rng(seed);
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(N, 1.0 / N));
  for (int i = 0; i < N; ++i) {
    std::vector<double> e(N, 0.0);
    e[i] = 1.0;
    starts.push_back(e);
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> a(N);
    double tot = 0;
    for (double& x : a) {
      x = -std::log(std::max(1e-12, unif(rng)));
      tot += x;
    }
    for (double& x : a) x /= tot;
    starts.push_back(a);
  }
  for (auto a : starts) {
    std::vector<double> grad;
    double val = evaluate(a, &grad);
    consider(a, val);
    for (int it = 0; it < 60; ++it) {
      double step = 0.5 / std::sqrt(it + 1.0);
      std::vector<double> next(N);
      for (int i = 0; i < N; ++i) next[i] = a[i] + step * grad[i];
      next = project_simplex(next);
      double nv = evaluate(next, &grad);
      consider(next, nv);
      a = next;
    }
  }

  // Coarse simplex grid as a safety net for the multi-start ascent.
  if (resolution > 0) {
    std::vector<int> comp(N, 0);
    comp[0] = resolution;
    while (true) {
      std::vector<double> a(N);
      for (int i = 0; i < N; ++i) a[i] = static_cast<double>(comp[i]) / resolution;
      consider(a, evaluate(a, nullptr));
      // next composition of `resolution` into N parts
      int i = N - 2;
      while (i >= 0 && comp[i] == 0) --i;
      if (i < 0) break;
      --comp[i];
      int rest = resolution;
      for (int j = 0; j <= i; ++j) rest -= comp[j];
      comp[i + 1] = rest;
      for (int j = i + 2; j < N; ++j) comp[j] = 0;
    }
  }

  result.inside = result.margin <= 1e-7;
  return result;
}

std::vector<double> region_boundary_point(const std::vector<double>& a,
                                          int d) {
  BCoefficients bc = b_from_direction(a, d);
  double total = std::accumulate(bc.b.begin(), bc.b.end(), 0.0);
  std::vector<double> p(bc.b.size());
  for (size_t i = 0; i < bc.b.size(); ++i) {
    double si = (d - 1) * bc.b[i] + total;
    p[i] = (d * si * si - 1.0) / (d * d - 1.0);
  }
  return p;
}

Region1to2Result region_1to2(double p1, double p2, int d) {
  const double x = p1 - p2, y = p1 + p2;
  const double dd = static_cast<double>(d) * d - 1.0;
  const double A = dd * x * x;
  const double B = dd * y + 2.0;
  const double disc = B * B - A * dd;
  Region1to2Result res;
  if (disc < 0) return res;
  double lo = (B * d - std::sqrt(disc)) / dd;
  double hi = (B * d + std::sqrt(disc)) / dd;
  lo = std::max(lo, 1e-12);
  hi = std::min(hi, static_cast<double>(d));
  if (lo > hi) return res;
  res.inside = true;
  res.lambdaWitness = hi;
  return res;
}

bool restricted_region_check(double p1, double p2, int d) {
  double lhs = (1 - p1) * (1 - p2) / (static_cast<double>(d) * d);
  double rhs = (p1 + p2 - 1) / 2.0;
  return lhs + 1e-12 >= rhs * rhs;
}

EllipseParams ellipse_params(double lambda, int d) {
  if (lambda <= 0 || lambda > d)
    throw DimensionError("ellipse_params: lambda outside (0, d]");
  const double dd = static_cast<double>(d) * d - 1.0;
  return {lambda, lambda / std::sqrt(dd), lambda / dd, (lambda * d - 2) / dd};
}

Choi1to2Blocks choi_1to2_blocks(const Choi1to2Coeffs& c) {
  const int d = c.d;
  double traceResidual = d * (c.alpha + c.beta) + 2 * c.gamma.real() +
                         d * d * c.eps1 + d * c.eps2 - 1.0;
  if (std::abs(traceResidual) > 1e-9)
    throw VerificationError("choi_1to2_blocks: trace condition violated");
  Choi1to2Blocks out;
  Eigen::Matrix2cd block;
  double sq = std::sqrt(static_cast<double>(d) * d - 1.0);
  Complex offd = sq * (Complex(c.alpha - c.beta, 0) / 2.0 -
                       Complex(0, c.gamma.imag()));
  block(0, 0) = (d + 1) * (c.alpha + c.beta + 2 * c.gamma.real()) / 2.0 +
                c.eps1 + c.eps2;
  block(1, 1) = (d - 1) * (c.alpha + c.beta - 2 * c.gamma.real()) / 2.0 +
                c.eps1 - c.eps2;
  block(0, 1) = offd;
  block(1, 0) = std::conj(offd);
  out.blocks.assign(d, block);
  out.scalarPlus = c.eps1 + c.eps2;
  out.multPlus = d * d * (d + 1) / 2 - d;
  out.scalarMinus = c.eps1 - c.eps2;
  out.multMinus = d * d * (d - 1) / 2 - d;
  return out;
}

Mat assemble_choi_1to2(const Choi1to2Coeffs& c) {
  const int d = c.d;
  TensorSpace space{d, 3};
  space.check_cap();
  Mat t01 = pt0_perm({1, 0, 2}, d);
  Mat t02 = pt0_perm({2, 1, 0}, d);
  Mat t12 = perm_rep({0, 2, 1}, d);
  Mat cyc = pt0_perm({1, 2, 0}, d);
  Mat out = c.alpha * t01 + c.beta * t02 + c.gamma * cyc +
            std::conj(c.gamma) * Mat(cyc.adjoint()) +
            c.eps1 * Mat::Identity(space.dim(), space.dim()) + c.eps2 * t12;
  return out;
}

Choi1to2Coeffs coeffs_for_point(double p1, double p2, double lambda, int d) {
  Choi1to2Coeffs c;
  c.d = d;
  c.eps2 = 0.0;
  c.eps1 = (1 - lambda / d) / (static_cast<double>(d) * d - 2.0);
  double t = 1 - d * d * c.eps1 - d * c.eps2;
  double g = (p1 + p2 - t) / 2.0;
  double apb = (t - 2 * g) / d;
  double amb = (p1 - p2) / d;
  c.alpha = (apb + amb) / 2.0;
  c.beta = (apb - amb) / 2.0;
  c.gamma = Complex(g, 0.0);
  return c;
}

double necessary_condition_residual(const std::vector<double>& p, int N,
                                    int d) {
  const double dd = static_cast<double>(d) * d - 1.0;
  double sum = 0, root = 0;
  for (double pi : p) {
    double inner = dd * pi + 1.0;
    if (inner < -1e-12)
      throw DimensionError(
          "necessary_condition_residual: (d^2-1)p + 1 must be >= 0");
    sum += pi;
    root += std::sqrt(std::max(0.0, inner));
  }
  return N + dd * sum - d * (d - 1.0) - root * root / (N + d - 1.0);
}

std::vector<Perm> sigma_subsets(int aIdx, int bIdx, int N) {
  if (aIdx < 1 || aIdx > N || bIdx < 1 || bIdx > N)
    throw DimensionError("sigma_subsets: indices must be in 1..N");
  std::vector<Perm> out;
  for (const Perm& sigma : all_perms(N + 1))
    if (sigma[0] == aIdx && sigma[bIdx] == 0) out.push_back(sigma);
  return out;
}

SigmaTraceReport sigma_partial_trace_check(int aIdx, int bIdx, int N, int d) {
  TensorSpace space{d, N + 1};
  space.check_cap();
  Mat total = Mat::Zero(space.dim(), space.dim());
  for (const Perm& sigma : sigma_subsets(aIdx, bIdx, N))
    total += pt0_perm(sigma, d);
  std::vector<int> drop(N);
  std::iota(drop.begin(), drop.end(), 1);
  Mat lhs = partial_trace(total, space, drop);
  double base = 0;
  for (const Perm& sigma : all_perms(N - 1))
    base += static_cast<double>(ipow(d, cycle_count(sigma)));
  double pred = (aIdx == bIdx) ? base : base / d;
  SigmaTraceReport rep;
  rep.residual = (lhs - pred * Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  rep.ok = rep.residual < 1e-9;
  return rep;
}

Mat twirl_estimate(const Mat& choi, int N, int d, TwirlGroup group,
                   int samples, std::uint64_t seed) {
  TensorSpace space{d, N + 1};
  space.check_cap();
  if (choi.rows() != space.dim())
    throw DimensionError("twirl_estimate: Choi dimension mismatch");
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  Mat acc = Mat::Zero(space.dim(), space.dim());
  for (int s = 0; s < samples; ++s) {
    Mat m;
    if (group == TwirlGroup::Unitary) {
      m = haar_unitary(d, rng);
    } else {
      m = Mat::Zero(d, d);
      Perm sigma = perm_identity(d);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      for (int i = 0; i < d; ++i)
        m(sigma[i], i) = std::polar(1.0, angle(rng));
    }
    Mat u = m.conjugate();
    for (int f = 0; f < N; ++f) u = kron(u, m);
    acc += u * choi * u.adjoint();
  }
  return acc / static_cast<double>(samples);
}

}  // namespace qclone

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

#include <map>
#include <vector>

#include "qclone/common.hpp"
#include "qclone/partition.hpp"

namespace qclone {

// Permutation of {0..n-1} in one-line notation: sigma[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
// (sigma * tau)(i) = sigma(tau(i))
Perm perm_compose(const Perm& sigma, const Perm& tau);
Perm perm_inverse(const Perm& sigma);
int perm_sign(const Perm& sigma);
std::vector<Perm> all_perms(int n);

// Exact rational element of the symmetric group algebra.
class SymAlgebraElement {
 public:
  SymAlgebraElement() = default;
  explicit SymAlgebraElement(int n) : n_(n) {}

  int degree() const { return n_; }
  const std::map<Perm, Rational>& terms() const { return terms_; }

  void add(const Perm& sigma, const Rational& coeff);
  SymAlgebraElement operator+(const SymAlgebraElement& other) const;
  SymAlgebraElement operator*(const SymAlgebraElement& other) const;
  SymAlgebraElement scaled(const Rational& c) const;
  bool operator==(const SymAlgebraElement& other) const;

  static SymAlgebraElement identity(int n);
  static SymAlgebraElement zero(int n) { return SymAlgebraElement(n); }

 private:
  int n_ = 0;
  std::map<Perm, Rational> terms_;
};

// Standard Young tableaux of shape lambda, each as a row-major list of rows.
std::vector<std::vector<std::vector<int>>> standard_tableaux(
    const Partition& lambda);

// Young symmetrizer s_T = r_T c_T for the canonical (row-major) tableau.
SymAlgebraElement young_symmetrizer(const Partition& lambda, int cap = 8);
// Central isotypic projector (dim V_lambda / n!) sum_sigma chi_lambda(sigma)
// sigma, with characters from the rim-hook recurrence.
SymAlgebraElement isotypic_projector(const Partition& lambda, int cap = 8);

}  // namespace qclone

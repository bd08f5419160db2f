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

#include "qclone/diagram.hpp"

namespace qclone {

// Laurent polynomial in the loop parameter delta with rational coefficients,
// stored as exponent -> coefficient.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  static DeltaPoly constant(const Rational& c);
  static DeltaPoly delta_power(int e);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  void add(int exponent, const Rational& c);
  DeltaPoly operator+(const DeltaPoly& o) const;
  DeltaPoly operator*(const DeltaPoly& o) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Evaluate at delta = d.
  Rational evaluate(const Rational& d) const;
  bool operator==(const DeltaPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<int, Rational> coeffs_;
};

// Finite combination of diagrams with DeltaPoly coefficients; delta stays
// symbolic until a tensor representation specializes it to d.
class DiagramAlgebraElement {
 public:
  DiagramAlgebraElement() = default;
  explicit DiagramAlgebraElement(int k) : k_(k) {}

  int k() const { return k_; }
  const std::map<Diagram, DeltaPoly>& terms() const { return terms_; }

  void add(const Diagram& p, const DeltaPoly& coeff);
  void add(const Diagram& p, const Rational& coeff);
  DiagramAlgebraElement operator+(const DiagramAlgebraElement& o) const;
  DiagramAlgebraElement operator*(const DiagramAlgebraElement& o) const;
  bool operator==(const DiagramAlgebraElement& o) const;

  static DiagramAlgebraElement identity(int k);
  static DiagramAlgebraElement from_diagram(const Diagram& p);

 private:
  int k_ = 0;
  std::map<Diagram, DeltaPoly> terms_;
};

}  // namespace qclone

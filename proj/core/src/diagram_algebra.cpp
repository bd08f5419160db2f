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

#include "qclone/diagram_algebra.hpp"

namespace qclone {

DeltaPoly DeltaPoly::constant(const Rational& c) {
  DeltaPoly p;
  p.add(0, c);
  return p;
}

DeltaPoly DeltaPoly::delta_power(int e) {
  DeltaPoly p;
  p.add(e, 1);
  return p;
}

void DeltaPoly::add(int exponent, const Rational& c) {
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    if (c != 0) coeffs_.emplace(exponent, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
  DeltaPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.add(e, c);
  return out;
}

DeltaPoly DeltaPoly::operator*(const DeltaPoly& o) const {
  DeltaPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) out.add(e1 + e2, c1 * c2);
  return out;
}

Rational DeltaPoly::evaluate(const Rational& d) const {
  Rational total = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational term = c;
    for (int i = 0; i < e; ++i) term *= d;
    for (int i = 0; i > e; --i) term /= d;
    total += term;
  }
  return total;
}

void DiagramAlgebraElement::add(const Diagram& p, const DeltaPoly& coeff) {
  if (p.k() != k_) throw DimensionError("DiagramAlgebraElement: k mismatch");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(p, coeff);
  } else {
    DeltaPoly sum = it->second + coeff;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum;
  }
}

void DiagramAlgebraElement::add(const Diagram& p, const Rational& coeff) {
  add(p, DeltaPoly::constant(coeff));
}

DiagramAlgebraElement DiagramAlgebraElement::operator+(
    const DiagramAlgebraElement& o) const {
  if (k_ != o.k_) throw DimensionError("DiagramAlgebraElement: k mismatch");
  DiagramAlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, c);
  return out;
}

DiagramAlgebraElement DiagramAlgebraElement::operator*(
    const DiagramAlgebraElement& o) const {
  if (k_ != o.k_) throw DimensionError("DiagramAlgebraElement: k mismatch");
  DiagramAlgebraElement out(k_);
  for (const auto& [p, cp] : terms_) {
    for (const auto& [q, cq] : o.terms_) {
      auto [pq, loops] = compose(p, q);
      out.add(pq, cp * cq * DeltaPoly::delta_power(loops));
    }
  }
  return out;
}

bool DiagramAlgebraElement::operator==(const DiagramAlgebraElement& o) const {
  return k_ == o.k_ && terms_ == o.terms_;
}

DiagramAlgebraElement DiagramAlgebraElement::identity(int k) {
  return from_diagram(Diagram::identity(k));
}

DiagramAlgebraElement DiagramAlgebraElement::from_diagram(const Diagram& p) {
  DiagramAlgebraElement out(p.k());
  out.add(p, Rational(1));
  return out;
}

}  // namespace qclone

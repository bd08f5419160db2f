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

#include <cstdint>

#include "qclone/diagram.hpp"
#include "qclone/tensor_space.hpp"

namespace qclone {

struct CommutantReport {
  int diagramSpanRank = 0;   // rank of span{psi(p) : p in the family}
  int groupSpanRank = 0;     // rank of span{g^{x n}} over sampled g
  double maxCommutatorNorm = 0.0;
};

// Numerical Schur-Weyl check: the diagram algebra and the tensor powers of
// its dual group commute; ranks of both spans are reported. Dual groups:
// Symmetric -> U(d), Brauer -> O(d), UniformBlock -> diagonal unitaries
// times permutations, PartitionMonoid -> permutation matrices.
CommutantReport commutant_dimension(const Family& family, int n, int d,
                                    int samples, std::uint64_t seed);

}  // namespace qclone

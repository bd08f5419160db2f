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

#include "qclone/diagram.hpp"
#include "qclone/diagram_algebra.hpp"
#include "qclone/group_algebra.hpp"
#include "qclone/rational_op.hpp"
#include "qclone/tensor_space.hpp"

namespace qclone {

// psi(p) on (C^d)^{x k}: entry is 1 iff the indices attached to each block
// agree. Row indices read the left column (vertex k+i for factor i), column
// indices the right column (vertex i).
Mat tensor_rep(const Diagram& p, int d);
// Same entries, exact 0/1 sparse form.
RationalSparseOp tensor_rep_exact(const Diagram& p, int d);
// psi of an algebra element with delta specialized to d.
Mat tensor_rep(const DiagramAlgebraElement& x, int d);
// psi(sigma) moving factor i to position sigma(i).
Mat perm_rep(const Perm& sigma, int d);
Mat sym_algebra_rep(const SymAlgebraElement& x, int d);

// d^{closure loops}; equals the trace of tensor_rep(p, d).
BigInt trace_rep(const Diagram& p, int d);

}  // namespace qclone

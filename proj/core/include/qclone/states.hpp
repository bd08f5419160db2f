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

#include "qclone/tensor_space.hpp"

namespace qclone {

// |Omega> = (1/sqrt d) sum_i |ii>
Vec max_entangled_vec(int d);
// omega = |Omega><Omega|
Mat max_entangled(int d);
// Maximally mixed state on C^{d} x C^{d}.
Mat max_mixed_pair(int d);
// Swap operator on C^d x C^d (the unnormalized flip d*F).
Mat swap_op(int d);
// Normalized flip F = Swap/d (trace 1).
Mat flip_state(int d);
// X = (1/d) sum_i |ii><ii|
Mat diagonal_corr_state(int d);
// lambda * omega + (1-lambda) * I/d^2, lambda in [-1/(d^2-1), 1].
Mat isotropic_state(double lambda, int d);
// lambda * F + (1-lambda) * I/d^2, lambda in [1/(1-d), 1/(1+d)].
Mat werner_state(double lambda, int d);

// Projector onto the symmetric subspace of (C^d)^{x n}.
Mat symmetric_projector(int n, int d);

// Tr[rho |psi><psi|] for a pure reference state.
double fidelity_pure(const Mat& rhoPure, const Mat& sigma);

}  // namespace qclone

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

// Largest eigenvalue of a Hermitian matrix. Dense solver up to dense_cap();
// power iteration (with shift) above it.
double lambda_max(const Mat& a);
double lambda_min(const Mat& a);
Vec top_eigvec(const Mat& a);
// Eigenvectors spanning the eigenspace of the largest eigenvalue, within
// relative tolerance relTol.
std::vector<Vec> top_eigenspace(const Mat& a, double relTol = 1e-8);

bool is_psd(const Mat& a, double tol = 1e-9);

}  // namespace qclone

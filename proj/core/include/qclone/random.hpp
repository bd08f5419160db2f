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
#include <random>

#include "qclone/tensor_space.hpp"

namespace qclone {

using Rng = std::mt19937_64;

// Haar-distributed samples via QR of Ginibre matrices with phase fix.
Mat haar_unitary(int d, Rng& rng);
Eigen::MatrixXd haar_orthogonal(int d, Rng& rng);
Vec haar_pure_state(int d, Rng& rng);

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace qclone

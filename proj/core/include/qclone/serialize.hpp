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

#include <string>

#include "qclone/rational_op.hpp"
#include "qclone/tensor_space.hpp"

namespace qclone {

// JSON operator serialization:
// {"d":..,"n":..,"format":"coo","entries":[[row,col,re,im],...]} with
// entries in row-major order; values below `prune` are dropped.
std::string operator_to_json(const Mat& a, const TensorSpace& space,
                             double prune = 1e-14);
std::string operator_to_json(const RationalSparseOp& a);

std::string rational_to_string(const Rational& r);  // "7/19", "1"

}  // namespace qclone

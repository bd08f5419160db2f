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

#include <functional>

#include "qclone/tensor_space.hpp"

namespace qclone {

// C_Phi = (id x Phi)(d * omega); Phi maps d x d matrices to dOut x dOut.
Mat choi_of_map(const std::function<Mat(const Mat&)>& phi, int dIn);
// Tr_in[C (X^T x I)]
Mat apply_choi(const Mat& choi, const Mat& x, int dIn);

struct CptpReport {
  bool psd = false;
  double minEig = 0.0;
  double traceCondResidual = 0.0;
  bool ok(double psdTol = 1e-9, double trTol = 1e-10) const {
    return psd && traceCondResidual < trTol;
  }
};
// Checks C is PSD and Tr_out[C] = I_{dIn}; C lives on C^{dIn} x C^{dimOut}.
CptpReport cptp_check(const Mat& choi, int dIn, long dimOut);

}  // namespace qclone

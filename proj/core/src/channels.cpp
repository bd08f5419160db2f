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

#include "qclone/channels.hpp"

#include "qclone/spectral.hpp"

namespace qclone {

Mat choi_of_map(const std::function<Mat(const Mat&)>& phi, int dIn) {
  Mat probe = phi(Mat::Zero(dIn, dIn));
  const long dOut = probe.rows();
  Mat choi = Mat::Zero(dIn * dOut, dIn * dOut);
  for (int i = 0; i < dIn; ++i)
    for (int j = 0; j < dIn; ++j) {
      Mat e = Mat::Zero(dIn, dIn);
      e(i, j) = 1.0;
      choi.block(i * dOut, j * dOut, dOut, dOut) = phi(e);
    }
  return choi;
}

Mat apply_choi(const Mat& choi, const Mat& x, int dIn) {
  const long dOut = choi.rows() / dIn;
  if (choi.rows() != dIn * dOut || x.rows() != dIn || x.cols() != dIn)
    throw DimensionError("apply_choi: dimension mismatch");
  Mat out = Mat::Zero(dOut, dOut);
  for (int i = 0; i < dIn; ++i)
    for (int j = 0; j < dIn; ++j)
      out += x(i, j) * choi.block(i * dOut, j * dOut, dOut, dOut);
  return out;
}

CptpReport cptp_check(const Mat& choi, int dIn, long dimOut) {
  if (choi.rows() != dIn * dimOut)
    throw DimensionError("cptp_check: dimension mismatch");
  CptpReport report;
  Mat herm = (choi + choi.adjoint()) / 2.0;
  report.minEig = lambda_min(herm);
  double scale = std::max(1.0, herm.cwiseAbs().maxCoeff());
  report.psd = report.minEig >= -1e-9 * scale;
  Mat trOut = Mat::Zero(dIn, dIn);
  for (int i = 0; i < dIn; ++i)
    for (int j = 0; j < dIn; ++j)
      trOut(i, j) = choi.block(i * dimOut, j * dimOut, dimOut, dimOut).trace();
  report.traceCondResidual =
      (trOut - Mat::Identity(dIn, dIn)).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace qclone

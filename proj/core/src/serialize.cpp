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

#include "qclone/serialize.hpp"

#include <cmath>
#include <json.hpp>

namespace qclone {

std::string operator_to_json(const Mat& a, const TensorSpace& space,
                             double prune) {
  nlohmann::json j;
  j["d"] = space.d;
  j["n"] = space.n;
  j["format"] = "coo";
  nlohmann::json entries = nlohmann::json::array();
  for (long r = 0; r < a.rows(); ++r)
    for (long c = 0; c < a.cols(); ++c) {
      Complex v = a(r, c);
      if (std::abs(v) <= prune) continue;
      entries.push_back({r, c, v.real(), v.imag()});
    }
  j["entries"] = std::move(entries);
  return j.dump();
}

std::string operator_to_json(const RationalSparseOp& a) {
  nlohmann::json j;
  j["d"] = a.space().d;
  j["n"] = a.space().n;
  j["format"] = "coo";
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, val] : a.entries()) {
    if (val == 0) continue;
    entries.push_back({key.first, key.second,
                       static_cast<double>(val), 0.0});
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

std::string rational_to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace qclone

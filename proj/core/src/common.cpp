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

#include "qclone/common.hpp"

#include <cstdlib>

namespace qclone {

namespace {
long g_cap = 0;

long initial_cap() {
  if (const char* env = std::getenv("QCLONE_DENSE_CAP")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 4096;
}
}  // namespace

long dense_cap() {
  if (g_cap == 0) g_cap = initial_cap();
  return g_cap;
}

void set_dense_cap(long cap) { g_cap = cap; }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt odd_factorial(int n) {
  BigInt r = 1;
  for (int i = 2 * n - 1; i > 1; i -= 2) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace qclone

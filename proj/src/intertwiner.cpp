// Copyright 2026 The sfv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfv/intertwiner.hpp"

#include <cmath>

namespace sfv {

namespace {

// Two-qubit states as 4-vectors, index m0*2 + m1, |0> = spin up.
using Pair = std::array<cxd, 4>;

Pair singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return {cxd(0), cxd(r), cxd(-r), cxd(0)};
}

// Triplet component m in {+1, 0, -1}.
Pair triplet(int m) {
  const double r = 1.0 / std::sqrt(2.0);
  if (m == 1) return {cxd(1), cxd(0), cxd(0), cxd(0)};
  if (m == 0) return {cxd(0), cxd(r), cxd(r), cxd(0)};
  return {cxd(0), cxd(0), cxd(0), cxd(1)};
}

LegTensor outer(const Pair& a, const Pair& b) {
  LegTensor t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i * 4 + j] = a[i] * b[j];
  return t;
}

}  // namespace

std::array<LegTensor, 2> intertwiner_basis() {
  LegTensor iota0 = outer(singlet(), singlet());

  // |(j12=1)(j34=1); J=0> = sum_m C(1,m;1,-m|0,0) |1,m>|1,-m>,
  // C(1,m;1,-m|0,0) = (-1)^(1-m)/sqrt(3).
  LegTensor iota1{};
  const double r3 = 1.0 / std::sqrt(3.0);
  for (int m = -1; m <= 1; ++m) {
    double cg = ((1 - m) % 2 == 0 ? r3 : -r3);
    LegTensor term = outer(triplet(m), triplet(-m));
    for (int i = 0; i < 16; ++i) iota1[i] += cg * term[i];
  }
  return {iota0, iota1};
}

}  // namespace sfv

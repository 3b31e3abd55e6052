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

#ifndef SFV_INTERTWINER_HPP
#define SFV_INTERTWINER_HPP

#include <array>

#include "sfv/types.hpp"

namespace sfv {

/// Rank-4 tensor on four spin-1/2 legs, flattened with leg 0 as the most
/// significant bit: entry(m0,m1,m2,m3) = data[m0*8 + m1*4 + m2*2 + m3].
using LegTensor = std::array<cxd, 16>;

/// The SU(2)-invariant bilinear, eps(0,1) = +1, eps(1,0) = -1.
inline cxd epsilon(int m, int n) {
  if (m == 0 && n == 1) return cxd(1.0, 0.0);
  if (m == 1 && n == 0) return cxd(-1.0, 0.0);
  return cxd(0.0, 0.0);
}

/// Orthonormal basis {iota_0, iota_1} of the invariant subspace of four
/// spin-1/2 legs, recoupled in the channel pairing legs (0,1) and (2,3):
/// iota_0 carries intermediate spin 0 (singlet x singlet), iota_1 intermediate
/// spin 1 (triplet x triplet coupled to total spin 0, Condon-Shortley phases).
std::array<LegTensor, 2> intertwiner_basis();

}  // namespace sfv

#endif

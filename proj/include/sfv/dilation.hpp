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

#ifndef SFV_DILATION_HPP
#define SFV_DILATION_HPP

#include "sfv/types.hpp"

namespace sfv {

/// Max element deviation of U'U from the identity.
double unitarity_deviation(const Matrix& u);

/// Embeds a subunitary r x c matrix into a (r+c) x (r+c) unitary:
/// rows 0..r-1 of columns 0..c-1 hold m, the block below is the principal
/// square root of (I - m'm), and the remaining columns complete the basis by
/// Householder QR with the R-diagonal phases rotated away (deterministic).
/// Throws numerical_error if sigma_max(m) exceeds 1 + 1e-12; rescale first.
Matrix dilate(const Matrix& m);

}  // namespace sfv

#endif

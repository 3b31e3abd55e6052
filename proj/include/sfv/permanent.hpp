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

#ifndef SFV_PERMANENT_HPP
#define SFV_PERMANENT_HPP

#include "sfv/types.hpp"

namespace sfv {

/// Matrix permanent by Ryser's formula with Gray-code subset updates,
/// O(2^n n) time. Terms are accumulated in Gray-code order (fixed reduction
/// order). Empty matrix -> 1. Throws std::length_error above n = 30.
cxd permanent(const Matrix& a);

}  // namespace sfv

#endif

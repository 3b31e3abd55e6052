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

#include "sfv/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace sfv {

cxd permanent(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("permanent: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n > 30)
    throw std::length_error("permanent: refusing n > 30 (2^n work)");
  if (n == 0) return cxd(1.0);

  // Per(A) = sum_{S != empty} (-1)^(n-|S|) prod_i sum_{j in S} A_ij
  std::vector<cxd> row_sums(n, cxd(0));
  cxd total(0);
  std::uint32_t gray = 0;
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    std::uint32_t next = static_cast<std::uint32_t>(k ^ (k >> 1));
    std::uint32_t diff = next ^ gray;
    int j = std::countr_zero(diff);
    if (next & diff) {
      for (int i = 0; i < n; ++i) row_sums[i] += a(i, j);
    } else {
      for (int i = 0; i < n; ++i) row_sums[i] -= a(i, j);
    }
    gray = next;
    cxd prod(1.0);
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    int parity = (n - std::popcount(gray)) & 1;
    total += parity ? -prod : prod;
  }
  return total;
}

}  // namespace sfv

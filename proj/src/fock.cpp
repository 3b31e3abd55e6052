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

#include "sfv/fock.hpp"

#include "sfv/permanent.hpp"

namespace sfv {

FockState::FockState(std::vector<int> occ) : occupations(std::move(occ)) {
  for (int n : occupations)
    if (n < 0)
      throw std::domain_error("FockState: occupations must be non-negative");
}

int FockState::total() const {
  int n = 0;
  for (int o : occupations) n += o;
  return n;
}

FockState FockState::single(int mode, int n_modes) {
  std::vector<int> occ(n_modes, 0);
  occ.at(mode) = 1;
  return FockState(occ);
}

double transition_probability(const Matrix& e, const FockState& input,
                              const FockState& output) {
  if (static_cast<Eigen::Index>(input.modes()) != e.cols() ||
      static_cast<Eigen::Index>(output.modes()) != e.rows())
    throw std::invalid_argument(
        "transition_probability: mode count does not match transfer matrix");
  const int n = input.total();
  if (n != output.total())
    throw std::domain_error(
        "transition_probability: photon numbers of input and output differ");
  if (n == 0) return 1.0;

  Matrix sub(n, n);
  int c = 0;
  for (std::size_t j = 0; j < input.modes(); ++j)
    for (int rep = 0; rep < input.occupations[j]; ++rep, ++c)
      for (std::size_t i = 0, r = 0; i < output.modes(); ++i)
        for (int rr = 0; rr < output.occupations[i]; ++rr, ++r)
          sub(r, c) = e(i, j);

  double denom = 1.0;
  for (int s : input.occupations)
    for (int f = 2; f <= s; ++f) denom *= f;
  for (int t : output.occupations)
    for (int f = 2; f <= t; ++f) denom *= f;

  return std::norm(permanent(sub)) / denom;
}

}  // namespace sfv

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

#ifndef SFV_FOCK_HPP
#define SFV_FOCK_HPP

#include <vector>

#include "sfv/types.hpp"

namespace sfv {

/// Photon occupation numbers, one entry per mode.
struct FockState {
  std::vector<int> occupations;

  FockState() = default;
  explicit FockState(std::vector<int> occ);

  int total() const;
  std::size_t modes() const { return occupations.size(); }

  /// Single photon in the given mode.
  static FockState single(int mode, int n_modes);
};

/// Probability of measuring `output` given `input` photons through the
/// transfer matrix e (rows = output modes, cols = input modes):
/// |Per(E_sub)|^2 / (prod s_i! prod t_j!), columns of E_sub repeated by input
/// occupations and rows by output occupations. For subunitary e the outputs
/// sum to <= 1 (photons lost to the environment).
double transition_probability(const Matrix& e, const FockState& input,
                              const FockState& output);

}  // namespace sfv

#endif

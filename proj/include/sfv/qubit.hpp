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

#ifndef SFV_QUBIT_HPP
#define SFV_QUBIT_HPP

#include <array>

#include "sfv/types.hpp"

namespace sfv {

/// Bloch-angle state of one quantum tetrahedron: inclination theta in [0, pi],
/// azimuth phi in [0, 2*pi).
struct QubitState {
  double theta = 0.0;
  double phi = 0.0;

  QubitState() = default;
  QubitState(double theta_, double phi_);
};

/// (cos(theta/2), e^{i phi} sin(theta/2)); unit norm by construction.
std::array<cxd, 2> bloch_to_vector(const QubitState& q);

/// Five boundary tetrahedra. Labels 1 and 2 are the gate inputs, 3..5 the
/// outputs.
struct BoundaryState {
  std::array<QubitState, 5> tets;

  BoundaryState() = default;
  explicit BoundaryState(const std::array<QubitState, 5>& t) : tets(t) {}

  /// All five tetrahedra at the same angles.
  static BoundaryState all_equal(double theta, double phi);

  /// The all-regular boundary, every tetrahedron at (pi/2, pi/2).
  static BoundaryState all_regular();
};

/// The regular-tetrahedron point (pi/2, pi/2).
QubitState regular_tetrahedron();

}  // namespace sfv

#endif

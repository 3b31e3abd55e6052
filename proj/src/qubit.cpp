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

#include "sfv/qubit.hpp"

#include <cmath>

namespace sfv {

QubitState::QubitState(double theta_, double phi_) : theta(theta_), phi(phi_) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::domain_error("QubitState: theta must lie in [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * kPi))
    throw std::domain_error("QubitState: phi must lie in [0, 2*pi)");
}

std::array<cxd, 2> bloch_to_vector(const QubitState& q) {
  return {cxd(std::cos(q.theta / 2.0), 0.0),
          std::polar(std::sin(q.theta / 2.0), q.phi)};
}

QubitState regular_tetrahedron() { return QubitState(kPi / 2.0, kPi / 2.0); }

BoundaryState BoundaryState::all_equal(double theta, double phi) {
  QubitState q(theta, phi);
  return BoundaryState({q, q, q, q, q});
}

BoundaryState BoundaryState::all_regular() {
  return all_equal(kPi / 2.0, kPi / 2.0);
}

}  // namespace sfv

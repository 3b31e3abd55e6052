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

#ifndef SFV_MESH_HPP
#define SFV_MESH_HPP

#include <vector>

#include "sfv/types.hpp"

namespace sfv {

/// One tunable Mach-Zehnder cell on adjacent modes (mode, mode+1).
///
/// Cell convention (the single source of truth for this project):
///   T(theta, phi) = [ e^{i phi} cos(theta)   -sin(theta) ]
///                   [ e^{i phi} sin(theta)    cos(theta) ]
/// acting on (mode, mode+1). theta in [0, pi/2] is the coupler mixing angle
/// (transparent at theta = 0, balanced at pi/4), phi in [0, 2*pi) the phase on
/// the upper input arm. This equals the physical two-coupler cell up to a
/// per-cell global phase that a calibrated processor nulls.
struct MZICell {
  int mode = 0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Square mesh: cells applied to the input in sequence order, then the output
/// phases: U = diag(e^{i out}) * T_last * ... * T_first.
struct MZIMesh {
  int dim = 0;
  std::vector<MZICell> cells;
  std::vector<double> output_phases;
};

/// 2x2 transfer matrix of one cell.
Eigen::Matrix2cd cell_matrix(double theta, double phi);

/// Clements square-mesh decomposition. The nulling order walks the
/// anti-diagonals from the bottom-left corner, alternating column operations
/// (T^{-1} from the right) and row operations (T from the left); the residual
/// diagonal is commuted to the output side.
/// Throws numerical_error when u is not unitary within 1e-10.
MZIMesh clements_decompose(const Matrix& u);

Matrix clements_compose(const MZIMesh& mesh);

}  // namespace sfv

#endif

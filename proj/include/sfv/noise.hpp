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

#ifndef SFV_NOISE_HPP
#define SFV_NOISE_HPP

#include <cstdint>
#include <vector>

#include "sfv/mesh.hpp"
#include "sfv/types.hpp"

namespace sfv {

/// Imperfection model of the programmed processor.
///
/// Per cell, in fixed cell order, three Gaussian draws are consumed: jitter on
/// theta, jitter on phi (both scaled by phase_sigma) and an additive
/// perturbation of the splitting ratio cos^2(theta) scaled by splitter_sigma.
/// The perturbed ratio is clamped to [0, 1] and folded back to a canonical
/// cell, so the perturbed mesh remains valid. Loss is lumped per output mode:
/// E = diag(sqrt(transmissions)) * U_noisy. Output phases are not jittered
/// (they are pure gauge for every measurement simulated here).
struct NoiseModel {
  double phase_sigma = 0.0;
  double splitter_sigma = 0.0;
  std::vector<double> mode_transmissions;  // empty means lossless
  double photon_overlap = 1.0;             // x
  std::uint64_t seed = 0;

  void validate(int dim) const;
};

struct NoisyMesh {
  MZIMesh mesh;
  Matrix effective;  // E = D_loss * U_noisy, subunitary
};

/// Deterministic given (mesh, model). With all sigmas zero and unit
/// transmissions the effective matrix equals clements_compose(mesh) exactly.
NoisyMesh apply_noise(const MZIMesh& mesh, const NoiseModel& model);

/// Bisects phase_sigma so that the mean amplitude fidelity between the ideal
/// unitary and the phase-jittered one (no splitter noise, no loss) equals the
/// target over n_seeds deterministic seeds.
double calibrate_phase_sigma(const MZIMesh& mesh, double target_fidelity,
                             int n_seeds, double tolerance);

}  // namespace sfv

#endif

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

#include "sfv/noise.hpp"

#include <algorithm>
#include <cmath>

#include "sfv/rng.hpp"
#include "sfv/tomography.hpp"

namespace sfv {

void NoiseModel::validate(int dim) const {
  if (phase_sigma < 0.0 || splitter_sigma < 0.0)
    throw std::invalid_argument("NoiseModel: sigmas must be non-negative");
  if (!(photon_overlap >= 0.0 && photon_overlap <= 1.0))
    throw std::invalid_argument("NoiseModel: photon overlap must be in [0,1]");
  if (!mode_transmissions.empty() &&
      static_cast<int>(mode_transmissions.size()) != dim)
    throw std::invalid_argument(
        "NoiseModel: transmissions must match the mode count");
  for (double t : mode_transmissions)
    if (!(t > 0.0 && t <= 1.0))
      throw std::invalid_argument("NoiseModel: transmissions must be in (0,1]");
}

NoisyMesh apply_noise(const MZIMesh& mesh, const NoiseModel& model) {
  model.validate(mesh.dim);
  Rng rng(model.seed);

  MZIMesh noisy = mesh;
  const bool perturb = model.phase_sigma > 0.0 || model.splitter_sigma > 0.0;
  for (auto& cell : noisy.cells) {
    double g_theta = rng.gaussian();
    double g_phi = rng.gaussian();
    double g_ratio = rng.gaussian();
    if (!perturb) continue;
    double theta_j = cell.theta + model.phase_sigma * g_theta;
    double c = std::cos(theta_j);
    double ratio =
        std::clamp(c * c + model.splitter_sigma * g_ratio, 0.0, 1.0);
    cell.theta = std::acos(std::sqrt(ratio));
    double phi = cell.phi + model.phase_sigma * g_phi;
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;
    cell.phi = phi;
  }

  NoisyMesh out;
  out.mesh = noisy;
  out.effective = clements_compose(noisy);
  if (!model.mode_transmissions.empty()) {
    for (int i = 0; i < mesh.dim; ++i)
      out.effective.row(i) *= std::sqrt(model.mode_transmissions[i]);
  }
  return out;
}

double calibrate_phase_sigma(const MZIMesh& mesh, double target_fidelity,
                             int n_seeds, double tolerance) {
  if (n_seeds < 1)
    throw std::invalid_argument("calibrate_phase_sigma: need seeds");
  const Matrix ideal = clements_compose(mesh);
  const std::uint64_t base = 0x5f5e1u;  // fixed internal stream

  auto mean_fidelity = [&](double sigma) {
    double acc = 0.0;
    for (int s = 0; s < n_seeds; ++s) {
      NoiseModel nm;
      nm.phase_sigma = sigma;
      nm.seed = derive_seed(base, static_cast<std::uint64_t>(s));
      acc += amplitude_fidelity(ideal, apply_noise(mesh, nm).effective);
    }
    return acc / n_seeds;
  };

  double lo = 0.0, hi = 0.5;
  while (mean_fidelity(hi) > target_fidelity) {
    hi *= 2.0;
    if (hi > 8.0) break;
  }
  double sigma = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    sigma = 0.5 * (lo + hi);
    double f = mean_fidelity(sigma);
    if (std::abs(f - target_fidelity) <= 0.5 * tolerance) break;
    if (f > target_fidelity)
      lo = sigma;
    else
      hi = sigma;
    if (hi - lo < 1e-7) break;
  }
  return sigma;
}

}  // namespace sfv

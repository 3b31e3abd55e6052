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

#ifndef SFV_TOMOGRAPHY_HPP
#define SFV_TOMOGRAPHY_HPP

#include <vector>

#include "sfv/counts.hpp"
#include "sfv/types.hpp"

namespace sfv {

class insufficient_data_error : public std::runtime_error {
 public:
  explicit insufficient_data_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Two-photon setting: photons into input modes (in_a, in_b), coincidences
/// between output modes (out_a, out_b).
struct Quartet {
  int in_a = 0, in_b = 0;
  int out_a = 0, out_b = 0;
};

/// Measurement schedule for a rows x cols block under the gauge
/// arg(E_0j) = arg(E_i0) = 0.
///
/// hom_settings are the (rows-1)(cols-1) reference dips ((0,j) x (0,k)); each
/// determines cos(phase(E_kj)). auxiliary_settings are the adjacent-quartet
/// dips used to resolve the remaining sign per element (the (1,1) element is
/// the anchor whose branch fixes the overall conjugation, so it needs none).
struct MeasurementPlan {
  int rows = 0, cols = 0;
  std::vector<int> transmission_inputs;
  std::vector<Quartet> hom_settings;
  std::vector<Quartet> auxiliary_settings;
};

MeasurementPlan plan_measurements(int rows, int cols);

/// |E_ij| from count ratios; each column is normalized to unit norm, which
/// cancels any input-independent loss. counts(i, j) = clicks at output i for
/// input j; fractional values are allowed (exact-probability mode).
RealMatrix estimate_amplitudes(const RealMatrix& counts);

/// |E_ij| on an absolute scale: sqrt(counts / (rate * time)). Valid when the
/// source rate is known exactly, as it is in simulation.
RealMatrix estimate_amplitudes_absolute(const RealMatrix& counts,
                                        double rate_times_time);

struct PhaseEstimate {
  RealMatrix phases;     // first row and column identically zero
  bool clamped = false;  // a noisy cosine left [-1, 1] and was clamped
};

/// Solves element phases from HOM visibilities under the reference gauge.
/// Reference dips give each cos(phase); signs are resolved sequentially in
/// raster order against the auxiliary dips, then polished by sign sweeps over
/// all records. The overall complex conjugation is not observable here and is
/// left to gauge fixing. Throws config_error when the records do not cover
/// every free phase.
PhaseEstimate estimate_phases(const RealMatrix& amps,
                              const std::vector<VisibilityRecord>& records,
                              double x);

struct ReconstructionResult {
  Matrix matrix;
  std::vector<double> gauge_out;  // phases in [0, 2*pi)
  std::vector<double> gauge_in;
  double residual = 0.0;
  bool conjugated = false;  // set by reconstruct_against when conj(m) fit better
};

/// Minimizes ||diag(e^{i out}) m diag(e^{i in}) - target||_F by alternating
/// closed-form phase updates; stops when the decrease drops below 1e-12.
ReconstructionResult gauge_fix(const Matrix& m, const Matrix& target);

/// gauge_fix of both m and conj(m) (singles + HOM dips cannot tell them
/// apart); keeps whichever matches the target better.
ReconstructionResult reconstruct_against(const Matrix& m, const Matrix& target);

/// F = Tr(||a'|| |b|) / n with element-wise magnitudes; the two-argument form
/// column-normalizes copies and uses n = column count, so F(U, U) = 1 holds
/// for subunitary blocks too.
double amplitude_fidelity(const Matrix& a, const Matrix& b, double n);
double amplitude_fidelity(const Matrix& a, const Matrix& b);

}  // namespace sfv

#endif

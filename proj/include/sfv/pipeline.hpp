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

#ifndef SFV_PIPELINE_HPP
#define SFV_PIPELINE_HPP

#include <filesystem>
#include <string>

#include "sfv/matrix_io.hpp"
#include "sfv/mesh.hpp"
#include "sfv/noise.hpp"
#include "sfv/tomography.hpp"
#include "sfv/types.hpp"
#include "sfv/vertex.hpp"

namespace sfv {

/// Flat key = value configuration; see the README for the key list. All
/// defaults describe the published 12-mode experiment.
struct ExperimentConfig {
  std::uint64_t seed = 12345;
  int grid_resolution = 101;
  int n_random_samples = 20000;

  // noise model; phase_sigma < 0 requests calibration to fidelity 0.98
  double phase_sigma = -1.0;
  double splitter_sigma = 0.03;
  double photon_overlap = 0.9899;
  double transmission_min = 0.54;
  double transmission_max = 0.60;

  // counting statistics
  double single_rate_hz = 19600.0;
  double single_time_s = 60.0;
  double pair_rate_hz = 2560.0;
  double hom_time_s = 1500.0;
  int hom_delay_points = 25;
  double coherence_time_s = 3.0e-13;

  bool exact_probabilities = false;
  std::string out_dir = "out";

  static ExperimentConfig from_file(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);
  void validate() const;

  std::vector<double> transmissions() const;  // linear ramp over 12 modes
};

/// Everything produced by one simulated experiment.
struct RunResult {
  // theory side
  VertexTensor tensor;
  Matrix gate;      // 8x4, sigma_max = 1
  Matrix unitary;   // 12x12 dilation
  MZIMesh mesh;
  double phase_sigma_used = 0.0;

  // simulated measurement side
  Matrix effective;             // true noisy transfer matrix (12x12)
  RealMatrix singles_counts;    // 12x12, output x input
  std::vector<VisibilityRecord> visibilities;
  CountDataset singles_dataset;
  CountDataset dip_dataset;

  // reconstruction
  RealMatrix amplitudes_full;   // 12x12 column-normalized |E|
  Matrix gate_reconstructed;    // 8x4 gauge-fixed against `gate`
  ReconstructionResult reconstruction;
  bool phases_clamped = false;

  // metrics
  double fidelity_full = 0.0;
  double fidelity_sub = 0.0;
  cxd a_th_regular;
  cxd a_exp_regular;
  ExpectationResult expectation_th;
  ExpectationResult expectation_exp;
  double expectation_pct_diff = 0.0;
  double symmetry_residual_th = 0.0;
  double symmetry_residual_exp = 0.0;
  ScanGrid::Peak peak_th;
  ScanGrid::Peak peak_exp;
};

/// Runs compile -> noise -> counts -> reconstruct -> gauge fix -> metrics.
/// Deterministic given the config.
RunResult run_experiment(const ExperimentConfig& cfg);

/// Writes the vertex tensor, gate and dilated unitary files (cmd vertex).
void write_vertex_files(const ExperimentConfig& cfg);

/// Writes every run artifact plus the structured report (cmd run).
void write_run_files(const ExperimentConfig& cfg, const RunResult& result);

/// Renders the stable-schema report text.
std::string format_report(const ExperimentConfig& cfg, const RunResult& r);

/// Scan sources for cmd scan.
enum class ScanSource { kTheory, kReconstructed };

/// Writes one grid file for the given setup name ("all_equal" or
/// "vary_one_1".."vary_one_5"); returns the written path. Loads the matrix
/// from the out directory; a missing reconstructed gate reports that cmd run
/// must be executed first.
std::filesystem::path write_scan_file(const ExperimentConfig& cfg,
                                      const std::string& setup_name,
                                      ScanSource source);

ScanSetup parse_setup(const std::string& name);

}  // namespace sfv

#endif

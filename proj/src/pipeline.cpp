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

#include "sfv/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sfv/counts.hpp"
#include "sfv/dilation.hpp"
#include "sfv/hom.hpp"
#include "sfv/rng.hpp"

namespace sfv {

namespace {

// fixed stream ids hung off the master seed
constexpr std::uint64_t kStreamNoise = 1;
constexpr std::uint64_t kStreamExpectation = 2;
constexpr std::uint64_t kStreamSymmetry = 3;
constexpr std::uint64_t kStreamSingles = 0x1000;
constexpr std::uint64_t kStreamDips = 0x100000;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path.string());
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw config_error(path.string() + ":" + std::to_string(lineno) +
                         ": expected key = value");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  auto as_double = [&]() {
    try {
      return std::stod(value);
    } catch (const std::exception&) {
      throw config_error("config key '" + key + "': bad number '" + value +
                         "'");
    }
  };
  auto as_int = [&]() { return static_cast<int>(as_double()); };

  if (key == "seed") {
    seed = static_cast<std::uint64_t>(std::stoull(value));
  } else if (key == "grid.resolution") {
    grid_resolution = as_int();
  } else if (key == "random.samples") {
    n_random_samples = as_int();
  } else if (key == "noise.phase_sigma_rad") {
    phase_sigma = (value == "auto") ? -1.0 : as_double();
  } else if (key == "noise.splitter_sigma") {
    splitter_sigma = as_double();
  } else if (key == "noise.photon_overlap") {
    photon_overlap = as_double();
  } else if (key == "noise.transmission_min") {
    transmission_min = as_double();
  } else if (key == "noise.transmission_max") {
    transmission_max = as_double();
  } else if (key == "counts.single_rate_hz") {
    single_rate_hz = as_double();
  } else if (key == "counts.single_time_s") {
    single_time_s = as_double();
  } else if (key == "counts.pair_rate_hz") {
    pair_rate_hz = as_double();
  } else if (key == "counts.hom_time_s") {
    hom_time_s = as_double();
  } else if (key == "hom.delay_points") {
    hom_delay_points = as_int();
  } else if (key == "hom.coherence_time_s") {
    coherence_time_s = as_double();
  } else if (key == "exact_probabilities") {
    if (value == "true" || value == "1")
      exact_probabilities = true;
    else if (value == "false" || value == "0")
      exact_probabilities = false;
    else
      throw config_error("exact_probabilities must be true or false");
  } else if (key == "out_dir") {
    out_dir = value;
  } else {
    throw config_error("unknown config key: " + key);
  }
}

void ExperimentConfig::validate() const {
  if (grid_resolution < 2)
    throw config_error("grid.resolution must be at least 2");
  if (n_random_samples < 1)
    throw config_error("random.samples must be at least 1");
  if (!(single_rate_hz > 0.0) || !(pair_rate_hz > 0.0))
    throw config_error("count rates must be positive");
  if (!(single_time_s > 0.0) || !(hom_time_s > 0.0))
    throw config_error("integration times must be positive");
  if (hom_delay_points < 3)
    throw config_error("hom.delay_points must be at least 3");
  if (!(coherence_time_s > 0.0))
    throw config_error("hom.coherence_time_s must be positive");
  if (!(photon_overlap >= 0.0 && photon_overlap <= 1.0))
    throw config_error("noise.photon_overlap must lie in [0, 1]");
  if (!(transmission_min > 0.0 && transmission_min <= 1.0) ||
      !(transmission_max > 0.0 && transmission_max <= 1.0) ||
      transmission_min > transmission_max)
    throw config_error("transmissions must satisfy 0 < min <= max <= 1");
  if (splitter_sigma < 0.0)
    throw config_error("noise.splitter_sigma must be non-negative");
}

std::vector<double> ExperimentConfig::transmissions() const {
  std::vector<double> t(12);
  for (int i = 0; i < 12; ++i)
    t[i] = transmission_min +
           (transmission_max - transmission_min) * (i / 11.0);
  return t;
}

namespace {

// Weighted linear fit of a dip curve counts_k ~ B - A exp(-tau_k^2/T^2);
// returns (V = A/B, standard error of V).
std::pair<double, double> fit_visibility(const std::vector<double>& delays,
                                         const std::vector<double>& counts,
                                         double coherence_time) {
  const std::size_t n = delays.size();
  double s_w = 0, s_wg = 0, s_wgg = 0, s_wc = 0, s_wgc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double g = std::exp(-delays[k] * delays[k] /
                        (coherence_time * coherence_time));
    double w = 1.0 / std::max(counts[k], 1.0);  // Poisson variance weight
    s_w += w;
    s_wg += w * g;
    s_wgg += w * g * g;
    s_wc += w * counts[k];
    s_wgc += w * g * counts[k];
  }
  // minimize sum w (c - B + A g)^2 over (B, A)
  double det = s_w * s_wgg - s_wg * s_wg;
  if (std::abs(det) < 1e-30)
    throw numerical_error("fit_visibility: degenerate delay design");
  double b = (s_wgg * s_wc - s_wg * s_wgc) / det;
  double a = -(s_w * s_wgc - s_wg * s_wc) / det;
  double var_b = s_wgg / det;
  double var_a = s_w / det;
  double cov_ab = s_wg / det;  // cov(B, A) sign folded below
  if (b <= 0.0) return {0.0, 1.0};
  double v = a / b;
  double var_v = var_a / (b * b) + (a * a / (b * b * b * b)) * var_b -
                 2.0 * (a / (b * b * b)) * cov_ab;
  return {v, std::sqrt(std::max(var_v, 0.0))};
}

std::vector<double> delay_grid(int points, double coherence_time) {
  std::vector<double> delays(points);
  for (int k = 0; k < points; ++k)
    delays[k] = (k - (points - 1) / 2.0) * (8.0 * coherence_time) /
                (points - 1);
  return delays;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
  RunResult r;

  // theory side
  r.tensor = build_vertex_tensor();
  r.gate = gate_from_tensor(r.tensor);
  r.unitary = dilate(r.gate);
  r.mesh = clements_decompose(r.unitary);

  r.phase_sigma_used = cfg.phase_sigma >= 0.0
                           ? cfg.phase_sigma
                           : calibrate_phase_sigma(r.mesh, 0.98, 200, 0.002);

  NoiseModel nm;
  nm.phase_sigma = cfg.exact_probabilities ? 0.0 : r.phase_sigma_used;
  nm.splitter_sigma = cfg.exact_probabilities ? 0.0 : cfg.splitter_sigma;
  nm.photon_overlap = cfg.exact_probabilities ? 1.0 : cfg.photon_overlap;
  if (!cfg.exact_probabilities) nm.mode_transmissions = cfg.transmissions();
  nm.seed = derive_seed(cfg.seed, kStreamNoise);
  NoisyMesh noisy = apply_noise(r.mesh, nm);
  r.effective = noisy.effective;

  // single-photon transmission measurements, one per input mode
  r.singles_counts.resize(12, 12);
  r.singles_dataset.metadata["seed"] = std::to_string(cfg.seed);
  {
    std::ostringstream noise_desc;
    noise_desc << "phase_sigma=" << format_double(nm.phase_sigma)
               << " splitter_sigma=" << format_double(nm.splitter_sigma)
               << " overlap=" << format_double(nm.photon_overlap);
    r.singles_dataset.metadata["noise"] = noise_desc.str();
    r.dip_dataset.metadata = r.singles_dataset.metadata;
  }
  for (int j = 0; j < 12; ++j) {
    for (int i = 0; i < 12; ++i) {
      double p = std::norm(r.effective(i, j));
      CountRecord rec;
      if (cfg.exact_probabilities) {
        // infinite statistics: keep the exact expected value
        r.singles_counts(i, j) = p * cfg.single_rate_hz * cfg.single_time_s;
        rec.integration_time = cfg.single_time_s;
        rec.counts = static_cast<std::uint64_t>(
            std::llround(r.singles_counts(i, j)));
      } else {
        rec = sample_counts(p, cfg.single_rate_hz, cfg.single_time_s,
                            derive_seed(cfg.seed, kStreamSingles + j * 16 + i));
        r.singles_counts(i, j) = static_cast<double>(rec.counts);
      }
      rec.input_modes = {j};
      rec.output_modes = {i};
      r.singles_dataset.records.push_back(rec);
    }
  }

  // HOM dips for the 8x4 block phases
  MeasurementPlan plan = plan_measurements(8, 4);
  std::vector<Quartet> settings = plan.hom_settings;
  settings.insert(settings.end(), plan.auxiliary_settings.begin(),
                  plan.auxiliary_settings.end());
  const auto delays = delay_grid(cfg.hom_delay_points, cfg.coherence_time_s);
  const double time_per_point = cfg.hom_time_s / cfg.hom_delay_points;
  for (std::size_t qi = 0; qi < settings.size(); ++qi) {
    const Quartet& q = settings[qi];
    VisibilityRecord vr;
    vr.input_i = q.in_a;
    vr.input_j = q.in_b;
    vr.output_k = q.out_a;
    vr.output_l = q.out_b;
    if (cfg.exact_probabilities) {
      vr.visibility = hom_visibility(r.effective, q.in_a, q.in_b, q.out_a,
                                     q.out_b, nm.photon_overlap);
      vr.uncertainty = 0.0;
    } else {
      auto curve = hom_delay_scan(r.effective, q.in_a, q.in_b, q.out_a,
                                  q.out_b, delays, nm.photon_overlap,
                                  cfg.coherence_time_s);
      std::vector<double> counts(curve.size());
      for (std::size_t k = 0; k < curve.size(); ++k) {
        CountRecord rec = sample_counts(
            std::min(curve[k], 1.0), cfg.pair_rate_hz, time_per_point,
            derive_seed(cfg.seed, kStreamDips + qi * 1024 + k));
        rec.input_modes = {q.in_a, q.in_b};
        rec.output_modes = {q.out_a, q.out_b};
        counts[k] = static_cast<double>(rec.counts);
        r.dip_dataset.records.push_back(rec);
      }
      auto [v, sigma] = fit_visibility(delays, counts, cfg.coherence_time_s);
      // the fitted depth is at x(0) = overlap; rescale to the x-referenced
      // visibility used by the phase solver
      vr.visibility = v;
      vr.uncertainty = sigma;
    }
    r.visibilities.push_back(vr);
  }

  // reconstruction
  r.amplitudes_full = estimate_amplitudes(r.singles_counts);
  RealMatrix sub_amps = r.amplitudes_full.block(0, 0, 8, 4);
  PhaseEstimate phases =
      estimate_phases(sub_amps, r.visibilities, nm.photon_overlap);
  r.phases_clamped = phases.clamped;
  Matrix raw_sub(8, 4);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 4; ++j)
      raw_sub(i, j) = std::polar(sub_amps(i, j), phases.phases(i, j));
  r.reconstruction = reconstruct_against(raw_sub, r.gate);
  r.gate_reconstructed = r.reconstruction.matrix;

  // metrics
  r.fidelity_full =
      amplitude_fidelity(r.unitary, r.amplitudes_full.cast<cxd>());
  r.fidelity_sub = amplitude_fidelity(r.gate, r.gate_reconstructed);
  BoundaryState regular = BoundaryState::all_regular();
  r.a_th_regular = amplitude_from_matrix(r.gate, regular);
  r.a_exp_regular = amplitude_from_matrix(r.gate_reconstructed, regular);
  std::uint64_t exp_seed = derive_seed(cfg.seed, kStreamExpectation);
  r.expectation_th =
      expectation_random(r.gate, cfg.n_random_samples, exp_seed);
  r.expectation_exp =
      expectation_random(r.gate_reconstructed, cfg.n_random_samples, exp_seed);
  double denom = std::abs(r.expectation_th.mean);
  r.expectation_pct_diff =
      denom > 0.0
          ? 100.0 * std::abs(r.expectation_exp.mean - r.expectation_th.mean) /
                denom
          : 0.0;
  std::uint64_t sym_seed = derive_seed(cfg.seed, kStreamSymmetry);
  r.symmetry_residual_th = symmetry_residual(r.gate, 1000, sym_seed);
  r.symmetry_residual_exp =
      symmetry_residual(r.gate_reconstructed, 1000, sym_seed);
  r.peak_th =
      scan_amplitudes(r.gate, ScanSetup::all_equal(), cfg.grid_resolution)
          .peak();
  r.peak_exp = scan_amplitudes(r.gate_reconstructed, ScanSetup::all_equal(),
                               cfg.grid_resolution)
                   .peak();
  return r;
}

namespace {

std::filesystem::path ensure_out_dir(const ExperimentConfig& cfg) {
  std::filesystem::path dir(cfg.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir))
    throw io_error("cannot create output directory: " + dir.string());
  return dir;
}

std::map<std::string, std::string> tensor_metadata(const VertexTensor& t) {
  return {{"norm_scale", format_double(t.norm_scale)},
          {"convention", kVertexConvention},
          {"layout", "index i1*16+i2*8+i3*4+i4*2+i5, one entry per row"}};
}

}  // namespace

void write_vertex_files(const ExperimentConfig& cfg) {
  auto dir = ensure_out_dir(cfg);
  VertexTensor t = build_vertex_tensor();
  Matrix gate = gate_from_tensor(t);
  Matrix unitary = dilate(gate);

  Matrix tensor_col(32, 1);
  for (int idx = 0; idx < 32; ++idx) tensor_col(idx, 0) = t.entries[idx];
  write_matrix(dir / "vertex_tensor.txt", tensor_col, tensor_metadata(t));
  write_matrix(dir / "gate_theory.txt", gate, tensor_metadata(t));
  write_matrix(dir / "unitary_theory.txt", unitary,
               {{"convention", kVertexConvention},
                {"block", "gate at rows 1-8, cols 1-4"}});
}

std::string format_report(const ExperimentConfig& cfg, const RunResult& r) {
  std::ostringstream out;
  auto d = [](double v) { return format_double(v); };
  auto c = [&](cxd v) {
    return format_double(v.real()) + (v.imag() < 0 ? " - " : " + ") +
           format_double(std::abs(v.imag())) + "i";
  };
  out << "schema = sfv-report v1\n";
  out << "seed = " << cfg.seed << "\n";
  out << "exact_probabilities = " << (cfg.exact_probabilities ? "true" : "false")
      << "\n";
  out << "noise.phase_sigma_rad = " << d(r.phase_sigma_used) << "\n";
  out << "noise.splitter_sigma = " << d(cfg.splitter_sigma) << "\n";
  out << "noise.photon_overlap = " << d(cfg.photon_overlap) << "\n";
  out << "fidelity.full_12x12 = " << d(r.fidelity_full) << "\n";
  out << "fidelity.sub_8x4 = " << d(r.fidelity_sub) << "\n";
  out << "amplitude.regular.theory = " << c(r.a_th_regular) << "\n";
  out << "amplitude.regular.reconstructed = " << c(r.a_exp_regular) << "\n";
  out << "amplitude.regular.abs.theory = " << d(std::abs(r.a_th_regular))
      << "\n";
  out << "amplitude.regular.abs.reconstructed = "
      << d(std::abs(r.a_exp_regular)) << "\n";
  double paper_abs = std::abs(cxd(-0.287, -0.497));
  double delta = std::abs(std::abs(r.a_th_regular) - paper_abs) / paper_abs;
  out << "amplitude.regular.abs.reference = " << d(paper_abs) << "\n";
  out << "amplitude.regular.abs.reference_delta = " << d(delta) << "\n";
  out << "amplitude.regular.convention = "
      << (delta <= 0.05 ? "matched" : "delta-documented") << "\n";
  out << "expectation.theory = " << c(r.expectation_th.mean) << "\n";
  out << "expectation.theory.stderr = " << d(r.expectation_th.standard_error)
      << "\n";
  out << "expectation.reconstructed = " << c(r.expectation_exp.mean) << "\n";
  out << "expectation.reconstructed.stderr = "
      << d(r.expectation_exp.standard_error) << "\n";
  out << "expectation.pct_diff = " << d(r.expectation_pct_diff) << "\n";
  out << "symmetry.residual.theory = " << d(r.symmetry_residual_th) << "\n";
  out << "symmetry.residual.reconstructed = " << d(r.symmetry_residual_exp)
      << "\n";
  out << "peak.theory.theta = " << d(r.peak_th.theta) << "\n";
  out << "peak.theory.phi = " << d(r.peak_th.phi) << "\n";
  out << "peak.theory.abs = " << d(r.peak_th.magnitude) << "\n";
  out << "peak.reconstructed.theta = " << d(r.peak_exp.theta) << "\n";
  out << "peak.reconstructed.phi = " << d(r.peak_exp.phi) << "\n";
  out << "peak.reconstructed.abs = " << d(r.peak_exp.magnitude) << "\n";
  out << "reconstruction.residual = " << d(r.reconstruction.residual) << "\n";
  out << "reconstruction.conjugated = "
      << (r.reconstruction.conjugated ? "true" : "false") << "\n";
  out << "reconstruction.phases_clamped = "
      << (r.phases_clamped ? "true" : "false") << "\n";
  return out.str();
}

void write_run_files(const ExperimentConfig& cfg, const RunResult& r) {
  auto dir = ensure_out_dir(cfg);
  write_matrix(dir / "gate_theory.txt", r.gate, tensor_metadata(r.tensor));
  Matrix tensor_col(32, 1);
  for (int idx = 0; idx < 32; ++idx) tensor_col(idx, 0) = r.tensor.entries[idx];
  write_matrix(dir / "vertex_tensor.txt", tensor_col,
               tensor_metadata(r.tensor));
  write_matrix(dir / "unitary_theory.txt", r.unitary,
               {{"convention", kVertexConvention}});
  write_mesh(dir / "mesh_theory.txt", r.mesh);
  write_matrix(dir / "effective_true.txt", r.effective,
               {{"note", "true noisy transfer matrix, for reference"}});
  write_counts(dir / "counts_singles.txt", r.singles_dataset);
  write_counts(dir / "counts_dips.txt", r.dip_dataset);
  write_matrix(dir / "amplitudes_full.txt", r.amplitudes_full.cast<cxd>(),
               {{"note", "column-normalized reconstructed magnitudes"}});
  write_matrix(dir / "gate_reconstructed.txt", r.gate_reconstructed,
               {{"gauge", "fixed against gate_theory.txt"},
                {"conjugated", r.reconstruction.conjugated ? "true" : "false"}});

  // visibility table
  {
    std::ofstream vis(dir / "visibilities.txt");
    if (!vis) throw io_error("cannot write visibilities.txt");
    vis << "# sfv-visibilities v1\n";
    vis << "# in_i,in_j,out_k,out_l,visibility,uncertainty\n";
    for (const auto& v : r.visibilities)
      vis << v.input_i << ',' << v.input_j << ',' << v.output_k << ','
          << v.output_l << ',' << format_double(v.visibility) << ','
          << format_double(v.uncertainty) << '\n';
  }
  // reconstruction report
  {
    std::ofstream rec(dir / "reconstruction.txt");
    if (!rec) throw io_error("cannot write reconstruction.txt");
    rec << "schema = sfv-reconstruction v1\n";
    rec << "residual = " << format_double(r.reconstruction.residual) << "\n";
    rec << "conjugated = "
        << (r.reconstruction.conjugated ? "true" : "false") << "\n";
    rec << "phases_clamped = " << (r.phases_clamped ? "true" : "false")
        << "\n";
    for (std::size_t i = 0; i < r.reconstruction.gauge_out.size(); ++i)
      rec << "gauge.out." << i << " = "
          << format_double(r.reconstruction.gauge_out[i]) << "\n";
    for (std::size_t i = 0; i < r.reconstruction.gauge_in.size(); ++i)
      rec << "gauge.in." << i << " = "
          << format_double(r.reconstruction.gauge_in[i]) << "\n";
  }
  std::ofstream report(dir / "report.txt");
  if (!report) throw io_error("cannot write report.txt");
  report << format_report(cfg, r);
}

ScanSetup parse_setup(const std::string& name) {
  if (name == "all_equal") return ScanSetup::all_equal();
  if (name.rfind("vary_one_", 0) == 0 && name.size() == 10) {
    int label = name[9] - '0';
    if (label >= 1 && label <= 5) return ScanSetup::vary_one(label);
  }
  throw config_error("unknown scan setup '" + name +
                     "' (expected all_equal or vary_one_1..vary_one_5)");
}

std::filesystem::path write_scan_file(const ExperimentConfig& cfg,
                                      const std::string& setup_name,
                                      ScanSource source) {
  auto dir = ensure_out_dir(cfg);
  ScanSetup setup = parse_setup(setup_name);
  std::filesystem::path matrix_path =
      dir / (source == ScanSource::kTheory ? "gate_theory.txt"
                                           : "gate_reconstructed.txt");
  Matrix m;
  if (source == ScanSource::kTheory &&
      !std::filesystem::exists(matrix_path)) {
    m = gate_from_tensor(build_vertex_tensor());
  } else {
    if (!std::filesystem::exists(matrix_path))
      throw config_error("missing " + matrix_path.string() +
                         "; run the 'run' command first");
    m = read_matrix(matrix_path).matrix;
  }
  ScanGrid grid = scan_amplitudes(m, setup, cfg.grid_resolution);
  std::string stem = std::string("scan_") + setup_name + "_" +
                     (source == ScanSource::kTheory ? "theory" : "exp") +
                     ".txt";
  std::filesystem::path out_path = dir / stem;
  write_grid(out_path, grid);
  return out_path;
}

}  // namespace sfv

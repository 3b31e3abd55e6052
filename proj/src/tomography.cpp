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

#include "sfv/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sfv {

MeasurementPlan plan_measurements(int rows, int cols) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("plan_measurements: need at least 2x2");
  MeasurementPlan plan;
  plan.rows = rows;
  plan.cols = cols;
  for (int j = 0; j < cols; ++j) plan.transmission_inputs.push_back(j);
  for (int k = 1; k < rows; ++k)
    for (int j = 1; j < cols; ++j)
      plan.hom_settings.push_back({0, j, 0, k});
  for (int k = 1; k < rows; ++k) {
    for (int j = 1; j < cols; ++j) {
      if (k == 1 && j == 1) continue;  // anchor element
      plan.auxiliary_settings.push_back({j - 1, j, k - 1, k});
    }
  }
  return plan;
}

RealMatrix estimate_amplitudes(const RealMatrix& counts) {
  RealMatrix amps(counts.rows(), counts.cols());
  for (int j = 0; j < counts.cols(); ++j) {
    double total = counts.col(j).sum();
    if (!(total > 0.0))
      throw insufficient_data_error(
          "estimate_amplitudes: no counts for input " + std::to_string(j));
    for (int i = 0; i < counts.rows(); ++i)
      amps(i, j) = std::sqrt(std::max(counts(i, j), 0.0) / total);
  }
  return amps;
}

RealMatrix estimate_amplitudes_absolute(const RealMatrix& counts,
                                        double rate_times_time) {
  if (!(rate_times_time > 0.0))
    throw std::invalid_argument("estimate_amplitudes_absolute: rate*time <= 0");
  RealMatrix amps(counts.rows(), counts.cols());
  for (int j = 0; j < counts.cols(); ++j)
    for (int i = 0; i < counts.rows(); ++i)
      amps(i, j) = std::sqrt(std::max(counts(i, j), 0.0) / rate_times_time);
  return amps;
}

namespace {

// Predicted visibility of quartet q for magnitudes `amps` and phases `phi`.
// Returns NaN when both interfering paths vanish.
double predict_visibility(const RealMatrix& amps, const RealMatrix& phi,
                          const Quartet& q, double x) {
  cxd eki = std::polar(amps(q.out_a, q.in_a), phi(q.out_a, q.in_a));
  cxd elj = std::polar(amps(q.out_b, q.in_b), phi(q.out_b, q.in_b));
  cxd ekj = std::polar(amps(q.out_a, q.in_b), phi(q.out_a, q.in_b));
  cxd eli = std::polar(amps(q.out_b, q.in_a), phi(q.out_b, q.in_a));
  cxd a = eki * elj;
  cxd b = ekj * eli;
  double pd = std::norm(a) + std::norm(b);
  if (pd <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return -2.0 * x * x * std::real(a * std::conj(b)) / pd;
}

}  // namespace

PhaseEstimate estimate_phases(const RealMatrix& amps,
                              const std::vector<VisibilityRecord>& records,
                              double x) {
  if (!(x > 0.0))
    throw std::invalid_argument("estimate_phases: overlap x must be positive");
  const int rows = static_cast<int>(amps.rows());
  const int cols = static_cast<int>(amps.cols());

  std::map<std::array<int, 4>, double> by_setting;
  for (const auto& r : records)
    by_setting[{r.input_i, r.input_j, r.output_k, r.output_l}] = r.visibility;
  auto lookup = [&](const Quartet& q) -> const double* {
    auto it = by_setting.find({q.in_a, q.in_b, q.out_a, q.out_b});
    return it == by_setting.end() ? nullptr : &it->second;
  };

  PhaseEstimate est;
  est.phases = RealMatrix::Zero(rows, cols);

  // Cosine of each free phase from its reference dip.
  for (int k = 1; k < rows; ++k) {
    for (int j = 1; j < cols; ++j) {
      Quartet ref{0, j, 0, k};
      const double* v = lookup(ref);
      if (v == nullptr)
        throw config_error(
            "estimate_phases: plan does not cover element (" +
            std::to_string(k) + "," + std::to_string(j) + ")");
      double a = amps(0, 0) * amps(k, j);
      double b = amps(0, j) * amps(k, 0);
      if (a * b <= 0.0) {
        est.phases(k, j) = 0.0;  // phase of a vanishing element is moot
        continue;
      }
      double c = -(*v) * (a * a + b * b) / (2.0 * x * x * a * b);
      if (c < -1.0 || c > 1.0) est.clamped = true;
      est.phases(k, j) = std::acos(std::clamp(c, -1.0, 1.0));
    }
  }

  // Resolve signs in raster order against the auxiliary dips. Element (1,1)
  // is the anchor; flipping every sign at once is the unobservable global
  // conjugation.
  MeasurementPlan plan = plan_measurements(rows, cols);
  std::map<std::array<int, 2>, Quartet> aux_for;
  for (const auto& q : plan.auxiliary_settings)
    aux_for[{q.out_b, q.in_b}] = q;
  for (int k = 1; k < rows; ++k) {
    for (int j = 1; j < cols; ++j) {
      auto it = aux_for.find({k, j});
      if (it == aux_for.end()) continue;
      const double* v = lookup(it->second);
      if (v == nullptr) continue;
      double keep = est.phases(k, j);
      double best = std::numeric_limits<double>::infinity();
      for (double cand : {keep, -keep}) {
        est.phases(k, j) = cand;
        double p = predict_visibility(amps, est.phases, it->second, x);
        if (std::isnan(p)) continue;
        double err = std::abs(p - *v);
        if (err < best) {
          best = err;
          keep = cand;
        }
      }
      est.phases(k, j) = keep;
    }
  }

  // Sign sweeps over every record until stable.
  std::vector<std::pair<Quartet, double>> all;
  for (const auto& r : records)
    all.push_back({{r.input_i, r.input_j, r.output_k, r.output_l},
                   r.visibility});
  auto cost = [&]() {
    double s = 0.0;
    for (const auto& [q, v] : all) {
      double p = predict_visibility(amps, est.phases, q, x);
      if (!std::isnan(p)) s += (p - v) * (p - v);
    }
    return s;
  };
  for (int sweep = 0; sweep < 8; ++sweep) {
    bool improved = false;
    for (int k = 1; k < rows; ++k) {
      for (int j = 1; j < cols; ++j) {
        if (est.phases(k, j) == 0.0) continue;
        double before = cost();
        est.phases(k, j) = -est.phases(k, j);
        if (cost() + 1e-15 < before) {
          improved = true;
        } else {
          est.phases(k, j) = -est.phases(k, j);
        }
      }
    }
    if (!improved) break;
  }
  return est;
}

namespace {

double gauge_residual(const Matrix& m, const Matrix& target) {
  return (m - target).norm();
}

ReconstructionResult gauge_fix_impl(const Matrix& m, const Matrix& target) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<double> dout(rows, 0.0), din(cols, 0.0);
  double prev = std::numeric_limits<double>::infinity();
  Matrix fixed = m;
  for (int it = 0; it < 500; ++it) {
    // output phases given input phases
    Matrix mi = m;
    for (int j = 0; j < cols; ++j) mi.col(j) *= std::polar(1.0, din[j]);
    for (int k = 0; k < rows; ++k) {
      cxd c(0.0);
      for (int j = 0; j < cols; ++j) c += std::conj(mi(k, j)) * target(k, j);
      dout[k] = (std::abs(c) > 0.0) ? std::arg(c) : 0.0;
    }
    Matrix mo = m;
    for (int k = 0; k < rows; ++k) mo.row(k) *= std::polar(1.0, dout[k]);
    for (int j = 0; j < cols; ++j) {
      cxd c(0.0);
      for (int k = 0; k < rows; ++k) c += std::conj(mo(k, j)) * target(k, j);
      din[j] = (std::abs(c) > 0.0) ? std::arg(c) : 0.0;
    }
    fixed = m;
    for (int k = 0; k < rows; ++k) fixed.row(k) *= std::polar(1.0, dout[k]);
    for (int j = 0; j < cols; ++j) fixed.col(j) *= std::polar(1.0, din[j]);
    double r = gauge_residual(fixed, target);
    if (prev - r < 1e-12) {
      prev = std::min(prev, r);
      break;
    }
    prev = r;
  }
  ReconstructionResult out;
  out.matrix = fixed;
  auto wrap = [](double p) {
    p = std::fmod(p, 2.0 * kPi);
    return p < 0.0 ? p + 2.0 * kPi : p;
  };
  for (double p : dout) out.gauge_out.push_back(wrap(p));
  for (double p : din) out.gauge_in.push_back(wrap(p));
  out.residual = gauge_residual(fixed, target);
  return out;
}

}  // namespace

ReconstructionResult gauge_fix(const Matrix& m, const Matrix& target) {
  if (m.rows() != target.rows() || m.cols() != target.cols())
    throw std::invalid_argument("gauge_fix: shape mismatch");
  return gauge_fix_impl(m, target);
}

ReconstructionResult reconstruct_against(const Matrix& m,
                                         const Matrix& target) {
  ReconstructionResult direct = gauge_fix(m, target);
  ReconstructionResult conj = gauge_fix(m.conjugate(), target);
  if (conj.residual + 1e-12 < direct.residual) {
    conj.conjugated = true;
    return conj;
  }
  return direct;
}

double amplitude_fidelity(const Matrix& a, const Matrix& b, double n) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("amplitude_fidelity: shape mismatch");
  if (!(n > 0.0))
    throw std::invalid_argument("amplitude_fidelity: normalizer must be > 0");
  return a.cwiseAbs().cwiseProduct(b.cwiseAbs()).sum() / n;
}

double amplitude_fidelity(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("amplitude_fidelity: shape mismatch");
  Matrix an = a, bn = b;
  for (int j = 0; j < a.cols(); ++j) {
    double na = an.col(j).norm();
    double nb = bn.col(j).norm();
    if (na > 0.0) an.col(j) /= na;
    if (nb > 0.0) bn.col(j) /= nb;
  }
  return amplitude_fidelity(an, bn, static_cast<double>(a.cols()));
}

}  // namespace sfv

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

#include <cmath>

#include "doctest.h"
#include "sfv/hom.hpp"
#include "sfv/rng.hpp"
#include "sfv/tomography.hpp"

using namespace sfv;

namespace {

std::vector<VisibilityRecord> exact_records(const Matrix& e,
                                            const MeasurementPlan& plan,
                                            double x) {
  std::vector<VisibilityRecord> records;
  auto add = [&](const Quartet& q) {
    VisibilityRecord r;
    r.input_i = q.in_a;
    r.input_j = q.in_b;
    r.output_k = q.out_a;
    r.output_l = q.out_b;
    r.visibility = hom_visibility(e, q.in_a, q.in_b, q.out_a, q.out_b, x);
    records.push_back(r);
  };
  for (const auto& q : plan.hom_settings) add(q);
  for (const auto& q : plan.auxiliary_settings) add(q);
  return records;
}

}  // namespace

TEST_CASE("plan_measurements: setting counts") {
  auto p84 = plan_measurements(8, 4);
  CHECK(p84.hom_settings.size() == 21);
  CHECK(p84.transmission_inputs.size() == 4);
  CHECK(plan_measurements(2, 2).hom_settings.size() == 1);
  CHECK(plan_measurements(12, 12).hom_settings.size() == 121);
  CHECK_THROWS_AS(plan_measurements(1, 4), std::invalid_argument);
}

TEST_CASE("estimate_amplitudes: exact probabilities recover |U|") {
  Rng rng(1);
  Matrix u = haar_unitary(6, 1 ? rng : rng);
  RealMatrix counts(6, 6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) counts(i, j) = std::norm(u(i, j)) * 1e9;
  RealMatrix amps = estimate_amplitudes(counts);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i)
      CHECK(std::abs(amps(i, j) - std::abs(u(i, j))) < 1e-12);
}

TEST_CASE("estimate_amplitudes: uniform counts give 1/sqrt(rows)") {
  RealMatrix counts = RealMatrix::Constant(8, 3, 250.0);
  RealMatrix amps = estimate_amplitudes(counts);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 8; ++i)
      CHECK(amps(i, j) == doctest::Approx(1.0 / std::sqrt(8.0)));
}

TEST_CASE("estimate_amplitudes: zero column is insufficient data") {
  RealMatrix counts = RealMatrix::Zero(4, 2);
  counts.col(0).setConstant(10.0);
  CHECK_THROWS_AS(estimate_amplitudes(counts), insufficient_data_error);
}

TEST_CASE("estimate_amplitudes: Poisson noise at paper statistics stays below "
          "1% per entry") {
  Rng rng(2);
  Matrix u = haar_unitary(12, rng);
  double total = 19600.0 * 60.0;  // 1.176e6 expected clicks per input
  RealMatrix counts(12, 12);
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 12; ++i) {
      Rng cell(derive_seed(900 + j, i));
      counts(i, j) = double(cell.poisson(std::norm(u(i, j)) * total));
    }
  RealMatrix amps = estimate_amplitudes(counts);
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 12; ++i) {
      double truth = std::abs(u(i, j));
      if (truth < 0.1) continue;  // tiny entries have tiny weight
      CHECK(std::abs(amps(i, j) - truth) / truth < 0.01);
    }
}

TEST_CASE("estimate_phases: noiseless round trip on Haar blocks") {
  Rng rng(3);
  const double x = 0.9899;
  for (int trial = 0; trial < 6; ++trial) {
    Matrix u = haar_unitary(12, rng);
    Matrix e = u.block(0, 0, 8, 4);
    auto plan = plan_measurements(8, 4);
    RealMatrix amps = e.cwiseAbs();
    auto est = estimate_phases(amps, exact_records(e, plan, x), x);
    CHECK_FALSE(est.clamped);
    Matrix rec(8, 4);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 4; ++j)
        rec(i, j) = std::polar(amps(i, j), est.phases(i, j));
    auto fixed = reconstruct_against(rec, e);
    CHECK((fixed.matrix - e).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("estimate_phases: real positive matrix has zero phases") {
  RealMatrix amps = RealMatrix::Constant(4, 3, 0.5);
  Matrix e = amps.cast<cxd>();
  auto plan = plan_measurements(4, 3);
  auto est = estimate_phases(amps, exact_records(e, plan, 0.9), 0.9);
  CHECK(est.phases.cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("estimate_phases: 2x2 balanced splitter gives relative phase pi") {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix e(2, 2);
  e << cxd(r), cxd(0, r), cxd(0, r), cxd(r);
  auto plan = plan_measurements(2, 2);
  auto est = estimate_phases(e.cwiseAbs(), exact_records(e, plan, 1.0), 1.0);
  CHECK(std::abs(std::abs(est.phases(1, 1)) - kPi) < 1e-10);
}

TEST_CASE("estimate_phases: clamping flag and missing-plan error") {
  RealMatrix amps = RealMatrix::Constant(2, 2, 0.7);
  VisibilityRecord r;
  r.input_i = 0;
  r.input_j = 1;
  r.output_k = 0;
  r.output_l = 1;
  r.visibility = -1.5;  // cos would exceed 1
  auto est = estimate_phases(amps, {r}, 1.0);
  CHECK(est.clamped);

  CHECK_THROWS_AS(estimate_phases(amps, {}, 1.0), config_error);
}

TEST_CASE("gauge_fix: exact orbit, identity, monotone residual") {
  Rng rng(4);
  Matrix target = haar_unitary(6, rng).block(0, 0, 5, 3);

  Matrix m = target;
  for (int i = 0; i < 5; ++i)
    m.row(i) *= std::polar(1.0, rng.uniform() * 2.0 * kPi);
  for (int j = 0; j < 3; ++j)
    m.col(j) *= std::polar(1.0, rng.uniform() * 2.0 * kPi);
  auto fixed = gauge_fix(m, target);
  CHECK(fixed.residual < 1e-10);
  CHECK((fixed.matrix - target).cwiseAbs().maxCoeff() < 1e-10);

  auto same = gauge_fix(target, target);
  CHECK(same.residual < 1e-12);
  for (double p : same.gauge_out)
    CHECK(std::min(p, 2.0 * kPi - p) < 1e-9);

  CHECK_THROWS_AS(gauge_fix(Matrix::Zero(2, 2), Matrix::Zero(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("reconstruct_against resolves the conjugation branch") {
  Rng rng(5);
  Matrix target = haar_unitary(8, rng).block(0, 0, 8, 4);
  auto fixed = reconstruct_against(target.conjugate(), target);
  CHECK(fixed.conjugated);
  CHECK(fixed.residual < 1e-10);
}

TEST_CASE("amplitude_fidelity: self, uniform and gauge invariance") {
  Rng rng(6);
  Matrix u = haar_unitary(8, rng).block(0, 0, 8, 4);
  CHECK(amplitude_fidelity(u, u) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix v = Matrix::Constant(8, 4, cxd(1.0 / std::sqrt(8.0)));
  Matrix un = u;
  for (int j = 0; j < 4; ++j) un.col(j) /= un.col(j).norm();
  double expected = un.cwiseAbs().sum() / std::sqrt(8.0) / 4.0;
  CHECK(amplitude_fidelity(u, v) == doctest::Approx(expected).epsilon(1e-12));

  Matrix w = u;
  for (int i = 0; i < 8; ++i) w.row(i) *= std::polar(1.0, rng.uniform());
  CHECK(std::abs(amplitude_fidelity(u, w) - 1.0) < 1e-14);

  CHECK_THROWS_AS(amplitude_fidelity(u, Matrix::Zero(4, 8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_fidelity(u, u, 0.0), std::invalid_argument);
}

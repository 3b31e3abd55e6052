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
#include "oracles.hpp"
#include "sfv/counts.hpp"
#include "sfv/fock.hpp"
#include "sfv/hom.hpp"
#include "sfv/permanent.hpp"
#include "sfv/rng.hpp"

using namespace sfv;

namespace {

Matrix balanced_splitter() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix u(2, 2);
  u << cxd(r), cxd(0, r), cxd(0, r), cxd(r);
  return u;
}

}  // namespace

TEST_CASE("permanent: identity, all-ones, empty") {
  CHECK(std::abs(permanent(Matrix::Identity(2, 2)) - cxd(1.0)) < 1e-15);
  CHECK(std::abs(permanent(Matrix::Ones(3, 3)) - cxd(6.0)) < 1e-12);
  CHECK(std::abs(permanent(Matrix(0, 0)) - cxd(1.0)) == 0.0);
}

TEST_CASE("permanent: Ryser matches the n!-term definition") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) a(i, j) = cxd(rng.gaussian(), rng.gaussian());
    cxd fast = permanent(a);
    cxd slow = oracles::naive_permanent(a);
    CHECK(std::abs(fast - slow) < 1e-10 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("permanent guards") {
  CHECK_THROWS_AS(permanent(Matrix::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(permanent(Matrix::Zero(31, 31)), std::length_error);
}

TEST_CASE("transition_probability: single photon through a unitary") {
  Rng rng(9);
  Matrix u = haar_unitary(4, rng);
  for (int i = 0; i < 4; ++i) {
    double total = 0.0;
    for (int j = 0; j < 4; ++j) {
      double p = transition_probability(u, FockState::single(i, 4),
                                        FockState::single(j, 4));
      CHECK(p == doctest::Approx(std::norm(u(j, i))).epsilon(1e-12));
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("transition_probability: HOM suppression on a balanced splitter") {
  Matrix u = balanced_splitter();
  FockState in({1, 1});
  CHECK(transition_probability(u, in, FockState({1, 1})) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(transition_probability(u, in, FockState({2, 0})) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("transition_probability matches Fock-space evolution oracle") {
  Rng rng(10);
  for (int modes : {2, 3, 4}) {
    for (int photons = 1; photons <= 3; ++photons) {
      if (photons > modes) continue;
      Matrix u = haar_unitary(modes, rng);
      auto basis = oracles::fock_basis(photons, modes);
      for (const auto& in : basis) {
        double total = 0.0;
        for (const auto& out : basis) {
          double fast = transition_probability(u, in, out);
          double slow = oracles::fock_evolution_probability(u, in, out);
          CHECK(std::abs(fast - slow) < 1e-12);
          total += fast;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("transition_probability rejects photon-number mismatch") {
  Matrix u = balanced_splitter();
  CHECK_THROWS_AS(
      transition_probability(u, FockState({1, 1}), FockState({1, 0})),
      std::domain_error);
}

TEST_CASE("two_photon_coincidence on the balanced splitter") {
  Matrix u = balanced_splitter();
  CHECK(two_photon_coincidence(u, 0, 1, 0, 1, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(two_photon_coincidence(u, 0, 1, 0, 1, 0.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  double x = 0.9899;
  CHECK(two_photon_coincidence(u, 0, 1, 0, 1, x) ==
        doctest::Approx((1.0 - x * x) / 2.0).epsilon(1e-12));
}

TEST_CASE("hom_visibility: equality V = x^2 on the balanced splitter") {
  Matrix u = balanced_splitter();
  CHECK(hom_visibility(u, 0, 1, 0, 1, 1.0) == doctest::Approx(1.0));
  double x = 0.9899;
  CHECK(std::abs(hom_visibility(u, 0, 1, 0, 1, x) - x * x) < 1e-12);
  CHECK(std::abs(hom_visibility(u, 0, 1, 0, 1, x) - 0.97990201) < 1e-12);
}

TEST_CASE("hom_visibility: no interference path means zero visibility") {
  Matrix e = Matrix::Zero(2, 2);
  e(0, 0) = 0.8;
  e(1, 1) = 0.7;
  CHECK(hom_visibility(e, 0, 1, 0, 1, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("hom_visibility: undefined when both paths vanish") {
  Matrix e = Matrix::Zero(3, 3);
  e(2, 2) = 1.0;
  CHECK_THROWS_AS(hom_visibility(e, 0, 1, 0, 1, 1.0), std::domain_error);
}

TEST_CASE("V <= x^2 over random settings, equality approached") {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix u = haar_unitary(4, rng);
    double x = rng.uniform();
    int i = int(rng.uniform() * 4) & 3;
    int j = (i + 1 + (int(rng.uniform() * 3) % 3)) & 3;
    int k = int(rng.uniform() * 4) & 3;
    int l = (k + 1 + (int(rng.uniform() * 3) % 3)) & 3;
    double pd = two_photon_coincidence(u, i, j, k, l, 0.0);
    if (pd <= 1e-12) continue;
    double v = hom_visibility(u, i, j, k, l, x);
    CHECK(v <= x * x + 1e-12);
  }
}

TEST_CASE("coincidence probability is affine in x^2") {
  Rng rng(13);
  Matrix u = haar_unitary(4, rng);
  double p0 = two_photon_coincidence(u, 0, 1, 2, 3, 0.0);
  double p1 = two_photon_coincidence(u, 0, 1, 2, 3, 1.0);
  for (double x : {0.2, 0.5, 0.77, 0.95}) {
    double expected = p0 + (p1 - p0) * x * x;
    CHECK(two_photon_coincidence(u, 0, 1, 2, 3, x) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("hom_delay_scan endpoints") {
  Matrix u = balanced_splitter();
  double x0 = 0.9899, tc = 3e-13;
  auto curve = hom_delay_scan(u, 0, 1, 0, 1, {0.0, 1e-11}, x0, tc);
  CHECK(curve[0] ==
        doctest::Approx(two_photon_coincidence(u, 0, 1, 0, 1, x0)));
  CHECK(curve[1] ==
        doctest::Approx(two_photon_coincidence(u, 0, 1, 0, 1, 0.0))
            .epsilon(1e-9));
  CHECK_THROWS_AS(hom_delay_scan(u, 0, 1, 0, 1, {0.0}, x0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("sample_counts: edge cases and Poisson statistics") {
  CHECK(sample_counts(0.0, 19600.0, 60.0, 1).counts == 0);
  CHECK_THROWS_AS(sample_counts(-0.1, 1.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_counts(0.5, 0.0, 1.0, 1), std::invalid_argument);

  // paper-rate sanity: mean 1.176e6, relative sd ~ 0.09%
  double mean = 19600.0 * 60.0;
  double acc = 0.0, acc2 = 0.0;
  int n = 1000;
  for (int s = 0; s < n; ++s) {
    double c = double(sample_counts(1.0, 19600.0, 60.0, derive_seed(42, s)).counts);
    acc += c;
    acc2 += c * c;
  }
  double emp_mean = acc / n;
  double emp_sd = std::sqrt(acc2 / n - emp_mean * emp_mean);
  CHECK(std::abs(emp_mean - mean) < 5.0 * std::sqrt(mean) / std::sqrt(double(n)) +
                                        5.0);
  CHECK(emp_sd / emp_mean == doctest::Approx(0.0009).epsilon(0.25));

  // small-mean branch
  acc = 0.0;
  for (int s = 0; s < n; ++s)
    acc += double(sample_counts(0.5, 20.0, 1.0, derive_seed(77, s)).counts);
  CHECK(acc / n == doctest::Approx(10.0).epsilon(0.05));

  // determinism
  CHECK(sample_counts(0.3, 1000.0, 2.0, 123).counts ==
        sample_counts(0.3, 1000.0, 2.0, 123).counts);
}

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

#include "sfv/hom.hpp"

#include <cmath>

namespace sfv {

namespace {

void check_args(const Matrix& e, int i, int j, int k, int l, double x) {
  if (i == j || k == l)
    throw std::invalid_argument("two-photon setting needs distinct modes");
  if (i < 0 || j < 0 || i >= e.cols() || j >= e.cols() || k < 0 || l < 0 ||
      k >= e.rows() || l >= e.rows())
    throw std::invalid_argument("two-photon setting: mode index out of range");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("photon overlap x must lie in [0, 1]");
}

}  // namespace

double two_photon_coincidence(const Matrix& e, int i, int j, int k, int l,
                              double x) {
  check_args(e, i, j, k, l, x);
  cxd a = e(k, i) * e(l, j);
  cxd b = e(k, j) * e(l, i);
  return std::norm(a) + std::norm(b) +
         2.0 * x * x * std::real(a * std::conj(b));
}

double hom_visibility(const Matrix& e, int i, int j, int k, int l, double x) {
  check_args(e, i, j, k, l, x);
  cxd a = e(k, i) * e(l, j);
  cxd b = e(k, j) * e(l, i);
  double p_dist = std::norm(a) + std::norm(b);
  if (p_dist <= 0.0)
    throw std::domain_error("hom_visibility: undefined, both paths vanish");
  return -2.0 * x * x * std::real(a * std::conj(b)) / p_dist;
}

std::vector<double> hom_delay_scan(const Matrix& e, int i, int j, int k, int l,
                                   const std::vector<double>& delays, double x0,
                                   double coherence_time) {
  if (!(coherence_time > 0.0))
    throw std::invalid_argument("hom_delay_scan: coherence time must be > 0");
  std::vector<double> curve;
  curve.reserve(delays.size());
  for (double tau : delays) {
    double x = x0 * std::exp(-tau * tau /
                             (2.0 * coherence_time * coherence_time));
    curve.push_back(two_photon_coincidence(e, i, j, k, l, x));
  }
  return curve;
}

}  // namespace sfv

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

#ifndef SFV_HOM_HPP
#define SFV_HOM_HPP

#include <vector>

#include "sfv/types.hpp"

namespace sfv {

/// Coincidence probability for photons entering modes i and j and detected at
/// distinct modes k and l, with two-photon wavefunction overlap x:
///   P = |E_ki E_lj|^2 + |E_kj E_li|^2 + 2 x^2 Re(E_ki E_lj conj(E_kj E_li)).
double two_photon_coincidence(const Matrix& e, int i, int j, int k, int l,
                              double x);

/// V = (P_distinguishable - P_quantum) / P_distinguishable.
/// Throws std::domain_error when the distinguishable probability vanishes.
double hom_visibility(const Matrix& e, int i, int j, int k, int l, double x);

/// Coincidence dip curve: x(tau) = x0 exp(-tau^2 / (2 T^2)).
std::vector<double> hom_delay_scan(const Matrix& e, int i, int j, int k, int l,
                                   const std::vector<double>& delays, double x0,
                                   double coherence_time);

}  // namespace sfv

#endif

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

#ifndef SFV_COUNTS_HPP
#define SFV_COUNTS_HPP

#include <cstdint>
#include <vector>

#include "sfv/types.hpp"

namespace sfv {

/// One simulated counting measurement.
struct CountRecord {
  std::vector<int> input_modes;
  std::vector<int> output_modes;
  std::uint64_t counts = 0;
  double integration_time = 0.0;  // seconds
};

/// One HOM dip result for inputs (i, j) and click pair (k, l).
struct VisibilityRecord {
  int input_i = 0, input_j = 0;
  int output_k = 0, output_l = 0;
  double visibility = 0.0;
  double uncertainty = 0.0;
};

/// Poisson draw with mean p * rate * time; deterministic given the seed.
CountRecord sample_counts(double p, double pair_rate_hz, double time_s,
                          std::uint64_t seed);

}  // namespace sfv

#endif

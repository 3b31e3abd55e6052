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

#include "sfv/counts.hpp"

#include "sfv/rng.hpp"

namespace sfv {

CountRecord sample_counts(double p, double pair_rate_hz, double time_s,
                          std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("sample_counts: probability must be in [0,1]");
  if (!(pair_rate_hz > 0.0))
    throw std::invalid_argument("sample_counts: rate must be positive");
  if (!(time_s > 0.0))
    throw std::invalid_argument("sample_counts: time must be positive");
  Rng rng(seed);
  CountRecord rec;
  rec.integration_time = time_s;
  rec.counts = rng.poisson(p * pair_rate_hz * time_s);
  return rec;
}

}  // namespace sfv

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

#ifndef SFV_RNG_HPP
#define SFV_RNG_HPP

#include <cstdint>
#include <random>

#include "sfv/types.hpp"

namespace sfv {

/// Deterministic random stream. All distributions are implemented here rather
/// than with std:: distribution objects so that identical seeds give identical
/// draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cosine branch only).
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Poisson draw with mean `lambda`. Knuth multiplication below 256,
  /// rounded-normal approximation above (relative sd error < 0.2% there).
  std::uint64_t poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda <= 256.0) {
      const double limit = std::exp(-lambda);
      double prod = uniform();
      std::uint64_t n = 0;
      while (prod > limit) {
        prod *= uniform();
        ++n;
      }
      return n;
    }
    double v = std::round(lambda + std::sqrt(lambda) * gaussian());
    return v < 0.0 ? 0 : static_cast<std::uint64_t>(v);
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 step; used to derive independent per-record substream seeds
/// so that parallel simulation order cannot affect results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Haar-random unitary: complex Ginibre + Householder QR, with the R diagonal
/// phase correction that makes the distribution exactly Haar.
Matrix haar_unitary(int dim, Rng& rng);

}  // namespace sfv

#endif

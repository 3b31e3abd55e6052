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

#include "sfv/vertex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfv/parallel.hpp"

namespace sfv {

int link_index(int a, int b) {
  if (a > b) std::swap(a, b);
  // pairs (0,1)..(3,4) in lexicographic order
  static constexpr int base[5] = {0, 4, 7, 9, 10};
  return base[a] + (b - a - 1);
}

std::array<Eigen::Matrix2cd, 10> epsilon_bilinears() {
  Eigen::Matrix2cd eps;
  eps << cxd(0), cxd(1), cxd(-1), cxd(0);
  std::array<Eigen::Matrix2cd, 10> out;
  out.fill(eps);
  return out;
}

std::array<cxd, 32> contract_pentagon(
    const std::array<Eigen::Matrix2cd, 10>& bilinears) {
  const auto basis = intertwiner_basis();

  // Absorb each link's bilinear into the lower-label tetrahedron's leg, so
  // the remaining cross-link contraction is a plain index identification.
  cxd w[5][2][16];
  for (int a = 0; a < 5; ++a) {
    for (int k = 0; k < 2; ++k)
      std::copy(basis[k].begin(), basis[k].end(), w[a][k]);
    for (int s = 0; s < 4; ++s) {
      int t = kLegTable[a][s];
      if (t < a) continue;
      const Eigen::Matrix2cd& bil = bilinears[link_index(a, t)];
      int stride = 1 << (3 - s);
      for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 16; ++m) {
          if ((m / stride) % 2 != 0) continue;  // visit each pair once
          cxd u0 = w[a][k][m];
          cxd u1 = w[a][k][m + stride];
          w[a][k][m] = u0 * bil(0, 0) + u1 * bil(1, 0);
          w[a][k][m + stride] = u0 * bil(0, 1) + u1 * bil(1, 1);
        }
      }
    }
  }

  // Sequential contraction over tetrahedra. The state is indexed by the
  // already-fixed intertwiner labels (prefix bits) and the values carried by
  // links whose second endpoint has not been processed yet (open bits).
  std::vector<cxd> state{cxd(1.0)};
  std::vector<int> open;  // open[p] = link id occupying bit p

  for (int a = 0; a < 5; ++a) {
    const auto& legs = kLegTable[a];
    const int old_bits = static_cast<int>(open.size());

    std::array<int, 4> old_pos{-1, -1, -1, -1};
    std::array<int, 4> new_pos{-1, -1, -1, -1};
    std::vector<bool> consumed(old_bits, false);
    for (int s = 0; s < 4; ++s) {
      int t = legs[s];
      if (t < a) {
        int link = link_index(t, a);
        for (int p = 0; p < old_bits; ++p) {
          if (open[p] == link) {
            old_pos[s] = p;
            consumed[p] = true;
            break;
          }
        }
      }
    }
    std::vector<int> survivor_pos;
    std::vector<int> new_open;
    for (int p = 0; p < old_bits; ++p)
      if (!consumed[p]) {
        survivor_pos.push_back(p);
        new_open.push_back(open[p]);
      }
    for (int s = 0; s < 4; ++s) {
      int t = legs[s];
      if (t > a) {
        new_pos[s] = static_cast<int>(new_open.size());
        new_open.push_back(link_index(a, t));
      }
    }
    const int new_bits = static_cast<int>(new_open.size());

    std::vector<cxd> next(std::size_t(1) << (a + 1 + new_bits), cxd(0));
    for (int prefix = 0; prefix < (1 << a); ++prefix) {
      for (int ob = 0; ob < (1 << old_bits); ++ob) {
        cxd amp = state[(std::size_t(prefix) << old_bits) | ob];
        if (amp == cxd(0)) continue;
        int surv = 0;
        for (std::size_t q = 0; q < survivor_pos.size(); ++q)
          surv |= ((ob >> survivor_pos[q]) & 1) << q;
        for (int k = 0; k < 2; ++k) {
          for (int m = 0; m < 16; ++m) {
            cxd val = w[a][k][m];
            if (val == cxd(0)) continue;
            bool match = true;
            int add = 0;
            for (int s = 0; s < 4; ++s) {
              int v = (m >> (3 - s)) & 1;
              if (old_pos[s] >= 0) {
                if (((ob >> old_pos[s]) & 1) != v) {
                  match = false;
                  break;
                }
              } else {
                add |= v << new_pos[s];
              }
            }
            if (!match) continue;
            std::size_t idx =
                ((std::size_t(prefix) << 1 | unsigned(k)) << new_bits) |
                unsigned(surv | add);
            next[idx] += amp * val;
          }
        }
      }
    }
    state.swap(next);
    open.swap(new_open);
  }

  std::array<cxd, 32> out{};
  std::copy(state.begin(), state.end(), out.begin());
  return out;
}

const std::array<std::array<int, 5>, 12>& relabeling_group() {
  static const std::array<std::array<int, 5>, 12> group = [] {
    std::array<std::array<int, 5>, 12> g{};
    const std::array<std::array<int, 2>, 2> swaps = {{{0, 1}, {1, 0}}};
    std::array<int, 3> out = {2, 3, 4};
    int n = 0;
    std::sort(out.begin(), out.end());
    do {
      for (const auto& sw : swaps)
        g[n++] = {sw[0], sw[1], out[0], out[1], out[2]};
    } while (std::next_permutation(out.begin(), out.end()));
    return g;
  }();
  return group;
}

namespace {

int permute_index(int idx, const std::array<int, 5>& p) {
  int out = 0;
  for (int s = 0; s < 5; ++s) {
    int bit = (idx >> (4 - p[s])) & 1;
    out |= bit << (4 - s);
  }
  return out;
}

}  // namespace

std::array<cxd, 32> symmetrize(const std::array<cxd, 32>& raw) {
  std::array<cxd, 32> out{};
  for (const auto& p : relabeling_group())
    for (int idx = 0; idx < 32; ++idx) out[idx] += raw[permute_index(idx, p)];
  for (auto& v : out) v /= 12.0;
  return out;
}

VertexTensor build_vertex_tensor() {
  VertexTensor t;
  t.entries = symmetrize(contract_pentagon(epsilon_bilinears()));
  Matrix gate = gate_from_tensor(t);
  Eigen::JacobiSVD<Matrix> svd(gate);
  double smax = svd.singularValues()(0);
  if (!(smax > 0.0))
    throw numerical_error("build_vertex_tensor: contraction vanished");
  for (auto& v : t.entries) v /= smax;
  t.norm_scale = smax;
  return t;
}

Matrix gate_from_tensor(const VertexTensor& t) {
  Matrix m(8, 4);
  for (int idx = 0; idx < 32; ++idx) m(idx & 7, idx >> 3) = t.entries[idx];
  return m;
}

VertexTensor tensor_from_gate(const Matrix& m, double norm_scale) {
  if (m.rows() != 8 || m.cols() != 4)
    throw std::invalid_argument("tensor_from_gate: matrix must be 8x4");
  VertexTensor t;
  t.norm_scale = norm_scale;
  for (int idx = 0; idx < 32; ++idx) t.entries[idx] = m(idx & 7, idx >> 3);
  return t;
}

namespace {

cxd amplitude_impl(const std::array<cxd, 32>& entries,
                   const std::array<std::array<cxd, 2>, 5>& psi) {
  cxd total(0.0);
  for (int idx = 0; idx < 32; ++idx) {
    cxd e = entries[idx];
    if (e == cxd(0)) continue;
    cxd term = e;
    term *= psi[0][(idx >> 4) & 1];
    term *= psi[1][(idx >> 3) & 1];
    term *= std::conj(psi[2][(idx >> 2) & 1]);
    term *= std::conj(psi[3][(idx >> 1) & 1]);
    term *= std::conj(psi[4][idx & 1]);
    total += term;
  }
  return total;
}

std::array<std::array<cxd, 2>, 5> boundary_vectors(const BoundaryState& b) {
  std::array<std::array<cxd, 2>, 5> psi;
  for (int a = 0; a < 5; ++a) psi[a] = bloch_to_vector(b.tets[a]);
  return psi;
}

}  // namespace

cxd amplitude(const VertexTensor& t, const BoundaryState& b) {
  return amplitude_impl(t.entries, boundary_vectors(b));
}

cxd amplitude_from_matrix(const Matrix& m, const BoundaryState& b) {
  if (m.rows() != 8 || m.cols() != 4)
    throw std::invalid_argument("amplitude_from_matrix: matrix must be 8x4");
  return amplitude_impl(tensor_from_gate(m).entries, boundary_vectors(b));
}

ScanSetup ScanSetup::all_equal() {
  ScanSetup s;
  s.kind = ScanKind::kAllEqual;
  return s;
}

ScanSetup ScanSetup::vary_one(int label) {
  std::array<QubitState, 5> fixed;
  fixed.fill(regular_tetrahedron());
  return vary_one(label, fixed);
}

ScanSetup ScanSetup::vary_one(int label,
                              const std::array<QubitState, 5>& fixed) {
  if (label < 1 || label > 5)
    throw config_error("scan setup: vary label must be 1..5");
  ScanSetup s;
  s.kind = ScanKind::kVaryOne;
  s.vary_label = label;
  s.fixed = fixed;
  return s;
}

ScanGrid scan_amplitudes(const Matrix& m, const ScanSetup& setup,
                         int resolution) {
  if (resolution < 1) throw config_error("scan: resolution must be >= 1");
  if (setup.kind != ScanKind::kAllEqual && setup.kind != ScanKind::kVaryOne)
    throw config_error("scan: unknown setup");
  const auto entries = tensor_from_gate(m).entries;

  ScanGrid grid;
  grid.resolution = resolution;
  grid.thetas.resize(resolution);
  grid.phis.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    grid.thetas[i] = resolution == 1 ? 0.0 : kPi * i / (resolution - 1);
    grid.phis[i] = 2.0 * kPi * i / resolution;
  }
  grid.values.assign(std::size_t(resolution) * resolution, cxd(0));

  std::array<std::array<cxd, 2>, 5> base;
  if (setup.kind == ScanKind::kVaryOne)
    for (int a = 0; a < 5; ++a) base[a] = bloch_to_vector(setup.fixed[a]);

  parallel_for(std::size_t(resolution), [&](std::size_t i) {
    for (int j = 0; j < resolution; ++j) {
      QubitState q(grid.thetas[i], grid.phis[j]);
      auto v = bloch_to_vector(q);
      std::array<std::array<cxd, 2>, 5> psi = base;
      if (setup.kind == ScanKind::kAllEqual) {
        for (int a = 0; a < 5; ++a) psi[a] = v;
      } else {
        psi[setup.vary_label - 1] = v;
      }
      grid.values[i * resolution + j] = amplitude_impl(entries, psi);
    }
  });
  return grid;
}

ScanGrid::Peak ScanGrid::peak() const {
  Peak p;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      double mag = std::abs(value(i, j));
      if (mag > p.magnitude) {
        p = {thetas[i], phis[j], mag, i, j};
      }
    }
  }
  return p;
}

QubitState random_qubit_state(Rng& rng) {
  Matrix u = haar_unitary(2, rng);
  cxd v0 = u(0, 0), v1 = u(1, 0);
  double theta = 2.0 * std::atan2(std::abs(v1), std::abs(v0));
  theta = std::clamp(theta, 0.0, kPi);
  double phi = 0.0;
  if (std::abs(v1) > 0.0 && std::abs(v0) > 0.0) {
    phi = std::arg(v1) - std::arg(v0);
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;
    if (phi >= 2.0 * kPi) phi = 0.0;
  }
  return QubitState(theta, phi);
}

BoundaryState random_boundary_state(Rng& rng) {
  BoundaryState b;
  for (int a = 0; a < 5; ++a) b.tets[a] = random_qubit_state(rng);
  return b;
}

ExpectationResult expectation_random(const Matrix& m, int n_samples,
                                     std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("expectation_random: n_samples must be >= 1");
  const auto entries = tensor_from_gate(m).entries;
  Rng rng(seed);
  std::vector<cxd> samples(n_samples);
  for (int s = 0; s < n_samples; ++s)
    samples[s] = amplitude_impl(entries, boundary_vectors(random_boundary_state(rng)));
  cxd mean(0.0);
  for (const cxd& a : samples) mean += a;
  mean /= double(n_samples);
  double var = 0.0;
  for (const cxd& a : samples) var += std::norm(a - mean);
  double se = n_samples > 1
                  ? std::sqrt(var / (double(n_samples) * (n_samples - 1)))
                  : 0.0;
  return {mean, se};
}

double symmetry_residual(const Matrix& m, int n_samples, std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("symmetry_residual: n_samples must be >= 1");
  const auto entries = tensor_from_gate(m).entries;
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    BoundaryState b = random_boundary_state(rng);
    auto psi = boundary_vectors(b);
    cxd ref = amplitude_impl(entries, psi);
    for (const auto& p : relabeling_group()) {
      std::array<std::array<cxd, 2>, 5> permuted;
      for (int a = 0; a < 5; ++a) permuted[a] = psi[p[a]];
      worst = std::max(worst, std::abs(amplitude_impl(entries, permuted) - ref));
    }
  }
  return worst;
}

ComplexityBound complexity_bound(const ComplexityInput& c) {
  if (c.n_vertices < 1)
    throw std::invalid_argument("complexity_bound: N must be positive");
  if (!(c.gate_complexity > 0.0))
    throw std::invalid_argument("complexity_bound: C must be positive");
  for (double m : c.tet_bounds)
    if (!(m > 0.0))
      throw std::invalid_argument("complexity_bound: M_Delta must be positive");
  for (double j : c.face_spins)
    if (!(j > 0.0))
      throw std::invalid_argument("complexity_bound: J_f must be positive");

  double log_total = c.n_vertices * std::log(c.gate_complexity);
  for (double m : c.tet_bounds) log_total += std::log(m);
  for (double j : c.face_spins) log_total += std::log(j);
  if (log_total >= std::log(std::numeric_limits<double>::max()))
    return {std::numeric_limits<double>::infinity(), true};

  double value = 1.0;
  for (int i = 0; i < c.n_vertices; ++i) value *= c.gate_complexity;
  for (double m : c.tet_bounds) value *= m;
  for (double j : c.face_spins) value *= j;
  if (!std::isfinite(value))
    return {std::numeric_limits<double>::infinity(), true};
  return {value, false};
}

}  // namespace sfv

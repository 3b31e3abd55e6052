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

#ifndef SFV_VERTEX_HPP
#define SFV_VERTEX_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sfv/intertwiner.hpp"
#include "sfv/qubit.hpp"
#include "sfv/rng.hpp"
#include "sfv/types.hpp"

namespace sfv {

/// The 2^5-entry vertex amplitude tensor of the spin-1/2 4-simplex.
/// entries[i1*16 + i2*8 + i3*4 + i4*2 + i5] = A_{i1..i5}; norm_scale is the
/// positive divisor that set the gate view's largest singular value to one.
struct VertexTensor {
  std::array<cxd, 32> entries{};
  double norm_scale = 1.0;
};

/// Leg table of the pentagon contraction (0-based tetrahedron labels).
/// kLegTable[a][s] is the label reached by leg s of tetrahedron a; slots
/// (0,1) and (2,3) are the recoupling channel pairs of intertwiner_basis().
/// The table is the documented convention; together with the relabeling
/// average in build_vertex_tensor it realizes the swap(1,2) x Sym{3,4,5}
/// invariance and the regular-point peak exactly.
inline constexpr std::array<std::array<int, 4>, 5> kLegTable = {{
    {{1, 3, 2, 4}},
    {{0, 2, 3, 4}},
    {{0, 4, 1, 3}},
    {{0, 2, 1, 4}},
    {{0, 3, 1, 2}},
}};

/// Identifier written into exported files; bump if kLegTable or the basis
/// convention ever changes.
inline constexpr const char* kVertexConvention = "k5-paired-eps-sym-v1";

/// Index of link {a,b} (a != b) in lexicographic order over pairs.
int link_index(int a, int b);

/// The ten epsilon bilinears in link order (oriented lower -> higher label).
std::array<Eigen::Matrix2cd, 10> epsilon_bilinears();

/// Contracts the pentagon once (no relabeling average): intertwiner iota_{k_a}
/// at vertex a, link {a,b} contracted with bilinears[link_index(a,b)] applied
/// to the lower-label leg. Sequential pairwise contraction over tetrahedra.
std::array<cxd, 32> contract_pentagon(
    const std::array<Eigen::Matrix2cd, 10>& bilinears);

/// The 12 boundary relabelings generated by swap(1,2) and perms of {3,4,5}.
const std::array<std::array<int, 5>, 12>& relabeling_group();

/// Averages a raw tensor over the relabeling group.
std::array<cxd, 32> symmetrize(const std::array<cxd, 32>& raw);

/// Builds the vertex tensor: pentagon contraction with the documented leg
/// table, relabeling average, then normalization to unit largest singular
/// value of the gate view.
VertexTensor build_vertex_tensor();

/// Gate view M[(i3 i4 i5), (i1 i2)], big-endian row and column indices.
Matrix gate_from_tensor(const VertexTensor& t);

/// Inverse reshape of gate_from_tensor.
VertexTensor tensor_from_gate(const Matrix& m, double norm_scale = 1.0);

/// A = (<psi3| x <psi4| x <psi5|) M (|psi1> x |psi2>); outputs conjugated.
cxd amplitude(const VertexTensor& t, const BoundaryState& b);

/// Same sandwich with an arbitrary 8x4 matrix (e.g. a reconstructed gate).
cxd amplitude_from_matrix(const Matrix& m, const BoundaryState& b);

enum class ScanKind { kAllEqual, kVaryOne };

/// Boundary setup of a (theta, phi) scan. For kVaryOne, `fixed` supplies the
/// four fixed tetrahedra; the default table puts them all at the regular
/// point (pi/2, pi/2), which maximizes |A| at the all-regular boundary.
struct ScanSetup {
  ScanKind kind = ScanKind::kAllEqual;
  int vary_label = 0;  // 1..5
  std::array<QubitState, 5> fixed{};

  static ScanSetup all_equal();
  static ScanSetup vary_one(int label);
  static ScanSetup vary_one(int label, const std::array<QubitState, 5>& fixed);
};

/// Amplitudes over the [0, pi] x [0, 2*pi) rectangle. theta is sampled
/// inclusively with resolution points, phi half-open with spacing 2*pi/res.
struct ScanGrid {
  int resolution = 0;
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<cxd> values;  // row-major, values[i*resolution + j]

  cxd value(int i, int j) const { return values[i * resolution + j]; }

  struct Peak {
    double theta = 0.0, phi = 0.0, magnitude = 0.0;
    int i = 0, j = 0;
  };
  Peak peak() const;
};

ScanGrid scan_amplitudes(const Matrix& m, const ScanSetup& setup,
                         int resolution);

struct ExpectationResult {
  cxd mean;
  double standard_error = 0.0;
};

/// Mean amplitude over boundary states drawn from the circular unitary
/// distribution: a Haar 2x2 unitary applied to (1,0), reduced to canonical
/// Bloch angles. Deterministic given the seed.
ExpectationResult expectation_random(const Matrix& m, int n_samples,
                                     std::uint64_t seed);

/// Max over sampled boundaries and the relabeling group of |A(sigma b) - A(b)|.
double symmetry_residual(const Matrix& m, int n_samples, std::uint64_t seed);

/// Haar-random single-qubit state as canonical Bloch angles.
QubitState random_qubit_state(Rng& rng);
BoundaryState random_boundary_state(Rng& rng);

struct ComplexityInput {
  int n_vertices = 1;
  double gate_complexity = 1.0;
  std::vector<double> tet_bounds;
  std::vector<double> face_spins;
};

struct ComplexityBound {
  double value = 0.0;
  bool overflowed = false;
};

/// C^N * prod M_Delta * prod J_f; +infinity with the flag set on overflow.
ComplexityBound complexity_bound(const ComplexityInput& c);

}  // namespace sfv

#endif

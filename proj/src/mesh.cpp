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

#include "sfv/mesh.hpp"

#include <cmath>

#include "sfv/dilation.hpp"

namespace sfv {

namespace {

constexpr double kZeroTol = 1e-14;

double wrap_phase(double p) {
  p = std::fmod(p, 2.0 * kPi);
  if (p < 0.0) p += 2.0 * kPi;
  if (p >= 2.0 * kPi) p = 0.0;
  return p;
}

// Nulling parameters for a column operation U <- U T'(theta,phi) on columns
// (c, c+1), zeroing U(r, c).
MZICell solve_right(const Matrix& u, int r, int c) {
  cxd a = u(r, c), b = u(r, c + 1);
  MZICell cell;
  cell.mode = c;
  cell.theta = std::atan2(std::abs(a), std::abs(b));
  cell.phi = (std::abs(a) > kZeroTol && std::abs(b) > kZeroTol)
                 ? wrap_phase(std::arg(a) - std::arg(b))
                 : 0.0;
  return cell;
}

// Nulling parameters for a row operation U <- T(theta,phi) U on rows
// (r-1, r), zeroing U(r, c).
MZICell solve_left(const Matrix& u, int r, int c) {
  cxd a = u(r, c), b = u(r - 1, c);
  MZICell cell;
  cell.mode = r - 1;
  cell.theta = std::atan2(std::abs(a), std::abs(b));
  cell.phi = (std::abs(a) > kZeroTol && std::abs(b) > kZeroTol)
                 ? wrap_phase(std::arg(-a) - std::arg(b))
                 : 0.0;
  return cell;
}

void apply_right_inverse(Matrix& u, const MZICell& cell) {
  Eigen::Matrix2cd t = cell_matrix(cell.theta, cell.phi);
  Eigen::Matrix2cd tdag = t.adjoint();
  int c = cell.mode;
  for (int r = 0; r < u.rows(); ++r) {
    cxd x = u(r, c), y = u(r, c + 1);
    u(r, c) = x * tdag(0, 0) + y * tdag(1, 0);
    u(r, c + 1) = x * tdag(0, 1) + y * tdag(1, 1);
  }
}

void apply_left(Matrix& u, const MZICell& cell) {
  Eigen::Matrix2cd t = cell_matrix(cell.theta, cell.phi);
  int m = cell.mode;
  for (int c = 0; c < u.cols(); ++c) {
    cxd x = u(m, c), y = u(m + 1, c);
    u(m, c) = t(0, 0) * x + t(0, 1) * y;
    u(m + 1, c) = t(1, 0) * x + t(1, 1) * y;
  }
}

void validate_mesh(const MZIMesh& mesh) {
  if (mesh.dim < 1) throw std::invalid_argument("mesh: dim must be positive");
  std::size_t expected = std::size_t(mesh.dim) * (mesh.dim - 1) / 2;
  if (mesh.cells.size() != expected)
    throw std::invalid_argument("mesh: expected dim(dim-1)/2 cells");
  if (mesh.output_phases.size() != std::size_t(mesh.dim))
    throw std::invalid_argument("mesh: expected dim output phases");
  for (const auto& cell : mesh.cells)
    if (cell.mode < 0 || cell.mode + 1 >= mesh.dim)
      throw std::invalid_argument("mesh: cell mode index out of range");
}

}  // namespace

Eigen::Matrix2cd cell_matrix(double theta, double phi) {
  double c = std::cos(theta), s = std::sin(theta);
  cxd e = std::polar(1.0, phi);
  Eigen::Matrix2cd t;
  t << e * c, cxd(-s), e * s, cxd(c);
  return t;
}

MZIMesh clements_decompose(const Matrix& u) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("clements_decompose: matrix must be square");
  const int n = static_cast<int>(u.rows());
  if (unitarity_deviation(u) > 1e-10)
    throw numerical_error("clements_decompose: input is not unitary");

  Matrix work = u;
  std::vector<MZICell> rights;
  std::vector<MZICell> lefts;

  for (int k = 0; k < n - 1; ++k) {
    if (k % 2 == 0) {
      for (int j = 0; j <= k; ++j) {
        int r = n - 1 - j, c = k - j;
        MZICell cell = solve_right(work, r, c);
        apply_right_inverse(work, cell);
        rights.push_back(cell);
      }
    } else {
      for (int j = 0; j <= k; ++j) {
        int r = n - 1 - k + j, c = j;
        MZICell cell = solve_left(work, r, c);
        apply_left(work, cell);
        lefts.push_back(cell);
      }
    }
  }

  // work is now diagonal: lefts * u * rights^-1 = D, so
  // u = D * T'_1..T'_p * R_q..R_1 after commuting each left inverse past D.
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = std::arg(work(i, i));

  MZIMesh mesh;
  mesh.dim = n;
  mesh.cells = rights;  // applied first, in collection order
  std::vector<MZICell> commuted;
  for (auto it = lefts.rbegin(); it != lefts.rend(); ++it) {
    MZICell cell = *it;
    int m = cell.mode;
    double alpha = d[m], beta = d[m + 1];
    MZICell swapped;
    swapped.mode = m;
    swapped.theta = cell.theta;
    if (cell.theta == 0.0) {
      // transparent cell: T(0,phi)^-1 D = D' T(0,0)
      swapped.phi = 0.0;
      d[m] = wrap_phase(alpha - cell.phi);
    } else {
      swapped.phi = wrap_phase(alpha - beta + kPi);
      d[m] = wrap_phase(beta - cell.phi + kPi);
    }
    d[m + 1] = beta;
    commuted.push_back(swapped);
  }
  mesh.cells.insert(mesh.cells.end(), commuted.begin(), commuted.end());
  mesh.output_phases.assign(d.begin(), d.end());
  for (auto& p : mesh.output_phases) p = wrap_phase(p);
  return mesh;
}

Matrix clements_compose(const MZIMesh& mesh) {
  validate_mesh(mesh);
  Matrix u = Matrix::Identity(mesh.dim, mesh.dim);
  for (const auto& cell : mesh.cells) apply_left(u, cell);
  for (int i = 0; i < mesh.dim; ++i)
    u.row(i) *= std::polar(1.0, mesh.output_phases[i]);
  return u;
}

}  // namespace sfv

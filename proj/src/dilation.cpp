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

#include "sfv/dilation.hpp"

#include <cmath>

namespace sfv {

double unitarity_deviation(const Matrix& u) {
  Matrix d = u.adjoint() * u - Matrix::Identity(u.cols(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

Matrix dilate(const Matrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int dim = rows + cols;

  Eigen::JacobiSVD<Matrix> svd(m);
  double smax = svd.singularValues()(0);
  if (smax > 1.0 + 1e-12)
    throw numerical_error(
        "dilate: largest singular value exceeds 1; rescale the gate by " +
        std::to_string(smax) + " before dilating");

  // Principal square root of I - m'm (Hermitian PSD up to roundoff).
  Matrix g = Matrix::Identity(cols, cols) - m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  Matrix l = Matrix::Zero(cols, cols);
  for (int k = 0; k < cols; ++k) {
    double lam = std::max(es.eigenvalues()(k), 0.0);
    l += std::sqrt(lam) * es.eigenvectors().col(k) *
         es.eigenvectors().col(k).adjoint();
  }

  Matrix v(dim, cols);
  v.topRows(rows) = m;
  v.bottomRows(cols) = l;

  // Complete the isometry to a unitary. V is an isometry, so R is a diagonal
  // unitary and rotating its phases into Q reproduces V exactly in the first
  // columns.
  Eigen::HouseholderQR<Matrix> qr(v);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < cols; ++k) {
    cxd d = r(k, k);
    double a = std::abs(d);
    q.col(k) *= (a > 0.0) ? d / a : cxd(1.0);
  }
  q.leftCols(cols) = v;
  return q;
}

}  // namespace sfv

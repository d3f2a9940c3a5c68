// Copyright 2026 The qcclab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcclab/density.hpp"

#include <cmath>

namespace qcclab {

bool check_density(const DensityMatrix& rho, DensityTolerances tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol.hermitian) return false;
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < tol.psd_floor) return false;
  return rho.trace().real() <= 1.0 + tol.trace_excess;
}

DensityMatrix pure_density(const StateVector& psi) { return psi * psi.adjoint(); }

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw EngineError("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double sub_trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho, sigma) +
         0.5 * std::abs(rho.trace().real() - sigma.trace().real());
}

namespace {
DensityMatrix matrix_sqrt_psd(const DensityMatrix& m) {
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}
}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.rows() != sigma.rows()) throw EngineError("fidelity: dimension mismatch");
  DensityMatrix sr = matrix_sqrt_psd(rho);
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(sr * sigma * sr, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

double sub_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double gap_r = std::max(0.0, 1.0 - rho.trace().real());
  const double gap_s = std::max(0.0, 1.0 - sigma.trace().real());
  return fidelity(rho, sigma) + std::sqrt(gap_r * gap_s);
}

StateVector haar_state(int dim, Rng& g) {
  StateVector psi(dim);
  for (int i = 0; i < dim; ++i) psi[i] = Complex(rand_normal(g), rand_normal(g));
  psi.normalize();
  return psi;
}

DensityMatrix projector_from_columns(const Eigen::MatrixXcd& cols) {
  return cols * cols.adjoint();
}

Eigen::MatrixXcd haar_unitary(int dim, Rng& g) {
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(rand_normal(g), rand_normal(g));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qcclab

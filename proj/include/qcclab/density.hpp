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

#pragma once

#include <Eigen/Dense>

#include "qcclab/register.hpp"

namespace qcclab {

using DensityMatrix = Eigen::MatrixXcd;

/// Numerical tolerances for density-matrix invariants. Sub-normalised
/// operators (trace <= 1) are allowed throughout.
struct DensityTolerances {
  double hermitian = 1e-10;
  double psd_floor = -1e-8;
  double trace_excess = 1e-10;
};

bool check_density(const DensityMatrix& rho, DensityTolerances tol = {});

DensityMatrix pure_density(const StateVector& psi);

/// 1/2 || rho - sigma ||_1
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Generalised trace distance for sub-normalised operators:
/// 1/2 ||rho - sigma||_1 + 1/2 |Tr rho - Tr sigma|.
double sub_trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), evaluated on the
/// operators as given (no normalisation).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// F(rho, sigma) + sqrt((1 - Tr rho)(1 - Tr sigma)) for sub-normalised inputs.
double sub_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Haar-random pure state of the given dimension.
StateVector haar_state(int dim, Rng& g);

/// Orthogonal projector onto the span of the given orthonormal columns.
DensityMatrix projector_from_columns(const Eigen::MatrixXcd& cols);

/// Random unitary (QR of a complex Gaussian matrix, phase-fixed).
Eigen::MatrixXcd haar_unitary(int dim, Rng& g);

}  // namespace qcclab

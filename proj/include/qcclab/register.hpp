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
#include <complex>
#include <stdexcept>
#include <vector>

#include "qcclab/angle.hpp"
#include "qcclab/rng.hpp"

namespace qcclab {

using VertexId = std::int32_t;
using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense pure-state register over the currently live qubits.
/// Qubits are allocated just in time and removed on measurement, so the
/// vector length is 2^(live count) at all times. Labels are protocol vertex
/// ids; the first-allocated qubit is the most significant index bit.
class QuantumRegister {
 public:
  explicit QuantumRegister(std::uint64_t seed) : rng_(make_rng(seed, "register")) {}

  std::size_t live_count() const { return labels_.size(); }
  bool is_live(VertexId label) const { return position(label) >= 0; }
  const std::vector<VertexId>& labels() const { return labels_; }

  /// Tensor in |+_theta> (or Z|+_theta> = |+_{theta+pi}> when z_flip).
  void add_plus_theta(VertexId label, Angle8 theta, bool z_flip = false);

  /// Arbitrary-angle plus state; used by adversarial preparation deviations.
  void add_plus_radians(VertexId label, double radians);

  /// Tensor in |0> or |1>. Honest protocol paths keep dummies symbolic and
  /// never call this; kept for oracles and deviation experiments.
  void add_basis(VertexId label, int bit);

  void apply_cz(VertexId a, VertexId b);

  /// diag(1, e^{i radians}) on one qubit.
  void apply_phase(VertexId label, double radians);
  void apply_z(VertexId label) { apply_phase(label, 3.14159265358979323846); }
  void apply_x(VertexId label);

  /// Projective measurement in {|+_delta>, |-_delta>}; outcome 0 <-> |+_delta>.
  /// The qubit is removed and the state renormalised.
  int measure_rotated(VertexId label, Angle8 delta) {
    return measure_rotated_radians(label, delta.radians());
  }
  int measure_rotated_radians(VertexId label, double radians);

  /// Computational-basis measurement (removes the qubit).
  int measure_basis(VertexId label);

  /// Probability of outcome 0 for a rotated measurement, without collapsing.
  double prob_plus(VertexId label, double radians) const;

  double norm() const { return amps_.norm(); }
  const StateVector& amplitudes() const { return amps_; }

  /// Squared overlap with another register's state (same label sets assumed
  /// in the same allocation order). Test helper.
  double fidelity_with(const StateVector& other) const;

  Rng& rng() { return rng_; }

 private:
  int position(VertexId label) const;
  void remove_and_project(std::size_t pos, double radians, int outcome, bool basis);

  std::vector<VertexId> labels_;
  StateVector amps_ = StateVector::Ones(1);
  Rng rng_;
};

}  // namespace qcclab

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

#include "qcclab/register.hpp"

#include <cmath>

namespace qcclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}  // namespace

int QuantumRegister::position(VertexId label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

void QuantumRegister::add_plus_radians(VertexId label, double radians) {
  if (is_live(label)) throw EngineError("duplicate label in register");
  const std::size_t n = amps_.size();
  StateVector next(2 * n);
  const Complex phase = std::polar(1.0, radians) * kInvSqrt2;
  for (std::size_t i = 0; i < n; ++i) {
    next[2 * i] = amps_[i] * kInvSqrt2;
    next[2 * i + 1] = amps_[i] * phase;
  }
  amps_ = std::move(next);
  labels_.push_back(label);
}

void QuantumRegister::add_plus_theta(VertexId label, Angle8 theta, bool z_flip) {
  add_plus_radians(label, (z_flip ? theta.plus_pi() : theta).radians());
}

void QuantumRegister::add_basis(VertexId label, int bit) {
  if (is_live(label)) throw EngineError("duplicate label in register");
  const std::size_t n = amps_.size();
  StateVector next = StateVector::Zero(2 * n);
  for (std::size_t i = 0; i < n; ++i) next[2 * i + (bit & 1)] = amps_[i];
  amps_ = std::move(next);
  labels_.push_back(label);
}

void QuantumRegister::apply_cz(VertexId a, VertexId b) {
  const int pa = position(a), pb = position(b);
  if (pa < 0 || pb < 0) throw EngineError("apply_cz: label not live");
  if (pa == pb) throw EngineError("apply_cz: identical labels");
  const int n = static_cast<int>(labels_.size());
  const std::size_t ma = 1ULL << (n - 1 - pa);
  const std::size_t mb = 1ULL << (n - 1 - pb);
  for (std::size_t i = 0; i < static_cast<std::size_t>(amps_.size()); ++i) {
    if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
  }
}

void QuantumRegister::apply_phase(VertexId label, double radians) {
  const int p = position(label);
  if (p < 0) throw EngineError("apply_phase: label not live");
  const int n = static_cast<int>(labels_.size());
  const std::size_t m = 1ULL << (n - 1 - p);
  const Complex ph = std::polar(1.0, radians);
  for (std::size_t i = 0; i < static_cast<std::size_t>(amps_.size()); ++i) {
    if (i & m) amps_[i] *= ph;
  }
}

void QuantumRegister::apply_x(VertexId label) {
  const int p = position(label);
  if (p < 0) throw EngineError("apply_x: label not live");
  const int n = static_cast<int>(labels_.size());
  const std::size_t m = 1ULL << (n - 1 - p);
  for (std::size_t i = 0; i < static_cast<std::size_t>(amps_.size()); ++i) {
    if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
  }
}

double QuantumRegister::prob_plus(VertexId label, double radians) const {
  const int p = position(label);
  if (p < 0) throw EngineError("prob_plus: label not live");
  const int n = static_cast<int>(labels_.size());
  const std::size_t m = 1ULL << (n - 1 - p);
  const Complex ph = std::polar(1.0, -radians);
  double acc = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(amps_.size()); ++i) {
    if (i & m) continue;
    acc += std::norm((amps_[i] + ph * amps_[i | m]) * kInvSqrt2);
  }
  return acc;
}

void QuantumRegister::remove_and_project(std::size_t pos, double radians, int outcome,
                                         bool basis) {
  const int n = static_cast<int>(labels_.size());
  const std::size_t m = 1ULL << (n - 1 - pos);
  StateVector next(amps_.size() / 2);
  const Complex ph = std::polar(1.0, -radians);
  const double sign = outcome == 0 ? 1.0 : -1.0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(amps_.size()); ++i) {
    if (i & m) continue;
    if (basis) {
      next[j++] = amps_[outcome == 0 ? i : (i | m)];
    } else {
      next[j++] = (amps_[i] + sign * ph * amps_[i | m]) * kInvSqrt2;
    }
  }
  const double nrm = next.norm();
  if (nrm < 1e-12) throw EngineError("measurement projected onto zero branch");
  amps_ = next / nrm;
  labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(pos));
}

int QuantumRegister::measure_rotated_radians(VertexId label, double radians) {
  const int p = position(label);
  if (p < 0) throw EngineError("measure_rotated: label not live");
  const double p0 = prob_plus(label, radians);
  const int outcome = rand_real(rng_) < p0 ? 0 : 1;
  remove_and_project(static_cast<std::size_t>(p), radians, outcome, false);
  return outcome;
}

int QuantumRegister::measure_basis(VertexId label) {
  const int p = position(label);
  if (p < 0) throw EngineError("measure_basis: label not live");
  const int n = static_cast<int>(labels_.size());
  const std::size_t m = 1ULL << (n - 1 - p);
  double p0 = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(amps_.size()); ++i) {
    if (!(i & m)) p0 += std::norm(amps_[i]);
  }
  const int outcome = rand_real(rng_) < p0 ? 0 : 1;
  remove_and_project(static_cast<std::size_t>(p), 0.0, outcome, true);
  return outcome;
}

double QuantumRegister::fidelity_with(const StateVector& other) const {
  if (other.size() != amps_.size()) throw EngineError("fidelity_with: size mismatch");
  const Complex ov = other.dot(amps_);
  return std::norm(ov) / (amps_.squaredNorm() * other.squaredNorm());
}

}  // namespace qcclab

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

#include <cstdint>
#include <ostream>

#include "qcclab/rng.hpp"

namespace qcclab {

/// Measurement/preparation angle as an integer multiple of pi/4,
/// i.e. an element of A = {0, pi/4, ..., 7pi/4}. Arithmetic is mod 8.
class Angle8 {
 public:
  constexpr Angle8() : v_(0) {}
  constexpr explicit Angle8(int k) : v_(static_cast<std::uint8_t>(((k % 8) + 8) % 8)) {}

  constexpr int value() const { return v_; }
  double radians() const { return v_ * 0.78539816339744830961566084581988; }

  constexpr Angle8 operator+(Angle8 o) const { return Angle8(v_ + o.v_); }
  constexpr Angle8 operator-(Angle8 o) const { return Angle8(v_ - o.v_); }
  constexpr Angle8 operator-() const { return Angle8(-v_); }
  constexpr bool operator==(const Angle8&) const = default;

  /// +pi, the Z-flip
  constexpr Angle8 plus_pi() const { return Angle8(v_ + 4); }

  static Angle8 uniform(Rng& g) { return Angle8(static_cast<int>(g() & 7)); }

 private:
  std::uint8_t v_;
};

inline std::ostream& operator<<(std::ostream& os, Angle8 a) { return os << a.value(); }

}  // namespace qcclab

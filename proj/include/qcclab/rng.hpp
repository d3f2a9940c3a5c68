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
#include <random>
#include <string_view>

namespace qcclab {

// splitmix64 step; used to derive independent sub-seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ mix64(stream * 0xd1342543de82ef95ULL + 1));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return derive_seed(seed, h);
}

// mt19937_64 is bit-exact across platforms; the std distributions are not,
// so all sampling goes through the helpers below.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(derive_seed(seed, stream));
}
inline Rng make_rng(std::uint64_t seed, std::string_view tag) {
  return Rng(derive_seed(seed, tag));
}

inline int rand_bit(Rng& g) { return static_cast<int>(g() >> 63); }

// index in [0, n); modulo bias is < 2^-44 for n <= 2^20, irrelevant at test scale
inline std::size_t rand_index(Rng& g, std::size_t n) { return g() % n; }

// real in [0, 1) with 53-bit resolution, portable
inline double rand_real(Rng& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// portable standard normal (Box-Muller; std::normal_distribution is not
// bit-reproducible across standard libraries)
inline double rand_normal(Rng& g) {
  double u1 = 0.0;
  do {
    u1 = rand_real(g);
  } while (u1 <= 0.0);
  double u2 = rand_real(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

template <typename T>
void shuffle(Rng& g, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rand_index(g, i)]);
  }
}

}  // namespace qcclab

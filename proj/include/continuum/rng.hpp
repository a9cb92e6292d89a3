// Copyright 2026 The continuum-alloc Authors
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
#include <initializer_list>
#include <string_view>

namespace continuum {

/// splitmix64 step; the project-wide PRNG primitive.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a over a string, used to turn field tags into stream keys.
constexpr std::uint64_t tag64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Folds keys into a seed so that streams keyed by (seed, index, tag) are
/// independent of each other and of unrelated draws.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> keys) {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t k : keys) {
    state = out ^ (k + 0x9e3779b97f4a7c15ULL);
    out = splitmix64(state);
  }
  return out;
}

/// Deterministic uniform stream over a derived seed.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * span) >> 64);
    return lo + static_cast<std::int64_t>(r);
  }

 private:
  std::uint64_t state_;
};

/// Inverse standard normal CDF (Acklam's rational approximation).
double inv_normal_cdf(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// One Binomial(n, p) draw by CDF inversion of a single uniform.
/// Direct log-space inversion for n <= 100000, normal-approximation
/// inversion above that.
std::int64_t binomial_inverse(std::int64_t n, double p, double u);

}  // namespace continuum

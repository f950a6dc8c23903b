// Copyright 2026 The cohbound Authors
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

#ifndef COHBOUND_RANDOM_HPP
#define COHBOUND_RANDOM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "cohbound/qmatrix.hpp"

namespace cohbound {

inline constexpr const char* kRngAlgorithm = "xoshiro256** seeded by splitmix64";

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256**. Satisfies UniformRandomBitGenerator, but the samplers below
/// avoid <random> distributions so streams are identical across standard
/// libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  /// Independent stream for (seed, stream, index); used for per-trial substreams.
  static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
    std::uint64_t mix = seed;
    std::uint64_t a = splitmix64(mix) ^ (stream * 0xD1B54A32D192ED03ULL);
    std::uint64_t b = splitmix64(a) ^ (index * 0x9E3779B97F4A7C15ULL);
    return Rng(splitmix64(b));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Complex Gaussian with unit variance per real component.
  Complex complex_normal() noexcept {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (auto& z : v) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

/// Haar unitary: Gram-Schmidt on the columns of a complex Ginibre matrix
/// (the implicit R has positive diagonal, which is what makes the law Haar).
inline ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix u(dim);
  for (auto& z : u.entries()) z = rng.complex_normal();
  for (std::size_t col = 0; col < dim; ++col) {
    // Two passes of modified Gram-Schmidt for orthogonality at round-off level.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(u(i, prev)) * u(i, col);
        for (std::size_t i = 0; i < dim; ++i) u(i, col) -= overlap * u(i, prev);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(u(i, col));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) u(i, col) *= inv;
  }
  return u;
}

/// Random Hermitian matrix with complex-Gaussian entries (GUE-like).
inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (auto& z : g.entries()) z = rng.complex_normal();
  return hermitian_part(g);
}

/// rho = G G^dagger / Tr(G G^dagger) for a square complex Ginibre G.
inline DensityMatrix random_density_matrix(std::size_t dim, Rng& rng, std::size_t rank = 0) {
  if (rank == 0 || rank > dim) rank = dim;
  ComplexMatrix rho(dim);
  std::vector<Complex> column(dim);
  for (std::size_t r = 0; r < rank; ++r) {
    for (auto& z : column) z = rng.complex_normal();
    rho += ComplexMatrix::outer(column);
  }
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix::trusted(hermitian_part(rho));
}

}  // namespace cohbound

#endif  // COHBOUND_RANDOM_HPP

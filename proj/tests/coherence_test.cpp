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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cohbound/coherence.hpp"
#include "cohbound/fixtures.hpp"
#include "cohbound/random.hpp"
#include "oracles.hpp"

namespace cohbound {
namespace {

DensityMatrix tilted() { return DensityMatrix(ComplexMatrix{{0.75, 0.25}, {0.25, 0.25}}); }

TEST(RelEntCoherence, KnownValues) {
  for (double p : {0.0, 0.1, 0.5, 0.93}) {
    EXPECT_NEAR(rel_ent_coherence(DensityMatrix(ComplexMatrix::diagonal({p, 1 - p}))), 0.0, 1e-15);
  }
  EXPECT_NEAR(rel_ent_coherence(DensityMatrix(fixtures::ket_plus())), 1.0, 1e-14);
  EXPECT_NEAR(rel_ent_coherence(tilted()),
              oracle::binary_entropy(0.75) - oracle::binary_entropy(oracle::tilted_eigenvalue(+1)),
              1e-13);
}

TEST(TotalCoherence, KnownValues) {
  for (std::size_t d = 1; d <= 5; ++d) {
    EXPECT_NEAR(total_coherence(DensityMatrix::maximally_mixed(d)), 0.0, 1e-12);
  }
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto psi = random_unit_vector(2, rng);
    EXPECT_NEAR(total_coherence(DensityMatrix::pure(psi)), 1.0, 1e-12);
  }
  EXPECT_NEAR(total_coherence(tilted()), 1.0 - oracle::tilted_entropy(), 1e-13);
  EXPECT_NEAR(1.0 - oracle::tilted_entropy(), 0.3991, 5e-5);
}

TEST(CoherenceValueTest, OrderedWithinBounds) {
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng = Rng::substream(21, 0, static_cast<std::uint64_t>(trial));
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 4);
    const CoherenceValue c = coherence(random_density_matrix(d, rng, 1 + trial % d));
    EXPECT_GE(c.basis_dependent, 0.0);
    EXPECT_LE(c.basis_dependent, c.basis_free + 1e-12);
    EXPECT_LE(c.basis_free, std::log2(static_cast<double>(d)) + 1e-12);
  }
}

TEST(RelEntCoherence, ZeroExactlyOnDiagonalStates) {
  for (int trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::substream(22, 0, static_cast<std::uint64_t>(trial));
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const DensityMatrix rho = random_density_matrix(d, rng);
    EXPECT_LE(rel_ent_coherence(dephase(rho)), 1e-9);
    EXPECT_GT(rel_ent_coherence(rho), 1e-9);
  }
}

TEST(RelEntCoherence, ConvexOnMixtures) {
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = Rng::substream(23, 0, static_cast<std::uint64_t>(trial));
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const std::size_t parts = 2 + static_cast<std::size_t>(trial % 4);
    std::vector<double> w(parts);
    double sum = 0.0;
    for (auto& x : w) sum += (x = rng.uniform() + 1e-3);
    ComplexMatrix mix(d);
    double weighted = 0.0;
    for (std::size_t i = 0; i < parts; ++i) {
      const DensityMatrix rho = random_density_matrix(d, rng, 1 + i % d);
      mix += (w[i] / sum) * rho.mat();
      weighted += (w[i] / sum) * rel_ent_coherence(rho);
    }
    ASSERT_LE(rel_ent_coherence(DensityMatrix(hermitian_part(mix))), weighted + 1e-9);
  }
}

TEST(TotalCoherence, UnitarilyInvariant) {
  for (int trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::substream(24, 0, static_cast<std::uint64_t>(trial));
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 4);
    const DensityMatrix rho = random_density_matrix(d, rng);
    const ComplexMatrix u = haar_unitary(d, rng);
    const DensityMatrix rotated(hermitian_part(u * rho.mat() * u.adjoint()));
    EXPECT_NEAR(total_coherence(rotated), total_coherence(rho), 1e-9);
  }
}

}  // namespace
}  // namespace cohbound

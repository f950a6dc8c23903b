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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "cohbound/audit.hpp"
#include "cohbound/fixtures.hpp"
#include "cohbound/miac.hpp"
#include "oracles.hpp"

namespace cohbound {
namespace {

constexpr double kPi = std::numbers::pi;

const Measurement& z_basis() {
  static const Measurement m = qubit_projector_pair(0.0, 0.0);
  return m;
}
const Measurement& x_basis() {
  static const Measurement m = qubit_projector_pair(kPi / 2, 0.0);
  return m;
}

TEST(Miac, ClassicalClassicalExample) {
  EXPECT_NEAR(miac(fixtures::example1(), z_basis()), 1.0, 1e-12);
  EXPECT_NEAR(miac(fixtures::example1(), x_basis()), 0.0, 1e-12);
  EXPECT_NEAR(miatc(fixtures::example1(), z_basis()), 1.0, 1e-12);
}

TEST(Miac, QuantumClassicalExample) {
  const double expected = 0.75 * (1 - oracle::binary_entropy(1.0 / 3.0)) + 0.25;
  EXPECT_NEAR(miac(fixtures::example3(), z_basis()), expected, 1e-12);
  EXPECT_NEAR(expected, 1 + 0.25 * std::log2(1.0 / 3.0) + 0.5 * std::log2(2.0 / 3.0), 1e-14);
  EXPECT_NEAR(expected, 0.311278, 1e-6);
}

TEST(Miatc, PureStatesGiveLogDimension) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::substream(51, 0, static_cast<std::uint64_t>(trial));
    const std::size_t db = 2 + static_cast<std::size_t>(trial % 3);
    const BipartiteState s = random_pure(2, db, rng);
    EXPECT_NEAR(miatc(s, random_measurement(2, rng)), std::log2(static_cast<double>(db)), 1e-9);
  }
}

TEST(Miatc, ClassicalQuantumConjugateBasis) {
  const double ct_b = 1 - oracle::tilted_entropy();
  EXPECT_NEAR(miatc(fixtures::example2(), x_basis()), ct_b, 1e-12);
  EXPECT_NEAR(extra_miatc(fixtures::example2(), x_basis()), 0.0, 1e-12);
  EXPECT_NEAR(extra_miac(fixtures::example2(), x_basis()), 0.0, 1e-12);
}

TEST(ExtraMiac, ClassicalQuantumComputational) {
  const double j = oracle::tilted_entropy();
  const double c_b = oracle::binary_entropy(0.75) - j;
  EXPECT_NEAR(extra_miatc(fixtures::example2(), z_basis()), j, 1e-12);
  // Conditionals |+> and |0> carry coherence 1 and 0.
  EXPECT_NEAR(extra_miac(fixtures::example2(), z_basis()), 0.5 - c_b, 1e-12);
  EXPECT_NEAR(0.5 - c_b, j + 0.5 + oracle::xlog2x(0.25) + oracle::xlog2x(0.75), 1e-14);
  EXPECT_NEAR(0.5 - c_b, 0.2896, 5e-5);
}

TEST(ExtraMiac, QuantumClassicalNullDirection) {
  // cot 2t = cos phi: phi = pi/2, t = pi/4, and further solutions along the curve.
  for (double phi : {kPi / 2, 0.3, 1.2, 2.5}) {
    const double t = 0.5 * std::atan2(1.0, std::cos(phi));
    const Measurement m = fixtures::half_angle_pair(t, phi);
    EXPECT_NEAR(extra_miac(fixtures::example3(), m), 0.0, 1e-9) << phi;
    EXPECT_NEAR(extra_miatc(fixtures::example3(), m), 0.0, 1e-9) << phi;
  }
}

TEST(ExtraMiac, BellDiagonalMatchesDisplayedFormulas) {
  const double theta = 2 * kPi / 3;
  const double phi = kPi / 2;
  const Measurement m = qubit_projector_pair(theta, phi);
  for (double c1 : {0.45, 0.0, -0.5, -0.89}) {
    const BoundReport r = coherence_report(bell_diagonal_state({c1, 0.33, 0.22}), m);
    EXPECT_NEAR(r.extra_miac, oracle::bell_extra_miac(c1, 0.33, 0.22, theta, phi), 1e-9);
    EXPECT_NEAR(r.extra_miatc, oracle::bell_extra_miatc(c1, 0.33, 0.22, theta, phi), 1e-9);
  }
  // Generic directions away from the plotted one.
  for (double th : {0.4, 1.1, 2.9}) {
    for (double ph : {0.0, 0.7, 4.0}) {
      const BoundReport r = coherence_report(bell_diagonal_state({0.3, -0.4, 0.2}),
                                             qubit_projector_pair(th, ph));
      EXPECT_NEAR(r.extra_miac, oracle::bell_extra_miac(0.3, -0.4, 0.2, th, ph), 1e-9);
      EXPECT_NEAR(r.extra_miatc, oracle::bell_extra_miatc(0.3, -0.4, 0.2, th, ph), 1e-9);
    }
  }
}

TEST(BoundReportTest, ConsistentFields) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::substream(52, 0, static_cast<std::uint64_t>(trial));
    const BipartiteState s = random_mixed(2, 2, rng);
    const Measurement m = random_measurement(2, rng);
    const BoundReport r = bound_report(s, m);
    EXPECT_NEAR(r.extra_miac, r.miac - r.c_b, 1e-12);
    EXPECT_NEAR(r.extra_miatc, r.miatc - r.ct_b, 1e-12);
    EXPECT_GE(r.extra_miac, -1e-9);
    EXPECT_GE(r.extra_miatc, -1e-9);
    EXPECT_LE(r.extra_miac, r.extra_miatc + 1e-9);
    EXPECT_LE(r.extra_miatc, r.j_classical + 1e-6);
    EXPECT_NEAR(r.discord, r.mutual_information - r.j_classical, 1e-9);
  }
}

TEST(MaxExtra, ProductStateHasNone) {
  const BipartiteState s = product_state(DensityMatrix(ComplexMatrix::diagonal({0.7, 0.3})),
                                         DensityMatrix(0.6 * fixtures::ket_plus() + 0.4 * fixtures::ket0()));
  EXPECT_NEAR(max_extra_miac(s).extra_miac, 0.0, 1e-6);
  EXPECT_NEAR(max_extra_miatc(s).extra_miatc, 0.0, 1e-6);
}

TEST(MaxExtra, ClassicalClassicalReachesCeiling) {
  const BoundReport r = max_extra_miac(fixtures::example1());
  EXPECT_NEAR(r.extra_miac, 1.0, 1e-9);
  EXPECT_NEAR(r.j_classical, 1.0, 1e-9);
}

TEST(MaxExtra, BlockDiagonalHasNoExtraMiac) {
  const BipartiteState s = fixtures::block_diagonal_example();
  double grid_max_miac = -1.0;
  double grid_max_miatc = -1.0;
  for (int i = 0; i <= 60; ++i) {
    for (int j = 0; j < 60; ++j) {
      const BoundReport r =
          coherence_report(s, qubit_projector_pair(kPi * i / 60, 2 * kPi * j / 60));
      grid_max_miac = std::max(grid_max_miac, r.extra_miac);
      grid_max_miatc = std::max(grid_max_miatc, r.extra_miatc);
    }
  }
  EXPECT_LE(grid_max_miac, 1e-9);
  const BoundReport miac_opt = max_extra_miac(s);
  EXPECT_LE(miac_opt.extra_miac, 1e-5);
  const BoundReport miatc_opt = max_extra_miatc(s);
  EXPECT_NEAR(miatc_opt.extra_miatc, 1 - oracle::binary_entropy(0.25), 1e-6);
  EXPECT_GE(miatc_opt.extra_miatc, grid_max_miatc - 1e-12);
}

TEST(MaxExtra, AttainsAtLeastGridMaximum) {
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::substream(53, 0, static_cast<std::uint64_t>(trial));
    const BipartiteState s = random_mixed(2, 2, rng);
    double grid = -1.0;
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j < 40; ++j) {
        grid = std::max(grid, extra_miac(s, qubit_projector_pair(kPi * i / 40, 2 * kPi * j / 40)));
      }
    }
    EXPECT_GE(max_extra_miac(s).extra_miac, grid - 1e-9);
  }
}

TEST(FourierSaturation, MiacEqualsEntropyOfB) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::substream(54, 0, static_cast<std::uint64_t>(trial));
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const auto lambdas = random_real_schmidt(n, rng);
    const ComplexMatrix u = haar_unitary(n, rng);
    const BipartiteState s = fixtures::schmidt_family_state(lambdas, u, n);
    const BoundReport r = coherence_report(s, fourier_measurement(u));
    double s_b = 0.0;
    for (double l : lambdas) s_b -= oracle::xlog2x(l * l);
    EXPECT_NEAR(r.miac, s_b, 1e-7);
    EXPECT_LE(r.c_b, 1e-9);
  }
}

}  // namespace
}  // namespace cohbound

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
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "cohbound/audit.hpp"
#include "cohbound/fixtures.hpp"
#include "cohbound/measurement.hpp"
#include "cohbound/random.hpp"

namespace cohbound {
namespace {

using fixtures::ket0;
using fixtures::ket1;
using fixtures::ket_minus;
using fixtures::ket_plus;

constexpr double kPi = std::numbers::pi;

/// Conditional state by explicit (M (x) I) rho (M (x) I)^dagger and partial trace.
ComplexMatrix unnormalized_conditional(const BipartiteState& s, const ComplexMatrix& m) {
  const ComplexMatrix lifted = tensor(m, ComplexMatrix::identity(s.dim_b()));
  return partial_trace(lifted * s.mat() * lifted.adjoint(), s.dim_a(), s.dim_b(), Subsystem::B);
}

TEST(MeasurementTest, RejectsIncompleteOrNonOrthogonal) {
  EXPECT_THROW(Measurement({ket0()}, MeasurementKind::projective), std::invalid_argument);
  EXPECT_THROW(Measurement({ket0(), ket_plus()}, MeasurementKind::povm), std::invalid_argument);
  EXPECT_THROW(Measurement({}, MeasurementKind::povm), std::invalid_argument);
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_THROW(Measurement({half, half}, MeasurementKind::projective), std::invalid_argument);
  const double r = std::sqrt(0.5);
  EXPECT_NO_THROW(Measurement({r * ComplexMatrix::identity(2), r * ComplexMatrix::identity(2)},
                              MeasurementKind::povm));
}

TEST(QubitProjectorPair, PolesAndEquator) {
  const Measurement z = qubit_projector_pair(0.0, 0.0);
  EXPECT_LE(max_abs_diff(z.operators()[0], ket0()), 1e-15);
  EXPECT_LE(max_abs_diff(z.operators()[1], ket1()), 1e-15);
  const Measurement x = qubit_projector_pair(kPi / 2, 0.0);
  EXPECT_LE(max_abs_diff(x.operators()[0], ket_plus()), 1e-15);
  EXPECT_LE(max_abs_diff(x.operators()[1], ket_minus()), 1e-15);
}

TEST(QubitProjectorPair, FigureMeasurementDirection) {
  const Measurement m = qubit_projector_pair(2 * kPi / 3, kPi / 2);
  const Complex up = 0.5;
  const Complex down = Complex(0, 1) * (std::sqrt(3.0) / 2);
  EXPECT_LE(max_abs_diff(m.operators()[0], ComplexMatrix::outer({up, down})), 1e-15);
  ASSERT_TRUE(m.angles().has_value());
  EXPECT_EQ(m.angles()->theta, 2 * kPi / 3);
  EXPECT_EQ(m.angles()->phi, kPi / 2);
}

TEST(MeasureA, ClassicalClassicalComputational) {
  const ConditionalEnsemble e = measure_a(fixtures::example1(), computational_measurement(2));
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(e.probs[0], 0.5, 1e-15);
  EXPECT_NEAR(e.probs[1], 0.5, 1e-15);
  EXPECT_LE(max_abs_diff(e.states[0].mat(), ket_plus()), 1e-15);
  EXPECT_LE(max_abs_diff(e.states[1].mat(), ket_minus()), 1e-15);
}

TEST(MeasureA, ClassicalClassicalConjugateBasis) {
  const ConditionalEnsemble e = measure_a(fixtures::example1(), qubit_projector_pair(kPi / 2, 0));
  for (const auto& st : e.states) {
    EXPECT_LE(max_abs_diff(st.mat(), 0.5 * ComplexMatrix::identity(2)), 1e-15);
  }
}

TEST(MeasureA, QuantumClassicalComputational) {
  const ConditionalEnsemble e = measure_a(fixtures::example3(), computational_measurement(2));
  EXPECT_NEAR(e.probs[0], 0.75, 1e-15);
  EXPECT_NEAR(e.probs[1], 0.25, 1e-15);
  EXPECT_LE(max_abs_diff(e.states[0].mat(), (1.0 / 3) * ket_plus() + (2.0 / 3) * ket_minus()),
            1e-15);
  EXPECT_LE(max_abs_diff(e.states[1].mat(), ket_plus()), 1e-15);
}

TEST(MeasureA, MatchesExplicitKrausConjugation) {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = Rng::substream(31, 0, static_cast<std::uint64_t>(trial));
    const std::size_t da = 2 + static_cast<std::size_t>(trial % 2);
    const std::size_t db = 2 + static_cast<std::size_t>(trial % 3);
    const BipartiteState s(random_density_matrix(da * db, rng), da, db);
    const Measurement m = projective_from_basis(haar_unitary(da, rng));
    const ConditionalEnsemble e = measure_a(s, m);
    for (std::size_t i = 0; i < m.outcomes(); ++i) {
      const ComplexMatrix direct = unnormalized_conditional(s, m.operators()[i]);
      EXPECT_LE(max_abs_diff(e.probs[i] * e.states[i].mat(), direct), 1e-12);
    }
  }
}

TEST(MeasureA, PovmKrausOperators) {
  // Two-outcome unsharp measurement with Kraus operators sqrt(E_i).
  const double a = 0.8;
  const ComplexMatrix k0 = ComplexMatrix::diagonal({std::sqrt(a), std::sqrt(1 - a)});
  const ComplexMatrix k1 = ComplexMatrix::diagonal({std::sqrt(1 - a), std::sqrt(a)});
  const Measurement m({k0, k1}, MeasurementKind::povm);
  const ConditionalEnsemble e = measure_a(fixtures::example2(), m);
  EXPECT_NEAR(e.probs[0] + e.probs[1], 1.0, 1e-14);
  EXPECT_LE(max_abs_diff(e.probs[0] * e.states[0].mat(),
                         unnormalized_conditional(fixtures::example2(), k0)),
            1e-15);
  EXPECT_LE(max_abs_diff(e.mixture(), partial_trace(fixtures::example2(), Subsystem::B).mat()),
            1e-15);
}

TEST(MeasureA, ZeroProbabilityOutcomeIsSkipped) {
  const BipartiteState s = product_state(DensityMatrix(ket0()), DensityMatrix(ket_plus()));
  const ConditionalEnsemble e = measure_a(s, computational_measurement(2));
  EXPECT_TRUE(e.populated[0]);
  EXPECT_FALSE(e.populated[1]);
  EXPECT_EQ(e.probs[1], 0.0);
}

TEST(MeasureA, RejectsDimensionMismatch) {
  EXPECT_THROW(measure_a(fixtures::example1(), computational_measurement(3)), std::invalid_argument);
}

TEST(MeasureA, MixtureConsistencyOnRandomInputs) {
  double worst_mixture = 0.0;
  double worst_sum = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = Rng::substream(32, 0, static_cast<std::uint64_t>(trial));
    const BipartiteState s = random_mixed(2, 2, rng);
    const ConditionalEnsemble e = measure_a(s, random_measurement(2, rng));
    double total = 0.0;
    for (double p : e.probs) {
      ASSERT_GE(p, -1e-12);
      total += p;
    }
    worst_sum = std::max(worst_sum, std::abs(total - 1.0));
    worst_mixture =
        std::max(worst_mixture, max_abs_diff(e.mixture(), partial_trace(s, Subsystem::B).mat()));
  }
  EXPECT_LE(worst_sum, 1e-9);
  EXPECT_LE(worst_mixture, 1e-9);
}

TEST(MeasureA, PureInputsGivePureConditionals) {
  for (int trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::substream(33, 0, static_cast<std::uint64_t>(trial));
    const std::size_t da = 2 + static_cast<std::size_t>(trial % 2);
    const BipartiteState s = random_pure(da, 2, rng);
    const ConditionalEnsemble e = measure_a(s, random_measurement(da, rng));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e.probs[i] > 1e-9) {
        ASSERT_LE(von_neumann_entropy(e.states[i]), 1e-7);
      }
    }
  }
}

TEST(FourierMeasurement, IdentityGivesConjugateBasis) {
  const Measurement m = fourier_measurement(2, ComplexMatrix::identity(2));
  EXPECT_LE(max_abs_diff(m.operators()[0], ket_plus()), 1e-15);
  EXPECT_LE(max_abs_diff(m.operators()[1], ket_minus()), 1e-15);
}

TEST(FourierMeasurement, HadamardGivesComputationalBasis) {
  const ComplexMatrix h = fixtures::hadamard();
  const Measurement m = fourier_measurement(2, h);
  // Brute force: |v_w> = H F^dagger |w> with F^dagger = H for two points.
  for (std::size_t w = 0; w < 2; ++w) {
    std::vector<Complex> v(2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) v[i] += h(i, j) * h(j, w);
    }
    EXPECT_LE(max_abs_diff(m.operators()[w], ComplexMatrix::outer(v)), 1e-15);
  }
  EXPECT_LE(max_abs_diff(m.operators()[0], ket0()), 1e-15);
  EXPECT_LE(max_abs_diff(m.operators()[1], ket1()), 1e-15);
}

TEST(FourierMeasurement, RejectsBadUnitary) {
  EXPECT_THROW(fourier_measurement(2, ComplexMatrix::diagonal({1.0, 2.0})), std::invalid_argument);
  EXPECT_THROW(fourier_measurement(3, ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST(FourierMeasurement, UniformOutcomesOnSchmidtFamily) {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = Rng::substream(34, 0, static_cast<std::uint64_t>(trial));
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const auto lambdas = random_real_schmidt(n, rng);
    const ComplexMatrix u = haar_unitary(n, rng);
    const BipartiteState s = fixtures::schmidt_family_state(lambdas, u, n);
    const ConditionalEnsemble e = measure_a(s, fourier_measurement(u));
    for (std::size_t w = 0; w < n; ++w) {
      ASSERT_NEAR(e.probs[w], 1.0 / static_cast<double>(n), 1e-9);
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_NEAR(e.states[w](j, j).real(), lambdas[j] * lambdas[j], 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace cohbound

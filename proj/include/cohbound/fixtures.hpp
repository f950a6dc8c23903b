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

// Worked-example states, built programmatically.

#ifndef COHBOUND_FIXTURES_HPP
#define COHBOUND_FIXTURES_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "cohbound/measurement.hpp"
#include "cohbound/qmatrix.hpp"

namespace cohbound::fixtures {

inline const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

inline ComplexMatrix ket0() { return ComplexMatrix::outer({1.0, 0.0}); }
inline ComplexMatrix ket1() { return ComplexMatrix::outer({0.0, 1.0}); }
inline ComplexMatrix ket_plus() { return ComplexMatrix::outer({kInvSqrt2, kInvSqrt2}); }
inline ComplexMatrix ket_minus() { return ComplexMatrix::outer({kInvSqrt2, -kInvSqrt2}); }

inline ComplexMatrix hadamard() {
  return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}

/// sum_i w_i a_i (x) b_i as a 2x2 bipartite state.
inline BipartiteState qubit_mixture(std::initializer_list<double> weights,
                                    std::initializer_list<ComplexMatrix> a_parts,
                                    std::initializer_list<ComplexMatrix> b_parts) {
  ComplexMatrix m(4);
  auto w = weights.begin();
  auto a = a_parts.begin();
  auto b = b_parts.begin();
  for (; w != weights.end(); ++w, ++a, ++b) m += *w * tensor(*a, *b);
  return BipartiteState(DensityMatrix(std::move(m)), 2, 2);
}

/// 1/2 (|0><0| (x) |+><+| + |1><1| (x) |-><-|): classical-classical.
inline BipartiteState example1() {
  return qubit_mixture({0.5, 0.5}, {ket0(), ket1()}, {ket_plus(), ket_minus()});
}

/// 1/2 |0><0| (x) |+><+| + 1/2 |1><1| (x) |0><0|: classical-quantum.
inline BipartiteState example2() {
  return qubit_mixture({0.5, 0.5}, {ket0(), ket1()}, {ket_plus(), ket0()});
}

/// 1/2 |+><+| (x) |+><+| + 1/2 |0><0| (x) |-><-|: quantum-classical.
inline BipartiteState example3() {
  return qubit_mixture({0.5, 0.5}, {ket_plus(), ket0()}, {ket_plus(), ket_minus()});
}

/// 1/2 |0><0| (x) diag(3/4, 1/4) + 1/2 |1><1| (x) diag(1/4, 3/4): block-diagonal
/// in Bob's basis yet correlated.
inline BipartiteState block_diagonal_example() {
  return qubit_mixture({0.5, 0.5}, {ket0(), ket1()},
                       {ComplexMatrix::diagonal({0.75, 0.25}), ComplexMatrix::diagonal({0.25, 0.75})});
}

/// Measurement {|psi+>, |psi->} with |psi+> = cos(t)|0> + e^{i phi} sin(t)|1>
/// (half-angle convention of the quantum-classical example).
inline Measurement half_angle_pair(double half_theta, double phi) {
  return qubit_projector_pair(2.0 * half_theta, phi);
}

/// |phi> = sum_j lambda_j (U_A (x) I)|j>|j>, lambda real; dim_b >= lambdas.size().
inline BipartiteState schmidt_family_state(std::span<const double> lambdas,
                                           const ComplexMatrix& u_a, std::size_t dim_b) {
  const std::size_t dim_a = u_a.dim();
  if (lambdas.size() > dim_a || lambdas.size() > dim_b) {
    throw std::invalid_argument("schmidt_family_state: too many Schmidt coefficients");
  }
  std::vector<Complex> psi(dim_a * dim_b);
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    for (std::size_t a = 0; a < dim_a; ++a) psi[a * dim_b + j] += lambdas[j] * u_a(a, j);
  }
  return BipartiteState(DensityMatrix::pure(psi), dim_a, dim_b);
}

}  // namespace cohbound::fixtures

#endif  // COHBOUND_FIXTURES_HPP

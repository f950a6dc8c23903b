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

#ifndef COHBOUND_CORRELATIONS_HPP
#define COHBOUND_CORRELATIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohbound/measurement.hpp"
#include "cohbound/measurement_search.hpp"
#include "cohbound/qmatrix.hpp"

namespace cohbound {

/// I(A:B) = S(rho_A) + S(rho_B) - S(rho_AB).
inline double mutual_information(const BipartiteState& s) {
  return von_neumann_entropy(partial_trace(s, Subsystem::A)) +
         von_neumann_entropy(partial_trace(s, Subsystem::B)) - von_neumann_entropy(s.rho());
}

/// sum_i q_i S(rho_i^B) over populated outcomes.
inline double average_conditional_entropy(const ConditionalEnsemble& ens) {
  double acc = 0.0;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    if (ens.populated[i]) acc += ens.probs[i] * von_neumann_entropy(ens.states[i]);
  }
  return acc;
}

inline double conditional_entropy_after(const BipartiteState& s, const Measurement& m) {
  return average_conditional_entropy(measure_a(s, m));
}

struct CorrelationReport {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  Measurement optimal_measurement;
  std::vector<TracePoint> optimizer_trace;
};

/// J(B|A) = S(rho_B) - min over rank-one projective measurements on A of the
/// average conditional entropy. Every seed is evaluated, so J is at least
/// S(rho_B) - conditional_entropy_after(s, seed) for each seed.
inline CorrelationReport classical_correlation(const BipartiteState& s,
                                               std::span<const Measurement> seeds = {},
                                               const SearchConfig& config = {}) {
  const double entropy_b = von_neumann_entropy(partial_trace(s, Subsystem::B));
  auto search = search_measurements(
      s.dim_a(), [&](const Measurement& m) { return conditional_entropy_after(s, m); }, seeds,
      config, SearchGoal::minimize);
  const double info = mutual_information(s);
  const double j = entropy_b - search.value;
  return CorrelationReport{info, j, info - j, std::move(search.measurement),
                           std::move(search.trace)};
}

inline double quantum_discord(const BipartiteState& s, const SearchConfig& config = {}) {
  return classical_correlation(s, {}, config).discord;
}

// ---------------------------------------------------------------------------
// Bell-diagonal states
// ---------------------------------------------------------------------------

/// (I (x) I + sum_j c_j sigma_j (x) sigma_j) / 4.
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Eigenvalues (1-c1-c2-c3)/4, (1-c1+c2+c3)/4, (1+c1-c2+c3)/4, (1+c1+c2-c3)/4.
inline std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& p) {
  return {(1 - p.c1 - p.c2 - p.c3) / 4, (1 - p.c1 + p.c2 + p.c3) / 4,
          (1 + p.c1 - p.c2 + p.c3) / 4, (1 + p.c1 + p.c2 - p.c3) / 4};
}

inline bool is_physical(const BellDiagonalParams& p) {
  const auto ev = bell_diagonal_eigenvalues(p);
  return std::all_of(ev.begin(), ev.end(), [](double x) { return x >= -1e-12; });
}

namespace detail {
inline void require_physical(const BellDiagonalParams& p) {
  if (!is_physical(p)) {
    throw std::invalid_argument("Bell-diagonal parameters (" + std::to_string(p.c1) + ", " +
                                std::to_string(p.c2) + ", " + std::to_string(p.c3) +
                                ") lie outside the physical tetrahedron");
  }
}

/// x log2 x with 0 log 0 = 0.
inline double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }
}  // namespace detail

inline BipartiteState bell_diagonal_state(const BellDiagonalParams& p) {
  detail::require_physical(p);
  ComplexMatrix m = ComplexMatrix::identity(4);
  m += p.c1 * tensor(pauli::x(), pauli::x());
  m += p.c2 * tensor(pauli::y(), pauli::y());
  m += p.c3 * tensor(pauli::z(), pauli::z());
  m *= 0.25;
  return BipartiteState(DensityMatrix::trusted(std::move(m)), 2, 2);
}

/// sum_{+-} (1 +- c)/2 log2(1 +- c), c = max |c_j|.
inline double bell_diagonal_classical_correlation(const BellDiagonalParams& p) {
  detail::require_physical(p);
  const double c = std::max({std::abs(p.c1), std::abs(p.c2), std::abs(p.c3)});
  return 0.5 * (detail::xlog2x(1 + c) + detail::xlog2x(1 - c));
}

inline double bell_diagonal_discord(const BellDiagonalParams& p) {
  detail::require_physical(p);
  double info = 0.0;
  for (double lambda : bell_diagonal_eigenvalues(p)) info += detail::xlog2x(4 * lambda);
  info /= 4.0;
  return info - bell_diagonal_classical_correlation(p);
}

}  // namespace cohbound

#endif  // COHBOUND_CORRELATIONS_HPP

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

#ifndef COHBOUND_MEASUREMENT_HPP
#define COHBOUND_MEASUREMENT_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohbound/qmatrix.hpp"

namespace cohbound {

enum class MeasurementKind { projective, povm };

/// Polar/azimuthal angles of |psi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Measurement on subsystem A, given by Kraus operators M_i with
/// sum_i M_i^dagger M_i = I.
class Measurement {
 public:
  static constexpr double kTolerance = 1e-9;

  Measurement(std::vector<ComplexMatrix> operators, MeasurementKind kind,
              std::optional<BlochAngles> angles = std::nullopt)
      : operators_(std::move(operators)), kind_(kind), angles_(angles) {
    validate();
  }

  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  MeasurementKind kind() const noexcept { return kind_; }
  std::size_t outcomes() const noexcept { return operators_.size(); }
  std::size_t dim() const noexcept { return operators_.front().dim(); }

  /// Set when the measurement is a qubit projector pair built from Bloch angles.
  const std::optional<BlochAngles>& angles() const noexcept { return angles_; }

  /// POVM element E_i = M_i^dagger M_i.
  ComplexMatrix effect(std::size_t i) const { return operators_[i].adjoint() * operators_[i]; }

 private:
  void validate() const {
    if (operators_.empty()) throw std::invalid_argument("Measurement: no operators");
    const std::size_t d = operators_.front().dim();
    ComplexMatrix completeness(d);
    for (const auto& m : operators_) {
      if (m.dim() != d) throw std::invalid_argument("Measurement: operators differ in dimension");
      completeness += m.adjoint() * m;
    }
    const double defect = max_abs_diff(completeness, ComplexMatrix::identity(d));
    if (defect > kTolerance) {
      throw std::invalid_argument("Measurement: completeness violated by " +
                                  std::to_string(defect));
    }
    if (kind_ != MeasurementKind::projective) return;
    for (std::size_t i = 0; i < operators_.size(); ++i) {
      if (hermiticity_defect(operators_[i]) > kTolerance) {
        throw std::invalid_argument("Measurement: projector " + std::to_string(i) +
                                    " is not Hermitian");
      }
      for (std::size_t j = 0; j < operators_.size(); ++j) {
        const ComplexMatrix prod = operators_[i] * operators_[j];
        const double err = i == j ? max_abs_diff(prod, operators_[i])
                                  : max_abs_diff(prod, ComplexMatrix(d));
        if (err > kTolerance) {
          throw std::invalid_argument("Measurement: projectors " + std::to_string(i) + ", " +
                                      std::to_string(j) + " violate orthogonality/idempotence");
        }
      }
    }
  }

  std::vector<ComplexMatrix> operators_;
  MeasurementKind kind_;
  std::optional<BlochAngles> angles_;
};

/// Rank-one projective measurement onto the columns of a unitary.
inline Measurement projective_from_basis(const ComplexMatrix& basis) {
  if (!is_unitary(basis)) throw std::invalid_argument("projective_from_basis: basis not unitary");
  const std::size_t d = basis.dim();
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  std::vector<Complex> column(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) column[i] = basis(i, k);
    ops.push_back(ComplexMatrix::outer(column));
  }
  return Measurement(std::move(ops), MeasurementKind::projective);
}

inline Measurement computational_measurement(std::size_t dim) {
  return projective_from_basis(ComplexMatrix::identity(dim));
}

/// {|psi><psi|, I - |psi><psi|} with |psi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
inline Measurement qubit_projector_pair(double theta, double phi) {
  const Complex up = std::cos(theta / 2.0);
  const Complex down = std::polar(1.0, phi) * std::sin(theta / 2.0);
  ComplexMatrix plus = ComplexMatrix::outer({up, down});
  ComplexMatrix minus = ComplexMatrix::identity(2) - plus;
  return Measurement({std::move(plus), std::move(minus)}, MeasurementKind::projective,
                     BlochAngles{theta, phi});
}

/// Projective measurement with outcome-omega projector U_A F^dagger|w><w| F U_A^dagger,
/// where F_{w j} = e^{2 pi i j w / N} / sqrt(N) is the discrete Fourier matrix.
inline Measurement fourier_measurement(const ComplexMatrix& u_a) {
  if (!is_unitary(u_a)) throw std::invalid_argument("fourier_measurement: U_A is not unitary");
  const std::size_t n = u_a.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix fourier_adjoint(n);  // (F^dagger)_{j w}
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t w = 0; w < n; ++w) {
      const double angle =
          -2.0 * std::numbers::pi * static_cast<double>(j * w) / static_cast<double>(n);
      fourier_adjoint(j, w) = std::polar(scale, angle);
    }
  }
  return projective_from_basis(u_a * fourier_adjoint);
}

inline Measurement fourier_measurement(std::size_t dim, const ComplexMatrix& u_a) {
  if (u_a.dim() != dim) {
    throw std::invalid_argument("fourier_measurement: U_A has dimension " +
                                std::to_string(u_a.dim()) + ", expected " + std::to_string(dim));
  }
  return fourier_measurement(u_a);
}

// ---------------------------------------------------------------------------
// Conditional ensembles
// ---------------------------------------------------------------------------

/// Outcome probabilities with probability below this are dropped from averages.
inline constexpr double kDegenerateOutcome = 1e-12;

/// Bob's ensemble {p_i, rho_i^B} after Alice's measurement. Outcomes with
/// p_i < 1e-12 hold a maximally mixed placeholder and have `populated[i] == false`.
struct ConditionalEnsemble {
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  std::vector<bool> populated;

  std::size_t size() const noexcept { return probs.size(); }

  /// sum_i p_i rho_i over populated outcomes.
  ComplexMatrix mixture() const {
    ComplexMatrix out(states.front().dim());
    for (std::size_t i = 0; i < size(); ++i) {
      if (populated[i]) out += probs[i] * states[i].mat();
    }
    return out;
  }
};

/// p_i = Tr[(M_i (x) I) rho (M_i (x) I)^dagger],
/// rho_i^B = Tr_A[(M_i (x) I) rho (M_i (x) I)^dagger] / p_i.
inline ConditionalEnsemble measure_a(const BipartiteState& s, const Measurement& m) {
  const std::size_t da = s.dim_a();
  const std::size_t db = s.dim_b();
  if (m.dim() != da) {
    throw std::invalid_argument("measure_a: measurement acts on dimension " +
                                std::to_string(m.dim()) + ", subsystem A has " +
                                std::to_string(da));
  }
  const ComplexMatrix& rho = s.mat();
  ConditionalEnsemble ens;
  ens.probs.reserve(m.outcomes());
  ens.states.reserve(m.outcomes());
  ens.populated.reserve(m.outcomes());
  for (std::size_t i = 0; i < m.outcomes(); ++i) {
    // Tr_A[(M (x) I) rho (M^dagger (x) I)] = sum_{a,a'} E_{a a'} rho_{(a' k),(a l)}, E = M^dagger M.
    const ComplexMatrix effect = m.effect(i);
    ComplexMatrix cond(db);
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t ap = 0; ap < da; ++ap) {
        const Complex e = effect(a, ap);
        if (e == Complex{}) continue;
        for (std::size_t k = 0; k < db; ++k) {
          for (std::size_t l = 0; l < db; ++l) cond(k, l) += e * rho(ap * db + k, a * db + l);
        }
      }
    }
    const double p = cond.trace().real();
    if (p < kDegenerateOutcome) {
      ens.probs.push_back(std::max(p, 0.0));
      ens.states.push_back(DensityMatrix::maximally_mixed(db));
      ens.populated.push_back(false);
      continue;
    }
    cond *= 1.0 / p;
    ens.probs.push_back(p);
    ens.states.push_back(DensityMatrix::trusted(hermitian_part(cond)));
    ens.populated.push_back(true);
  }
  return ens;
}

}  // namespace cohbound

#endif  // COHBOUND_MEASUREMENT_HPP

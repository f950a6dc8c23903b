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

#ifndef COHBOUND_COHERENCE_HPP
#define COHBOUND_COHERENCE_HPP

#include <cmath>

#include "cohbound/qmatrix.hpp"

namespace cohbound {

namespace detail {
inline double clamp_round_off(double value) {
  return value < 0.0 && value >= -1e-9 ? 0.0 : value;
}
}  // namespace detail

/// Relative-entropy coherence in the computational basis: S(rho*) - S(rho).
inline double rel_ent_coherence(const DensityMatrix& rho) {
  return detail::clamp_round_off(von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho));
}

/// Basis-free (total) coherence: log2 d - S(rho).
inline double total_coherence(const DensityMatrix& rho) {
  return detail::clamp_round_off(std::log2(static_cast<double>(rho.dim())) -
                                 von_neumann_entropy(rho));
}

/// Both measures of one state.
struct CoherenceValue {
  double basis_dependent = 0.0;
  double basis_free = 0.0;
};

inline CoherenceValue coherence(const DensityMatrix& rho) {
  return {rel_ent_coherence(rho), total_coherence(rho)};
}

}  // namespace cohbound

#endif  // COHBOUND_COHERENCE_HPP

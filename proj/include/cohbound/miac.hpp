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

#ifndef COHBOUND_MIAC_HPP
#define COHBOUND_MIAC_HPP

#include <cmath>
#include <span>
#include <vector>

#include "cohbound/coherence.hpp"
#include "cohbound/correlations.hpp"
#include "cohbound/measurement.hpp"
#include "cohbound/measurement_search.hpp"

namespace cohbound {

/// Bob's average coherence over the ensemble induced by Alice's measurement.
struct AverageCoherence {
  double miac = 0.0;   // sum_i p_i C(rho_i^B)
  double miatc = 0.0;  // log2 d_B - sum_i p_i S(rho_i^B)
};

inline AverageCoherence average_coherence(const ConditionalEnsemble& ens) {
  const double log_d = std::log2(static_cast<double>(ens.states.front().dim()));
  AverageCoherence out;
  double avg_entropy = 0.0;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    if (!ens.populated[i]) continue;
    const double s = von_neumann_entropy(ens.states[i]);
    const double s_dephased = von_neumann_entropy(dephase(ens.states[i]));
    out.miac += ens.probs[i] * detail::clamp_round_off(s_dephased - s);
    avg_entropy += ens.probs[i] * s;
  }
  out.miatc = log_d - avg_entropy;
  return out;
}

inline double miac(const BipartiteState& s, const Measurement& m) {
  return average_coherence(measure_a(s, m)).miac;
}

inline double miatc(const BipartiteState& s, const Measurement& m) {
  return average_coherence(measure_a(s, m)).miatc;
}

inline double extra_miac(const BipartiteState& s, const Measurement& m) {
  return miac(s, m) - rel_ent_coherence(partial_trace(s, Subsystem::B));
}

inline double extra_miatc(const BipartiteState& s, const Measurement& m) {
  return miatc(s, m) - total_coherence(partial_trace(s, Subsystem::B));
}

/// Every bound-chain quantity for one (state, measurement) pair. J is computed
/// with the report's own measurement among the optimizer seeds.
struct BoundReport {
  double c_b = 0.0;
  double ct_b = 0.0;
  double miac = 0.0;
  double miatc = 0.0;
  double extra_miac = 0.0;
  double extra_miatc = 0.0;
  double j_classical = 0.0;
  double mutual_information = 0.0;
  double discord = 0.0;
  Measurement measurement;
};

/// Coherence-only part of a report, without the J optimization.
inline BoundReport coherence_report(const BipartiteState& s, const Measurement& m) {
  const DensityMatrix rho_b = partial_trace(s, Subsystem::B);
  const auto avg = average_coherence(measure_a(s, m));
  BoundReport r{.c_b = rel_ent_coherence(rho_b),
                .ct_b = total_coherence(rho_b),
                .miac = avg.miac,
                .miatc = avg.miatc,
                .measurement = m};
  r.extra_miac = r.miac - r.c_b;
  r.extra_miatc = r.miatc - r.ct_b;
  return r;
}

inline void attach_correlations(BoundReport& r, const CorrelationReport& corr) {
  r.j_classical = corr.classical_correlation;
  r.mutual_information = corr.mutual_information;
  r.discord = corr.discord;
}

inline BoundReport bound_report(const BipartiteState& s, const Measurement& m,
                                const SearchConfig& config = {},
                                std::span<const Measurement> extra_seeds = {}) {
  BoundReport r = coherence_report(s, m);
  std::vector<Measurement> seeds(extra_seeds.begin(), extra_seeds.end());
  seeds.push_back(m);
  attach_correlations(r, classical_correlation(s, seeds, config));
  return r;
}

namespace detail {
inline BoundReport max_extra(const BipartiteState& s, const SearchConfig& config, bool total) {
  const DensityMatrix rho_b = partial_trace(s, Subsystem::B);
  const double baseline = total ? total_coherence(rho_b) : rel_ent_coherence(rho_b);
  auto search = search_measurements(
      s.dim_a(),
      [&](const Measurement& m) {
        const auto avg = average_coherence(measure_a(s, m));
        return (total ? avg.miatc : avg.miac) - baseline;
      },
      {}, config, SearchGoal::maximize);
  return bound_report(s, search.measurement, config);
}
}  // namespace detail

/// Maximum of extra_miac over rank-one projective measurements; the report is
/// evaluated at the maximizing measurement.
inline BoundReport max_extra_miac(const BipartiteState& s, const SearchConfig& config = {}) {
  return detail::max_extra(s, config, false);
}

inline BoundReport max_extra_miatc(const BipartiteState& s, const SearchConfig& config = {}) {
  return detail::max_extra(s, config, true);
}

}  // namespace cohbound

#endif  // COHBOUND_MIAC_HPP

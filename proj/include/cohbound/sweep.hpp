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

#ifndef COHBOUND_SWEEP_HPP
#define COHBOUND_SWEEP_HPP

#include <charconv>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "cohbound/correlations.hpp"
#include "cohbound/measurement.hpp"
#include "cohbound/miac.hpp"

namespace cohbound {

/// Bell-diagonal c1 sweep at a fixed qubit measurement.
struct SweepConfig {
  double c1_min = -0.89;
  double c1_max = 0.45;
  int steps = 100;
  double c2 = 0.33;
  double c3 = 0.22;
  double theta = 2.0 * std::numbers::pi / 3.0;
  double phi = std::numbers::pi / 2.0;
};

/// J and D from the Bell-diagonal closed forms, extras measured at (theta, phi).
struct SweepRow {
  double c1 = 0.0;
  double j_closed = 0.0;
  double discord_closed = 0.0;
  double extra_miac = 0.0;
  double extra_miatc = 0.0;
};

inline double sweep_point(const SweepConfig& cfg, int k) {
  if (cfg.steps == 1 || k == 0) return cfg.c1_min;
  if (k == cfg.steps - 1) return cfg.c1_max;
  return cfg.c1_min + (cfg.c1_max - cfg.c1_min) * k / (cfg.steps - 1);
}

inline std::vector<SweepRow> bell_sweep(const SweepConfig& cfg) {
  if (cfg.steps < 1) throw std::invalid_argument("bell_sweep: steps must be positive");
  if (cfg.c1_min > cfg.c1_max) throw std::invalid_argument("bell_sweep: c1_min > c1_max");
  for (double c1 : {cfg.c1_min, cfg.c1_max}) {
    if (!is_physical({c1, cfg.c2, cfg.c3})) {
      throw std::invalid_argument("bell_sweep: c1 = " + std::to_string(c1) +
                                  " is unphysical for c2 = " + std::to_string(cfg.c2) +
                                  ", c3 = " + std::to_string(cfg.c3));
    }
  }
  const Measurement m = qubit_projector_pair(cfg.theta, cfg.phi);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.steps));
  for (int k = 0; k < cfg.steps; ++k) {
    const BellDiagonalParams p{sweep_point(cfg, k), cfg.c2, cfg.c3};
    const BoundReport r = coherence_report(bell_diagonal_state(p), m);
    rows.push_back({p.c1, bell_diagonal_classical_correlation(p), bell_diagonal_discord(p),
                    r.extra_miac, r.extra_miatc});
  }
  return rows;
}

/// Shortest decimal text that parses back to the same double.
inline std::string shortest_repr(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw std::runtime_error("shortest_repr: formatting failed");
  return std::string(buf, end);
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "c1,J,D,extra_miatc,extra_miac\n";
  for (const auto& r : rows) {
    out << shortest_repr(r.c1) << ',' << shortest_repr(r.j_closed) << ','
        << shortest_repr(r.discord_closed) << ',' << shortest_repr(r.extra_miatc) << ','
        << shortest_repr(r.extra_miac) << '\n';
  }
}

}  // namespace cohbound

#endif  // COHBOUND_SWEEP_HPP

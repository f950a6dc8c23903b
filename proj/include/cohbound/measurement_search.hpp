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

#ifndef COHBOUND_MEASUREMENT_SEARCH_HPP
#define COHBOUND_MEASUREMENT_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cohbound/measurement.hpp"
#include "cohbound/nelder_mead.hpp"
#include "cohbound/random.hpp"

namespace cohbound {

/// Knobs shared by every search over Alice's rank-one projective measurements.
struct SearchConfig {
  int grid_theta = 24;
  int grid_phi = 24;
  int refine_starts = 3;
  double simplex_tol = 1e-7;
  int max_simplex_iterations = 5000;
  /// Random bases tried when dim_a > 2; zero disables the fallback.
  int haar_samples = 512;
  std::uint64_t haar_seed = 0x5eed'c0de'2016ULL;
};

struct TracePoint {
  double theta = 0.0;
  double phi = 0.0;
  double value = 0.0;
};

struct SearchResult {
  double value = 0.0;
  Measurement measurement;
  /// Start and end point of every simplex refinement, in the order run.
  std::vector<TracePoint> trace;
  int evaluations = 0;
};

enum class SearchGoal { minimize, maximize };

/// Optimizes `objective` over rank-one projective measurements on A.
///
/// dim_a == 2: a theta x phi grid over [0, pi] x [0, 2 pi) plus `seeds`, then
/// Nelder-Mead from the best `refine_starts` angle-parameterized candidates.
/// dim_a > 2: `haar_samples` Haar-random bases plus the computational basis
/// plus `seeds`, no refinement (a one-sided heuristic).
///
/// The returned value is never worse than any seed's value. Ties keep the
/// first candidate in grid order, then seed order.
inline SearchResult search_measurements(std::size_t dim_a,
                                        const std::function<double(const Measurement&)>& objective,
                                        std::span<const Measurement> seeds,
                                        const SearchConfig& config, SearchGoal goal) {
  const double sign = goal == SearchGoal::minimize ? 1.0 : -1.0;
  int evaluations = 0;
  auto score = [&](const Measurement& m) {
    ++evaluations;
    return sign * objective(m);
  };

  struct Candidate {
    Measurement measurement;
    double score;
  };
  std::vector<Candidate> candidates;
  std::vector<TracePoint> trace;

  if (dim_a == 2) {
    candidates.reserve(static_cast<std::size_t>(config.grid_theta * config.grid_phi) + seeds.size());
    for (int i = 0; i < config.grid_theta; ++i) {
      const double theta =
          config.grid_theta > 1 ? std::numbers::pi * i / (config.grid_theta - 1) : 0.0;
      for (int j = 0; j < config.grid_phi; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / config.grid_phi;
        Measurement m = qubit_projector_pair(theta, phi);
        const double s = score(m);
        candidates.push_back({std::move(m), s});
      }
    }
  } else {
    if (config.haar_samples <= 0) {
      throw std::invalid_argument(
          "search_measurements: dim_a > 2 requires a positive haar_samples budget");
    }
    Rng rng(config.haar_seed);
    Measurement computational = computational_measurement(dim_a);
    const double s0 = score(computational);
    candidates.push_back({std::move(computational), s0});
    for (int k = 0; k < config.haar_samples; ++k) {
      Measurement m = projective_from_basis(haar_unitary(dim_a, rng));
      const double s = score(m);
      candidates.push_back({std::move(m), s});
    }
  }
  for (const auto& seed : seeds) {
    if (seed.dim() != dim_a) throw std::invalid_argument("search_measurements: seed dimension");
    candidates.push_back({seed, score(seed)});
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (candidates[k].score < candidates[best].score) best = k;
  }
  Measurement best_measurement = candidates[best].measurement;
  double best_score = candidates[best].score;

  if (dim_a == 2 && config.refine_starts > 0) {
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (candidates[k].measurement.angles()) order.push_back(k);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return candidates[a].score < candidates[b].score;
    });
    order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(config.refine_starts)));

    auto angle_score = [&](const std::array<double, 2>& x) {
      return score(qubit_projector_pair(x[0], x[1]));
    };
    const double step = std::numbers::pi / std::max(config.grid_theta, 1);
    for (std::size_t k : order) {
      const BlochAngles start = *candidates[k].measurement.angles();
      trace.push_back({start.theta, start.phi, sign * candidates[k].score});
      const auto refined =
          nelder_mead<2>(angle_score, {start.theta, start.phi}, step, config.simplex_tol,
                         config.max_simplex_iterations);
      trace.push_back({refined.x[0], refined.x[1], sign * refined.value});
      if (refined.value < best_score) {
        best_score = refined.value;
        best_measurement = qubit_projector_pair(refined.x[0], refined.x[1]);
      }
    }
  }

  return SearchResult{sign * best_score, std::move(best_measurement), std::move(trace),
                      evaluations};
}

}  // namespace cohbound

#endif  // COHBOUND_MEASUREMENT_SEARCH_HPP

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

#ifndef COHBOUND_NELDER_MEAD_HPP
#define COHBOUND_NELDER_MEAD_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace cohbound {

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Downhill simplex minimization with standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). Stops once the largest vertex
/// distance from the best vertex is below `diameter_tol`.
template <std::size_t N, typename F>
SimplexResult<N> nelder_mead(F&& f, const std::array<double, N>& start, double step,
                             double diameter_tol = 1e-7, int max_iterations = 5000) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> pts{};
  std::array<double, N + 1> vals{};
  pts[0] = start;
  for (std::size_t k = 0; k < N; ++k) {
    pts[k + 1] = start;
    pts[k + 1][k] += step;
  }
  for (std::size_t k = 0; k <= N; ++k) vals[k] = f(pts[k]);

  auto diameter = [&] {
    double worst = 0.0;
    for (std::size_t k = 1; k <= N; ++k) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < N; ++c) d2 += (pts[k][c] - pts[0][c]) * (pts[k][c] - pts[0][c]);
      worst = std::max(worst, std::sqrt(d2));
    }
    return worst;
  };
  auto along = [](const Point& from, const Point& to, double t) {
    Point out{};
    for (std::size_t c = 0; c < N; ++c) out[c] = from[c] + t * (to[c] - from[c]);
    return out;
  };

  SimplexResult<N> result;
  std::array<std::size_t, N + 1> order{};
  for (; result.iterations < max_iterations; ++result.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    {
      std::array<Point, N + 1> sp{};
      std::array<double, N + 1> sv{};
      for (std::size_t k = 0; k <= N; ++k) {
        sp[k] = pts[order[k]];
        sv[k] = vals[order[k]];
      }
      pts = sp;
      vals = sv;
    }
    if (diameter() < diameter_tol) {
      result.converged = true;
      break;
    }

    Point centroid{};
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t c = 0; c < N; ++c) centroid[c] += pts[k][c] / static_cast<double>(N);
    }
    const Point& worst = pts[N];
    const Point reflected = along(centroid, worst, -1.0);
    const double f_reflected = f(reflected);

    if (f_reflected < vals[0]) {
      const Point expanded = along(centroid, worst, -2.0);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        pts[N] = expanded;
        vals[N] = f_expanded;
      } else {
        pts[N] = reflected;
        vals[N] = f_reflected;
      }
      continue;
    }
    if (f_reflected < vals[N - 1]) {
      pts[N] = reflected;
      vals[N] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < vals[N];
    const Point contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, worst, 0.5);
    const double f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : vals[N])) {
      pts[N] = contracted;
      vals[N] = f_contracted;
      continue;
    }
    for (std::size_t k = 1; k <= N; ++k) {
      pts[k] = along(pts[0], pts[k], 0.5);
      vals[k] = f(pts[k]);
    }
  }
  const auto best = static_cast<std::size_t>(
      std::distance(vals.begin(), std::min_element(vals.begin(), vals.end())));
  result.x = pts[best];
  result.value = vals[best];
  return result;
}

}  // namespace cohbound

#endif  // COHBOUND_NELDER_MEAD_HPP

// Copyright 2026 The catqec Authors
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

#include "catqec/minimize.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "catqec/errors.h"

namespace catqec {

Minimum1D golden_section_minimize(const std::function<double(double)>& f, double lo,
                                  double hi, double x_tolerance, int max_iterations) {
  if (!(lo <= hi)) throw DomainError("golden section needs lo <= hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  Minimum1D out;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;
  for (int i = 0; i < max_iterations && (hi - lo) > x_tolerance; ++i) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    ++out.evaluations;
  }
  if (fc <= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }
  return out;
}

Minimum1D grid_then_golden(const std::function<double(double)>& f, double lo,
                           double hi, int n, double x_tolerance) {
  if (n < 2) throw DomainError("grid needs at least two points");
  const double step = (hi - lo) / (n - 1);
  int best = 0;
  double best_value = f(lo);
  for (int i = 1; i < n; ++i) {
    const double v = f(lo + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = lo + std::max(best - 1, 0) * step;
  const double b = lo + std::min(best + 1, n - 1) * step;
  Minimum1D refined = golden_section_minimize(f, a, b, x_tolerance);
  refined.evaluations += n;
  if (refined.value > best_value) {
    refined.x = lo + best * step;
    refined.value = best_value;
  }
  return refined;
}

bool bisect_root(const std::function<double(double)>& f, double lo, double hi,
                 double& root, double x_tolerance, int max_iterations) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) {
    root = lo;
    return true;
  }
  if (fhi == 0.0) {
    root = hi;
    return true;
  }
  if (std::signbit(flo) == std::signbit(fhi)) return false;
  for (int i = 0; i < max_iterations && (hi - lo) > x_tolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      root = mid;
      return true;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  root = 0.5 * (lo + hi);
  return true;
}

MinimumND nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> start,
                               const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0) throw DomainError("Nelder-Mead needs at least one parameter");
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  MinimumND out;
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);
  out.evaluations = static_cast<int>(n + 1);

  std::vector<std::size_t> order(n + 1);
  auto point = [&](const std::vector<double>& centroid, const std::vector<double>& from,
                   double t) {
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (from[j] - centroid[j]);
    return p;
  };

  while (out.evaluations < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    const double scale = std::max(std::abs(values[best]), options.value_floor);
    if (values[worst] - values[best] <= options.value_tolerance * scale) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;
    }
    const auto reflected = point(centroid, simplex[worst], -1.0);
    const double fr = f(reflected);
    ++out.evaluations;
    if (fr < values[best]) {
      const auto expanded = point(centroid, simplex[worst], -2.0);
      const double fe = f(expanded);
      ++out.evaluations;
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const auto contracted = point(centroid, simplex[worst], outside ? -0.5 : 0.5);
    const double fc = f(contracted);
    ++out.evaluations;
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    // Shrink towards the best vertex.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = f(simplex[i]);
      ++out.evaluations;
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(it - values.begin());
  out.x = simplex[idx];
  out.value = *it;
  return out;
}

}  // namespace catqec

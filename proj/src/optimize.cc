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

#include "catqec/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "catqec/errors.h"
#include "catqec/minimize.h"

namespace catqec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double initial_guess(double x) {
  if (x < -0.25) {
    // Expansion around the branch point.
    const double p = std::sqrt(2.0 * (kE * x + 1.0));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  if (x < kE) return std::log1p(x);
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w(double x) {
  constexpr double kBranch = -1.0 / kE;
  if (std::isnan(x) || x < kBranch - 1e-15) {
    throw DomainError("lambert_w needs x >= -1/e, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x <= kBranch) return -1.0;
  if (std::isinf(x)) return x;
  double w = initial_guess(x);
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

double optimal_alpha_sq(int d, double gamma) {
  if (d <= 2) throw DomainError("closed-form optimal alpha needs d > 2");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("closed-form optimal alpha needs gamma in (0, 1)");
  }
  const double h = std::pow(std::sin(kPi / (2.0 * d)), 2);
  const double c = (4.0 * h - gamma) / (d - 2.0);
  if (c <= 0.0) {
    throw DomainError("gamma=" + std::to_string(gamma) + " is not below 4 sin^2(pi/2d)=" +
                      std::to_string(4.0 * h));
  }
  const double log_factor =
      (std::lgamma(d + 1.0) - std::log(2.0) + 4.0 * std::log(kPi) - 4.0 * std::log(d)) /
      (d - 2.0);
  const double arg = c / gamma * std::exp(log_factor);
  return lambert_w(arg) / c;
}

double min_valid_alpha_sq(int d) {
  return -std::log(kPauliMaxOverlap) / (1.0 - std::cos(kPi / d));
}

OptimalCode find_optimal_code(int d, double gamma, const SearchOptions& options) {
  if (d < 2) throw DomainError("find_optimal_code needs d >= 2");
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in (0, 1)");
  if (!(options.alpha_sq_step > 0.0)) throw DomainError("alpha_sq_step must be positive");

  OptimalCode out;
  out.d = d;
  out.gamma = gamma;
  double lo = 1.0;
  double hi = 20.0;
  if (d > 2) {
    out.alpha_o_analytic = optimal_alpha_sq(d, gamma);
    lo = std::max(1.0, 0.5 * *out.alpha_o_analytic);
    hi = 2.0 * *out.alpha_o_analytic;
  }
  if (options.restrict_to_valid) {
    const double floor = min_valid_alpha_sq(d);
    if (floor > lo) {
      const double width = hi - lo;
      lo = floor;
      hi = std::max(hi, lo + width);
    }
  }
  out.alpha_sq_lo = lo;
  out.alpha_sq_hi = hi;

  const int n = static_cast<int>(std::ceil((hi - lo) / options.alpha_sq_step - 1e-9)) + 1;
  const double step = (hi - lo) / std::max(n - 1, 1);
  auto evaluate = [&](double a2, int s) {
    const double alpha = std::sqrt(a2);
    const double eps_f = loss_weights(CatCodeParams(d, alpha, s), gamma).bit_flip();
    return eps_f + dephasing_probability(dephasing_terms(d, alpha, gamma), d, alpha, s);
  };

  int best_i = 0;
  int best_s = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double a2 = lo + i * step;
    const double alpha = std::sqrt(a2);
    const double eps_f = loss_weights(CatCodeParams(d, alpha, 0), gamma).bit_flip();
    const DephasingTerms terms = dephasing_terms(d, alpha, gamma);
    for (int s = 0; s < d; ++s) {
      const double v = eps_f + dephasing_probability(terms, d, alpha, s);
      if (v < best) {
        best = v;
        best_i = i;
        best_s = s;
      }
    }
  }
  const double a = lo + std::max(best_i - 1, 0) * step;
  const double b = lo + std::min(best_i + 1, n - 1) * step;
  const Minimum1D refined =
      golden_section_minimize([&](double a2) { return evaluate(a2, best_s); }, a, b, 1e-10);
  double a2 = lo + best_i * step;
  if (refined.value < best) {
    a2 = refined.x;
    best = refined.value;
  }
  out.alpha_sq_star = a2;
  out.alpha_star = std::sqrt(a2);
  out.s_star = best_s;
  out.objective = best;
  out.gamma_minus_at_opt = envelope_bounds(d, out.alpha_star, gamma).gamma_minus;
  if (options.certify) out.certificate = certify(out, options);
  return out;
}

double certify(const OptimalCode& code, const SearchOptions& options) {
  const CatCodeParams params(code.d, code.alpha_star, code.s_star);
  const LogicalChannel e = exact_logical_channel(params, code.gamma, options.exact);
  return diamond_distance_to_identity(e, options.diamond).value;
}

const DCandidate& DSelection::best() const {
  for (const DCandidate& c : table) {
    if (c.code.d == d_opt) return c;
  }
  throw DomainError("empty d selection");
}

DSelection optimal_d(const std::vector<int>& d_range,
                     const std::function<DCandidate(int)>& evaluate) {
  if (d_range.empty()) throw DomainError("d_range must be nonempty");
  DSelection out;
  double best = std::numeric_limits<double>::infinity();
  for (int d : d_range) {
    if (d < 2) throw DomainError("every d in d_range must be >= 2");
    out.table.push_back(evaluate(d));
    const double v = out.table.back().objective;
    if (v < best || (v == best && d < out.d_opt)) {
      best = v;
      out.d_opt = d;
    }
  }
  if (out.d_opt == 0) out.d_opt = d_range.front();
  return out;
}

DSelection optimal_d(double gamma, const std::vector<int>& d_range,
                     const std::function<double(const OptimalCode&)>& objective,
                     const SearchOptions& options) {
  return optimal_d(d_range, [&](int d) {
    DCandidate c;
    c.code = find_optimal_code(d, gamma, options);
    c.objective = objective ? objective(c.code) : c.code.objective;
    return c;
  });
}

}  // namespace catqec

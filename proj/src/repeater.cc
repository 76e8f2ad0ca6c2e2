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

#include "catqec/repeater.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "catqec/minimize.h"

namespace catqec {

double station_loss(double l0_tilde, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta must lie in (0, 1]");
  if (!(l0_tilde > 0.0)) throw DomainError("spacing must be positive");
  const double gamma = l0_tilde + 2.0 * (1.0 - eta);
  if (!(gamma < 1.0)) throw DomainError("station loss must be below 1");
  return gamma;
}

int station_count(double l_tot_km, double l0_tilde, double l_att_km) {
  if (!(l_tot_km > 0.0 && l0_tilde > 0.0 && l_att_km > 0.0)) {
    throw DomainError("distances and spacing must be positive");
  }
  const double n = std::round(l_tot_km / (l0_tilde * l_att_km));
  if (n > std::numeric_limits<int>::max()) throw DomainError("too many stations");
  return std::max(1, static_cast<int>(n));
}

LogicalChannel channel_power(const LogicalChannel& e, int n) {
  if (n < 0) throw DomainError("channel power needs n >= 0");
  Eigen::Matrix4d result = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d base = e.matrix();
  while (n > 0) {
    if (n & 1) result = base * result;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return LogicalChannel(result, e.provenance());
}

Qber qber(const LogicalChannel& e) {
  Qber q;
  q.q_z = 0.5 * (e.entry(1, 4) + e.entry(4, 1));
  q.q_x = 0.25 * ((e.entry(1, 1) + e.entry(1, 4) + e.entry(4, 1) + e.entry(4, 4)) -
                  (e.entry(2, 2) + e.entry(2, 3) + e.entry(3, 2) + e.entry(3, 3)));
  return q;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("entropy argument must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double skrpm(double q_z, double q_x) {
  return std::max(0.0, 1.0 - binary_entropy(q_z) - binary_entropy(q_x));
}

double SpacingOptimum::arc_length() const {
  return std::numbers::pi * code.alpha_star / d;
}

SpacingOptimum optimize_spacing(int d, double eta, const SpacingOptions& options) {
  if (!(options.l0_lo > 0.0 && options.l0_lo < options.l0_hi)) {
    throw DomainError("spacing bracket must satisfy 0 < lo < hi");
  }
  auto tau = [&](double l0) {
    try {
      return find_optimal_code(d, station_loss(l0, eta), options.search).objective / l0;
    } catch (const DomainError&) {
      // Past the closed-form limit for this d.
      return std::numeric_limits<double>::infinity();
    }
  };
  const Minimum1D m =
      grid_then_golden(tau, options.l0_lo, options.l0_hi, options.grid_points, 1e-9);
  if (!std::isfinite(m.value)) {
    throw DomainError("no admissible spacing for d=" + std::to_string(d));
  }
  SpacingOptimum out;
  out.d = d;
  out.eta = eta;
  out.l0_tilde = m.x;
  out.code = find_optimal_code(d, station_loss(m.x, eta), options.search);
  out.tau_minus = out.code.objective / m.x;
  return out;
}

std::vector<SpacingOptimum> spacing_table(double eta, const std::vector<int>& d_range,
                                          const SpacingOptions& options) {
  std::vector<SpacingOptimum> out;
  out.reserve(d_range.size());
  for (int d : d_range) out.push_back(optimize_spacing(d, eta, options));
  return out;
}

RepeaterPlan plan_for_distance(const SpacingOptimum& opt, double l_tot_km,
                               double l_att_km) {
  RepeaterPlan plan;
  plan.eta = opt.eta;
  plan.l0_tilde = opt.l0_tilde;
  plan.l_att_km = l_att_km;
  plan.l_tot_km = l_tot_km;
  plan.d = opt.d;
  plan.alpha = opt.code.alpha_star;
  plan.s = opt.code.s_star;
  plan.stations = station_count(l_tot_km, opt.l0_tilde, l_att_km);
  return plan;
}

RateResult evaluate_plan(const RepeaterPlan& plan, ChainMode mode,
                         const ExactChannelOptions& exact) {
  const CatCodeParams params(plan.d, plan.alpha, plan.s);
  const double gamma = plan.gamma();
  RateResult out;
  if (mode == ChainMode::kExact) {
    out.per_station = exact_logical_channel(params, gamma, exact);
  } else {
    const PauliApprox p = pauli_approx(params, gamma);
    out.per_station = pauli_channel(p.eps_f, p.eps_d);
  }
  out.composed = channel_power(out.per_station, plan.stations);
  const Qber q = qber(out.composed);
  out.q_z = q.q_z;
  out.q_x = q.q_x;
  const auto clamp01 = [](double p) { return std::clamp(p, 0.0, 1.0); };
  out.rate = skrpm(clamp01(q.q_z), clamp01(q.q_x));
  return out;
}

PlanResult select_plan(const std::vector<SpacingOptimum>& table, double l_tot_km,
                       double l_att_km, ChainMode mode, const ExactChannelOptions& exact) {
  if (table.empty()) throw DomainError("spacing table is empty");
  auto penalty = [](const RateResult& r) {
    return binary_entropy(std::clamp(r.q_z, 0.0, 1.0)) +
           binary_entropy(std::clamp(r.q_x, 0.0, 1.0));
  };
  PlanResult best;
  bool have = false;
  for (const SpacingOptimum& opt : table) {
    PlanResult c;
    c.plan = plan_for_distance(opt, l_tot_km, l_att_km);
    c.result = evaluate_plan(c.plan, mode, exact);
    const bool better =
        !have || c.result.rate > best.result.rate ||
        (c.result.rate == best.result.rate && penalty(c.result) < penalty(best.result));
    if (better) {
      best = std::move(c);
      have = true;
    }
  }
  if (best.result.rate <= 0.0) {
    throw NoPositiveRateError("no code gives a positive key rate at L_tot=" +
                                  std::to_string(l_tot_km) + " km",
                              best);
  }
  return best;
}

PlanResult optimize_plan(double eta, double l_tot_km, double l_att_km,
                         const std::vector<int>& d_range, const SpacingOptions& options,
                         ChainMode mode) {
  if (!(eta > 0.9 && eta <= 1.0)) throw DomainError("eta must lie in (0.9, 1]");
  if (!(l_tot_km >= l_att_km)) throw DomainError("L_tot must be at least L_att");
  if (d_range.empty()) throw DomainError("d_range must be nonempty");
  return select_plan(spacing_table(eta, d_range, options), l_tot_km, l_att_km, mode,
                     options.search.exact);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * (i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("spearman correlation needs two equal-length samples of size >= 2");
  }
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw DomainError("spearman correlation of a constant sample");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace catqec

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

#include <cmath>

#include "gtest/gtest.h"

using namespace catqec;

TEST(repeater, station_loss_and_count) {
  ASSERT_NEAR(station_loss(0.004, 0.995), 0.014, 1e-15);
  ASSERT_NEAR(station_loss(0.004, 1.0), 0.004, 1e-15);
  ASSERT_THROW(station_loss(0.0, 0.995), DomainError);
  ASSERT_THROW(station_loss(0.5, 0.7), DomainError);
  ASSERT_EQ(station_count(1000, 0.005, 20), 10000);
  ASSERT_EQ(station_count(1000, 0.0049, 20), 10204);
  ASSERT_EQ(station_count(1, 0.05, 20), 1);
}

TEST(repeater, channel_power_basics) {
  LogicalChannel e = analytic_channel(CatCodeParams(4, 3.0, 1), 0.005);
  ASSERT_EQ(channel_power(e, 0).matrix(), Eigen::Matrix4d::Identity());
  ASSERT_EQ(channel_power(e, 1).matrix(), e.matrix());
  ASSERT_EQ(channel_power(e, 5).provenance(), Provenance::kAnalytic);
  ASSERT_THROW(channel_power(e, -1), DomainError);
}

TEST(repeater, channel_power_semigroup) {
  LogicalChannel e = exact_logical_channel(CatCodeParams(3, 2.5, 2), 0.01);
  for (int a : {0, 1, 3, 7, 64}) {
    for (int b : {0, 2, 5, 33}) {
      const Eigen::Matrix4d lhs = channel_power(e, a + b).matrix();
      const Eigen::Matrix4d rhs = channel_power(e, a).matrix() * channel_power(e, b).matrix();
      ASSERT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << a << " " << b;
    }
  }
  Eigen::Matrix4d naive = Eigen::Matrix4d::Identity();
  for (int i = 0; i < 13; ++i) naive = naive * e.matrix();
  ASSERT_LE((channel_power(e, 13).matrix() - naive).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(repeater, pauli_composition) {
  const double f = 0.013, z = 0.004;
  LogicalChannel e2 = channel_power(pauli_channel(f, z), 2);
  ASSERT_NEAR(qber(e2).q_z, 2 * f * (1 - f), 1e-12);
  // Phase flips compose the same way.
  ASSERT_NEAR(qber(e2).q_x, 2 * z * (1 - z), 1e-12);
}

TEST(repeater, qber_of_pauli_channel) {
  Qber q = qber(pauli_channel(0.01, 0.002));
  ASSERT_NEAR(q.q_z, 0.01, 1e-16);
  ASSERT_NEAR(q.q_x, 0.002, 1e-16);
  Qber id = qber(LogicalChannel::identity());
  ASSERT_EQ(id.q_z, 0.0);
  ASSERT_EQ(id.q_x, 0.0);
}

TEST(repeater, qber_single_station_tracks_pauli) {
  OptimalCode c = find_optimal_code(4, 0.005);
  CatCodeParams p(4, c.alpha_star, c.s_star);
  Qber q = qber(exact_logical_channel(p, 0.005));
  PauliApprox a = pauli_approx(p, 0.005);
  ASSERT_NEAR(q.q_z / a.eps_f, 1.0, 0.1);
  ASSERT_NEAR(q.q_x / a.eps_d, 1.0, 0.1);
}

TEST(repeater, qber_grows_with_stations) {
  LogicalChannel e = pauli_channel(1e-3, 5e-4);
  double pz = -1, px = -1;
  for (int n = 1; n < 3000; n = n * 3 / 2 + 1) {
    Qber q = qber(channel_power(e, n));
    ASSERT_GE(q.q_z, pz);
    ASSERT_GE(q.q_x, px);
    pz = q.q_z;
    px = q.q_x;
  }
}

TEST(repeater, entropy_and_rate) {
  ASSERT_EQ(binary_entropy(0.0), 0.0);
  ASSERT_EQ(binary_entropy(1.0), 0.0);
  ASSERT_NEAR(binary_entropy(0.5), 1.0, 1e-16);
  ASSERT_EQ(skrpm(0, 0), 1.0);
  ASSERT_EQ(skrpm(0.5, 0), 0.0);
  const double h = -0.11 * std::log2(0.11) - 0.89 * std::log2(0.89);
  ASSERT_NEAR(skrpm(0.11, 0.11), std::max(0.0, 1 - 2 * h), 1e-15);
  ASSERT_NEAR(skrpm(0.05, 0.02), 1 - binary_entropy(0.05) - binary_entropy(0.02), 1e-16);
  ASSERT_THROW(binary_entropy(1.5), DomainError);
}

TEST(repeater, spacing_below_coupling_loss) {
  for (int d = 3; d <= 6; ++d) {
    SpacingOptimum o = optimize_spacing(d, 0.995);
    ASSERT_LT(o.l0_tilde, 0.01) << d;
    ASSERT_GT(o.l0_tilde, 1e-4);
    ASSERT_NEAR(o.tau_minus, o.code.objective / o.l0_tilde, 1e-18);
    // Local minimum in the spacing.
    auto tau = [&](double l0) {
      return find_optimal_code(d, station_loss(l0, 0.995)).objective / l0;
    };
    ASSERT_LE(o.tau_minus, tau(o.l0_tilde * 1.05) * (1 + 1e-12));
    ASSERT_LE(o.tau_minus, tau(o.l0_tilde * 0.95) * (1 + 1e-12));
  }
}

TEST(repeater, rate_positive_and_ordered) {
  std::vector<SpacingOptimum> table = spacing_table(0.995, {3, 4, 5, 6});
  double prev = 2.0;
  for (double l : {500.0, 1000.0, 2000.0}) {
    PlanResult r = select_plan(table, l);
    ASSERT_GT(r.result.rate, 0.0);
    ASSERT_LT(r.result.rate, prev);
    prev = r.result.rate;
    ASSERT_EQ(r.plan.stations, station_count(l, r.plan.l0_tilde, 20));
  }
}

TEST(repeater, pauli_chain_close_to_exact) {
  SpacingOptimum o = optimize_spacing(4, 0.995);
  RepeaterPlan plan = plan_for_distance(o, 1000);
  RateResult exact = evaluate_plan(plan, ChainMode::kExact);
  RateResult pauli = evaluate_plan(plan, ChainMode::kPauli);
  ASSERT_NEAR(pauli.q_z / exact.q_z, 1.0, 0.1);
  ASSERT_NEAR(pauli.rate, exact.rate, 0.05);
  ASSERT_EQ(exact.per_station.provenance(), Provenance::kExact);
  ASSERT_EQ(pauli.per_station.provenance(), Provenance::kPauli);
}

TEST(repeater, lossless_short_link) {
  PlanResult r = optimize_plan(1.0, 20, 20, {4});
  ASSERT_GT(r.result.rate, 0.99);
}

TEST(repeater, no_positive_rate) {
  std::vector<SpacingOptimum> table = spacing_table(0.95, {3});
  try {
    select_plan(table, 1e5);
    FAIL() << "expected NoPositiveRateError";
  } catch (const NoPositiveRateError& e) {
    ASSERT_EQ(e.best().result.rate, 0.0);
    ASSERT_GT(e.best().result.q_z + e.best().result.q_x, 0.0);
  }
}

TEST(repeater, optimize_plan_domain) {
  ASSERT_THROW(optimize_plan(0.8, 1000, 20, {4}), DomainError);
  ASSERT_THROW(optimize_plan(0.995, 10, 20, {4}), DomainError);
  ASSERT_THROW(optimize_plan(0.995, 1000, 20, {}), DomainError);
}

TEST(repeater, spearman) {
  ASSERT_NEAR(spearman_correlation({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0, 1e-15);
  ASSERT_NEAR(spearman_correlation({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-15);
  // Ties get average ranks: ranks x = (1, 2.5, 2.5, 4), y = (1, 2, 3, 4).
  ASSERT_NEAR(spearman_correlation({1, 2, 2, 3}, {1, 2, 3, 4}), 4.5 / std::sqrt(4.5 * 5.0), 1e-15);
  ASSERT_THROW(spearman_correlation({1}, {1}), DomainError);
}

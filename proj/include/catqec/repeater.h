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

// One-way repeater chain built from identical cat-code stations: spacing
// optimization, chain composition, bit error rates and key rate per mode.

#ifndef CATQEC_REPEATER_H_
#define CATQEC_REPEATER_H_

#include <vector>

#include "catqec/channel.h"
#include "catqec/errors.h"
#include "catqec/optimize.h"

namespace catqec {

inline constexpr double kDefaultAttenuationKm = 20.0;

// Loss per station for spacing l0_tilde (in attenuation lengths) and
// coupling efficiency eta: gamma = l0_tilde + 2 (1 - eta).
double station_loss(double l0_tilde, double eta);

// round(L_tot / (l0_tilde * L_att)), at least 1.
int station_count(double l_tot_km, double l0_tilde, double l_att_km);

struct RepeaterPlan {
  double eta = 1.0;
  double l0_tilde = 0.0;
  double l_att_km = kDefaultAttenuationKm;
  double l_tot_km = 0.0;
  int d = 0;
  double alpha = 0.0;
  int s = 0;
  int stations = 1;

  double gamma() const { return station_loss(l0_tilde, eta); }
};

enum class ChainMode { kExact, kPauli };

struct RateResult {
  double q_z = 0.0;
  double q_x = 0.0;
  double rate = 0.0;
  LogicalChannel per_station = LogicalChannel::identity();
  LogicalChannel composed = LogicalChannel::identity();
};

// E^n by repeated squaring. n = 0 gives the identity.
LogicalChannel channel_power(const LogicalChannel& e, int n);

struct Qber {
  double q_z = 0.0;
  double q_x = 0.0;
};

// Q_Z = (M14 + M41) / 2,
// Q_X = [(M11 + M14 + M41 + M44) - (M22 + M23 + M32 + M33)] / 4.
Qber qber(const LogicalChannel& e);

// H(p) = -p log2 p - (1-p) log2(1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);

// max(0, 1 - H(q_z) - H(q_x)).
double skrpm(double q_z, double q_x);

struct SpacingOptions {
  double l0_lo = 1e-4;
  double l0_hi = 0.05;
  int grid_points = 25;
  SearchOptions search;
};

// Station spacing minimizing tau = (eps_f + eps_d at the optimal code) / l0.
struct SpacingOptimum {
  int d = 0;
  double eta = 1.0;
  double l0_tilde = 0.0;
  double tau_minus = 0.0;
  OptimalCode code;

  double gamma() const { return station_loss(l0_tilde, eta); }
  // pi * alpha_star / d, the phase-space distance between neighbouring
  // coherent components.
  double arc_length() const;
};

SpacingOptimum optimize_spacing(int d, double eta, const SpacingOptions& options = {});

// optimize_spacing for each d in d_range.
std::vector<SpacingOptimum> spacing_table(double eta, const std::vector<int>& d_range,
                                          const SpacingOptions& options = {});

RepeaterPlan plan_for_distance(const SpacingOptimum& opt, double l_tot_km,
                               double l_att_km = kDefaultAttenuationKm);

RateResult evaluate_plan(const RepeaterPlan& plan, ChainMode mode = ChainMode::kExact,
                         const ExactChannelOptions& exact = {});

struct PlanResult {
  RepeaterPlan plan;
  RateResult result;
};

// Thrown by optimize_plan when no d gives a positive rate; carries the
// candidate with the lowest entropy penalty.
class NoPositiveRateError : public NumericalError {
 public:
  NoPositiveRateError(const std::string& what, PlanResult best)
      : NumericalError(what), best_(std::move(best)) {}
  const PlanResult& best() const { return best_; }

 private:
  PlanResult best_;
};

// Best plan for one distance from a precomputed spacing table: largest rate,
// then lowest H(Q_Z) + H(Q_X), then smallest d.
PlanResult select_plan(const std::vector<SpacingOptimum>& table, double l_tot_km,
                       double l_att_km = kDefaultAttenuationKm,
                       ChainMode mode = ChainMode::kExact,
                       const ExactChannelOptions& exact = {});

PlanResult optimize_plan(double eta, double l_tot_km, double l_att_km,
                         const std::vector<int>& d_range,
                         const SpacingOptions& options = {},
                         ChainMode mode = ChainMode::kExact);

// Spearman rank correlation with average ranks for ties.
double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace catqec

#endif  // CATQEC_REPEATER_H_

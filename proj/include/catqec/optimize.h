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

// Choice of cat-code parameters (alpha, s, d) that minimize the residual
// decoherence of the recovered channel.

#ifndef CATQEC_OPTIMIZE_H_
#define CATQEC_OPTIMIZE_H_

#include <functional>
#include <optional>
#include <vector>

#include "catqec/channel.h"
#include "catqec/metrics.h"

namespace catqec {

// Principal branch of the Lambert W function, x >= -1/e.
double lambert_w(double x);

// Closed-form amplitude squared that balances the two terms of gamma_minus.
// Needs d > 2 and gamma < 4 sin^2(pi/2d).
double optimal_alpha_sq(int d, double gamma);

// Smallest alpha^2 at which neighbour_overlap(d, alpha) <= kPauliMaxOverlap.
double min_valid_alpha_sq(int d);

struct SearchOptions {
  double alpha_sq_step = 0.01;
  // Keep alpha^2 >= min_valid_alpha_sq(d) so the Pauli objective stays in
  // its regime of validity.
  bool restrict_to_valid = true;
  // Recompute the exact diamond distance at the optimum.
  bool certify = false;
  ExactChannelOptions exact;
  DiamondOptions diamond;
};

struct OptimalCode {
  int d = 0;
  double gamma = 0.0;
  double alpha_star = 0.0;
  double alpha_sq_star = 0.0;
  int s_star = 0;
  // eps_f + eps_d at (alpha_star, s_star).
  double objective = 0.0;
  // Envelope gamma_minus at alpha_star.
  double gamma_minus_at_opt = 0.0;
  double alpha_sq_lo = 0.0;
  double alpha_sq_hi = 0.0;
  std::optional<double> alpha_o_analytic;  // alpha^2 from optimal_alpha_sq
  std::optional<double> certificate;       // exact diamond distance
};

// Scans alpha^2 over [max(1, a/2), 2a] (a = optimal_alpha_sq) or [1, 20] for
// d = 2, all s in [0, d), then golden-section refines around the best cell.
// Ties go to the smallest alpha, then the smallest s.
OptimalCode find_optimal_code(int d, double gamma, const SearchOptions& options = {});

// Exact diamond distance of the recovered channel at the optimum.
double certify(const OptimalCode& code, const SearchOptions& options = {});

struct DCandidate {
  OptimalCode code;
  double objective = 0.0;
};

struct DSelection {
  int d_opt = 0;
  std::vector<DCandidate> table;  // in d_range order

  const DCandidate& best() const;
};

// Evaluates every d in d_range and keeps the one with the smallest
// objective (ties to the smaller d).
DSelection optimal_d(const std::vector<int>& d_range,
                     const std::function<DCandidate(int)>& evaluate);

// Same with find_optimal_code at fixed gamma and a caller objective;
// the default objective is OptimalCode::objective.
DSelection optimal_d(double gamma, const std::vector<int>& d_range,
                     const std::function<double(const OptimalCode&)>& objective = {},
                     const SearchOptions& options = {});

}  // namespace catqec

#endif  // CATQEC_OPTIMIZE_H_

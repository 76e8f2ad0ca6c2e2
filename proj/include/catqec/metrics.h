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

// Distance of a logical channel from the identity and the closed-form
// decoherence envelopes.

#ifndef CATQEC_METRICS_H_
#define CATQEC_METRICS_H_

#include <Eigen/Dense>

#include "catqec/channel.h"

namespace catqec {

enum class DiamondMethod { kOracle, kPauliClosedForm };

// Half diamond distance and the system (x) ancilla input that attains it.
// Basis index of the input is 2 * system + ancilla.
struct DiamondResult {
  double value = 0.0;
  Eigen::Vector4cd argmax_state = Eigen::Vector4cd::Zero();
  DiamondMethod method = DiamondMethod::kOracle;
};

struct DiamondOptions {
  // Coarse grid points per search angle.
  int grid_points = 20;
  // Number of best grid points refined with Nelder-Mead.
  int refine_starts = 5;
  // Relative spread of simplex values at which refinement stops.
  double tolerance = 1e-10;
  // Largest accepted hermiticity_defect() of the input.
  double hermiticity_tolerance = 1e-9;
};

// max over pure |psi> on qubit (x) qubit of
//   1/2 || ((a - b) (x) id)(|psi><psi|) ||_1.
// Throws NonHermitianChannelError if either input fails the hermiticity
// check.
DiamondResult diamond_distance(const LogicalChannel& a, const LogicalChannel& b,
                               const DiamondOptions& options = {});

DiamondResult diamond_distance_to_identity(const LogicalChannel& e,
                                           const DiamondOptions& options = {});

// 1/2 || ((a - b) (x) id)(|psi><psi|) ||_1 for one normalized input.
double output_trace_distance(const LogicalChannel& a, const LogicalChannel& b,
                             const Eigen::Vector4cd& psi);

// For a channel of Pauli form, p_X + p_Y + p_Z = (1 + M14 - M22) / 2.
// Throws DomainError if e is not of Pauli form.
DiamondResult pauli_diamond_closed_form(const LogicalChannel& e);

struct EnvelopeBounds {
  double eps_f = 0.0;
  double gamma_minus = 0.0;
  double gamma_plus = 0.0;
  double gamma_bar = 0.0;
};

// Bit-flip probability plus the dephasing term at cos(theta) = +1 (lower),
// -1 (upper) and averaged over theta (gamma_bar). Needs d >= 2.
EnvelopeBounds envelope_bounds(int d, double alpha, double gamma);

struct SuppressionResult {
  double alpha_sq_subo = 0.0;  // dephasing term meets bit flip
  double alpha_sq_o = 0.0;     // numerical minimizer of gamma_minus
  double gamma_bar_subo = 0.0;
  double gamma_minus_o = 0.0;
  double ratio = 0.0;
};

// gamma_bar(alpha_subo) / gamma_minus(alpha_o). Needs d >= 3. Throws
// NoCrossingError if the two terms of gamma_bar do not cross, NumericalError
// if alpha_subo <= alpha_o.
SuppressionResult suppression_ratio(int d, double gamma);

}  // namespace catqec

#endif  // CATQEC_METRICS_H_

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

// The lossy bosonic channel followed by the ideal cat-code recovery, seen as
// a map on the logical qubit. Three constructions are provided: an exact one
// that works in the truncated Fock space, a closed-form one assembled from
// Poisson band weights and back-action coefficients, and a Pauli-channel
// approximation.

#ifndef CATQEC_CHANNEL_H_
#define CATQEC_CHANNEL_H_

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "catqec/fock.h"

namespace catqec {

enum class Provenance { kExact, kAnalytic, kPauli };

std::string_view to_string(Provenance p);

// Real 4x4 map on vectorized logical density matrices, ordered
// (rho00, rho01, rho10, rho11).
class LogicalChannel {
 public:
  LogicalChannel(const Eigen::Matrix4d& matrix, Provenance provenance);

  static LogicalChannel identity(Provenance provenance = Provenance::kAnalytic);

  const Eigen::Matrix4d& matrix() const { return matrix_; }
  Provenance provenance() const { return provenance_; }

  // 1-based access matching the usual E_ij labelling.
  double entry(int i, int j) const { return matrix_(i - 1, j - 1); }

  // max(|M11 + M41 - 1|, |M14 + M44 - 1|).
  double trace_defect() const;

  // Largest deviation from the symmetry that keeps Hermitian inputs
  // Hermitian (swap of the rho01/rho10 slots on both sides).
  double hermiticity_defect() const;

  // Largest |entry| among those the closed-form channel fixes to zero.
  double leakage() const;

 private:
  Eigen::Matrix4d matrix_;
  Provenance provenance_;
};

// Largest absolute entrywise difference.
double max_abs_deviation(const LogicalChannel& a, const LogicalChannel& b);

// Kraus operator for losing k excitations:
// <m-k|W_k|m> = sqrt(C(m,k)) gamma^{k/2} (1-gamma)^{(m-k)/2}.
FockOperator kraus_operator(int k, double gamma, int nmax);

// Poisson(Delta) mass folded into 2d bands: weights[r] = sum_m P(2md + r).
// Bands r < d are corrected; bands r >= d flip the logical basis.
struct LossWeights {
  std::vector<double> weights;
  double mean_loss = 0.0;

  int d() const { return static_cast<int>(weights.size()) / 2; }
  double correct(int k) const { return weights[k]; }
  double incorrect(int k) const { return weights[k + d()]; }
  double total() const;
  // sum_k incorrect(k), the logical bit-flip probability.
  double bit_flip() const;
};

LossWeights loss_weights(const CatCodeParams& params, double gamma);

// Back-action coefficients A, B, C, D over k in [0, d) with
// G(n, m) = sqrt(N_m(alpha') / N_n(alpha)).
class BackActionCoeffs {
 public:
  BackActionCoeffs(const CatCodeParams& params, double gamma);

  int d() const { return d_; }
  double alpha() const { return alpha_; }
  double damped_alpha() const { return damped_alpha_; }

  double G(int n, int m) const;

  const std::vector<double>& A() const { return a_; }
  const std::vector<double>& B() const { return b_; }
  const std::vector<double>& C() const { return c_; }
  const std::vector<double>& D() const { return d_coeffs_; }

 private:
  int d_;
  double alpha_;
  double damped_alpha_;
  std::vector<double> norm_before_;  // N_n(alpha), n in [0, 2d)
  std::vector<double> norm_after_;   // N_n(alpha')
  std::vector<double> a_, b_, c_, d_coeffs_;
};

BackActionCoeffs back_action(const CatCodeParams& params, double gamma);

// Stops the loss sum once the cumulative Poisson mass exceeds 1 - this.
inline constexpr double kLossMassTolerance = 1e-14;

struct ExactChannelOptions {
  int nmax = -1;  // < 0 selects default_nmax(alpha)
  double loss_mass_tolerance = kLossMassTolerance;
  double tail_tolerance = kDefaultTailTolerance;
};

// Loss channel applied in the truncated Fock space, followed by the recovery
// with Kraus operators
//   K_k = |C_a^s><C_a'^{s-k}| + |C_a^{d+s}><C_a'^{d+s-k}|,  k in [0, d),
// read back on the logical basis {C_a^s, C_a^{s+d}}.
LogicalChannel exact_logical_channel(const CatCodeParams& params, double gamma,
                                     const ExactChannelOptions& options = {});

// Two-block closed form from loss_weights and back_action.
LogicalChannel analytic_channel(const CatCodeParams& params, double gamma);

// Below these, bit-flip and coherent-state overlap count as small.
inline constexpr double kPauliMaxBitFlip = 1e-2;
inline constexpr double kPauliMaxOverlap = 0.1;

struct PauliApprox {
  double eps_f = 0.0;
  double eps_d = 0.0;
  double mu = 0.0;
  double psi = 0.0;
  double theta = 0.0;
  // |<alpha|alpha e^{i pi/d}>|, the neighbouring-component overlap.
  double overlap = 0.0;
  bool small_bit_flip = true;
  bool small_overlap = true;

  bool valid() const { return small_bit_flip && small_overlap && eps_d >= 0.0; }
  double total() const { return eps_f + eps_d; }
};

// Logical bit-flip and back-action dephasing probabilities of the Pauli
// channel (1 - f - z) rho + f X rho X + z Z rho Z that approximates the
// recovered channel.
PauliApprox pauli_approx(const CatCodeParams& params, double gamma);

// Pieces of the back-action dephasing shared by pauli_approx and the
// envelope bounds. With h = sin^2(pi/2d):
//   prefactor = exp(-4 alpha^2 h) / 2
//   excess    = exp(4 Delta h) - 1
//   amplitude = sqrt(1 - 2 e^mu cos(psi) + e^{2 mu})
//   phase     = atan2(e^mu sin(psi), 1 - e^mu cos(psi))
struct DephasingTerms {
  double prefactor = 0.0;
  double excess = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double mu = 0.0;
  double psi = 0.0;
};

DephasingTerms dephasing_terms(int d, double alpha, double gamma);

// theta for logical subspace s and the resulting dephasing probability
//   eps_d = prefactor * (excess - amplitude * cos(theta)).
double dephasing_angle(const DephasingTerms& terms, int d, double alpha, int s);
double dephasing_probability(const DephasingTerms& terms, int d, double alpha, int s);

// |<a|a e^{i pi/d}>| = exp(-a^2 (1 - cos(pi/d))).
double neighbour_overlap(int d, double alpha);

// Matrix of the Pauli channel with X probability eps_f and Z probability
// eps_d.
LogicalChannel pauli_channel(double eps_f, double eps_d);

}  // namespace catqec

#endif  // CATQEC_CHANNEL_H_

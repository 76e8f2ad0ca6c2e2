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

#include "catqec/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "catqec/errors.h"
#include "catqec/minimize.h"
#include "catqec/optimize.h"

namespace catqec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_hermiticity(const LogicalChannel& e, double tolerance) {
  const double defect = e.hermiticity_defect();
  if (defect > tolerance) {
    throw NonHermitianChannelError("channel does not preserve Hermiticity (defect " +
                                   std::to_string(defect) + ")");
  }
}

// Schmidt form of a two-qubit pure state up to a local unitary on the
// ancilla, which leaves the objective unchanged:
//   cos(t/2) |u0>|0> + sin(t/2) |u1>|1>,
// with {u0, u1} an orthonormal system basis fixed by (theta, phi).
Eigen::Vector4cd schmidt_state(double t, double theta, double phi) {
  const Complex phase = std::polar(1.0, phi);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex u0[2] = {c, phase * s};
  const Complex u1[2] = {-std::conj(phase) * s, c};
  const double w0 = std::cos(0.5 * t);
  const double w1 = std::sin(0.5 * t);
  Eigen::Vector4cd psi;
  for (int sys = 0; sys < 2; ++sys) {
    psi[2 * sys + 0] = w0 * u0[sys];
    psi[2 * sys + 1] = w1 * u1[sys];
  }
  return psi;
}

double half_trace_norm(const Eigen::Matrix4d& diff, const Eigen::Vector4cd& psi) {
  // out[(a,k),(b,l)] = sum_{ij} diff(2a+b, 2i+j) psi[(i,k)] conj(psi[(j,l)])
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double m = diff(2 * a + b, 2 * i + j);
          if (m == 0.0) continue;
          for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
              out(2 * a + k, 2 * b + l) += m * psi[2 * i + k] * std::conj(psi[2 * j + l]);
            }
          }
        }
      }
    }
  }
  const Eigen::Matrix4cd herm = 0.5 * (out + out.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herm, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace

double output_trace_distance(const LogicalChannel& a, const LogicalChannel& b,
                             const Eigen::Vector4cd& psi) {
  return half_trace_norm(a.matrix() - b.matrix(), psi);
}

DiamondResult diamond_distance(const LogicalChannel& a, const LogicalChannel& b,
                               const DiamondOptions& options) {
  check_hermiticity(a, options.hermiticity_tolerance);
  check_hermiticity(b, options.hermiticity_tolerance);
  if (options.grid_points < 2 || options.refine_starts < 1) {
    throw DomainError("diamond search needs grid_points >= 2 and refine_starts >= 1");
  }
  const Eigen::Matrix4d diff = a.matrix() - b.matrix();
  auto objective = [&](const std::vector<double>& x) {
    return -half_trace_norm(diff, schmidt_state(x[0], x[1], x[2]));
  };

  const int n = options.grid_points;
  struct Sample {
    double value;
    std::vector<double> x;
  };
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    const double t = kPi * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double theta = kPi * j / (n - 1);
      for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * kPi * k / n;
        std::vector<double> x = {t, theta, phi};
        samples.push_back({objective(x), std::move(x)});
      }
    }
  }
  const std::size_t starts =
      std::min<std::size_t>(static_cast<std::size_t>(options.refine_starts), samples.size());
  std::partial_sort(samples.begin(), samples.begin() + starts, samples.end(),
                    [](const Sample& l, const Sample& r) { return l.value < r.value; });

  NelderMeadOptions nm;
  nm.initial_step = kPi / (n - 1);
  nm.value_tolerance = options.tolerance;
  std::vector<double> best_x = samples.front().x;
  double best = samples.front().value;
  for (std::size_t i = 0; i < starts; ++i) {
    const MinimumND m = nelder_mead_minimize(objective, samples[i].x, nm);
    if (m.value < best) {
      best = m.value;
      best_x = m.x;
    }
  }
  DiamondResult out;
  out.value = std::clamp(-best, 0.0, 1.0);
  out.argmax_state = schmidt_state(best_x[0], best_x[1], best_x[2]);
  out.method = DiamondMethod::kOracle;
  return out;
}

DiamondResult diamond_distance_to_identity(const LogicalChannel& e,
                                           const DiamondOptions& options) {
  return diamond_distance(e, LogicalChannel::identity(e.provenance()), options);
}

DiamondResult pauli_diamond_closed_form(const LogicalChannel& e) {
  const Eigen::Matrix4d& m = e.matrix();
  constexpr double kTol = 1e-12;
  const bool pauli = e.leakage() <= kTol && std::abs(m(0, 0) - m(3, 3)) <= kTol &&
                     std::abs(m(0, 3) - m(3, 0)) <= kTol &&
                     std::abs(m(1, 1) - m(2, 2)) <= kTol &&
                     std::abs(m(1, 2) - m(2, 1)) <= kTol && e.trace_defect() <= kTol;
  if (!pauli) throw DomainError("channel is not of Pauli form");
  DiamondResult out;
  out.value = 0.5 * (1.0 + e.entry(1, 4) - e.entry(2, 2));
  // Maximally entangled input.
  out.argmax_state << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  out.method = DiamondMethod::kPauliClosedForm;
  return out;
}

EnvelopeBounds envelope_bounds(int d, double alpha, double gamma) {
  if (d < 2) throw DomainError("envelope bounds need d >= 2");
  const CatCodeParams params(d, alpha, 0);
  const DephasingTerms t = dephasing_terms(d, alpha, gamma);
  EnvelopeBounds out;
  out.eps_f = loss_weights(params, gamma).bit_flip();
  out.gamma_minus = out.eps_f + t.prefactor * (t.excess - t.amplitude);
  out.gamma_plus = out.eps_f + t.prefactor * (t.excess + t.amplitude);
  out.gamma_bar = out.eps_f + t.prefactor * t.excess;
  return out;
}

SuppressionResult suppression_ratio(int d, double gamma) {
  if (d < 3) throw DomainError("suppression ratio needs d >= 3");
  const double seed = optimal_alpha_sq(d, gamma);
  auto gamma_minus = [&](double a2) {
    return envelope_bounds(d, std::sqrt(a2), gamma).gamma_minus;
  };
  const double lo = std::max(1.0, 0.5 * seed);
  const double hi = 2.0 * seed;
  const int n = static_cast<int>(std::ceil((hi - lo) / 0.01)) + 1;
  const Minimum1D opt = grid_then_golden(gamma_minus, lo, hi, n);

  // log(dephasing term) - log(bit flip): positive at small alpha, negative
  // once the bit flip dominates.
  auto log_gap = [&](double a2) {
    const double alpha = std::sqrt(a2);
    const DephasingTerms t = dephasing_terms(d, alpha, gamma);
    const double eps_f = loss_weights(CatCodeParams(d, alpha, 0), gamma).bit_flip();
    return std::log(t.prefactor * t.excess) - std::log(eps_f);
  };
  double subo = 0.0;
  if (!bisect_root(log_gap, 1.0, 4.0 * seed + 50.0, subo)) {
    throw NoCrossingError("dephasing and bit-flip terms do not cross for d=" +
                          std::to_string(d) + ", gamma=" + std::to_string(gamma));
  }
  SuppressionResult out;
  out.alpha_sq_o = opt.x;
  out.gamma_minus_o = opt.value;
  out.alpha_sq_subo = subo;
  out.gamma_bar_subo = envelope_bounds(d, std::sqrt(subo), gamma).gamma_bar;
  out.ratio = out.gamma_bar_subo / out.gamma_minus_o;
  if (!(out.alpha_sq_subo > out.alpha_sq_o)) {
    throw NumericalError("expected alpha_subo > alpha_o, got " + std::to_string(subo) +
                         " <= " + std::to_string(opt.x));
  }
  return out;
}

}  // namespace catqec

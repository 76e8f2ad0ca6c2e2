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

#include "catqec/channel.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "catqec/errors.h"

namespace catqec {

namespace {

constexpr double kPi = std::numbers::pi;

// (row, col) positions that the two-block closed form may populate.
constexpr std::array<std::array<bool, 4>, 4> kBlockPattern = {{
    {true, false, false, true},
    {false, true, true, false},
    {false, true, true, false},
    {true, false, false, true},
}};

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("loss probability gamma must lie in [0, 1), got " +
                      std::to_string(gamma));
  }
}

double log_poisson(double mean, int j) {
  return -mean + j * std::log(mean) - std::lgamma(j + 1.0);
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kExact:
      return "exact";
    case Provenance::kAnalytic:
      return "analytic";
    case Provenance::kPauli:
      return "pauli";
  }
  return "unknown";
}

LogicalChannel::LogicalChannel(const Eigen::Matrix4d& matrix, Provenance provenance)
    : matrix_(matrix), provenance_(provenance) {}

LogicalChannel LogicalChannel::identity(Provenance provenance) {
  return LogicalChannel(Eigen::Matrix4d::Identity(), provenance);
}

double LogicalChannel::trace_defect() const {
  return std::max(std::abs(matrix_(0, 0) + matrix_(3, 0) - 1.0),
                  std::abs(matrix_(0, 3) + matrix_(3, 3) - 1.0));
}

double LogicalChannel::hermiticity_defect() const {
  constexpr std::array<int, 4> swap = {0, 2, 1, 3};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      worst = std::max(worst, std::abs(matrix_(i, j) - matrix_(swap[i], swap[j])));
    }
  }
  return worst;
}

double LogicalChannel::leakage() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!kBlockPattern[i][j]) worst = std::max(worst, std::abs(matrix_(i, j)));
    }
  }
  return worst;
}

double max_abs_deviation(const LogicalChannel& a, const LogicalChannel& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

FockOperator kraus_operator(int k, double gamma, int nmax) {
  check_gamma(gamma);
  if (k < 0) throw DomainError("loss count k must be non-negative");
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
  if (gamma == 0.0) {
    if (k == 0) w.setIdentity();
    return FockOperator(std::move(w));
  }
  const double log_gamma = std::log(gamma);
  const double log_keep = std::log1p(-gamma);
  for (int m = k; m <= nmax; ++m) {
    const double log_binom =
        std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
    w(m - k, m) = std::exp(0.5 * log_binom + 0.5 * k * log_gamma +
                           0.5 * (m - k) * log_keep);
  }
  return FockOperator(std::move(w));
}

double LossWeights::total() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double LossWeights::bit_flip() const {
  double sum = 0.0;
  for (int k = 0; k < d(); ++k) sum += incorrect(k);
  return sum;
}

LossWeights loss_weights(const CatCodeParams& params, double gamma) {
  check_gamma(gamma);
  const int two_d = 2 * params.d();
  LossWeights out;
  out.weights.assign(two_d, 0.0);
  out.mean_loss = params.mean_loss(gamma);
  const double mean = out.mean_loss;
  if (mean == 0.0) {
    out.weights[0] = 1.0;
    return out;
  }
  const int hard_cap = static_cast<int>(mean + 60.0 * std::sqrt(mean) + 400.0);
  for (int j = 0; j <= hard_cap; ++j) {
    const double term = std::exp(log_poisson(mean, j));
    out.weights[j % two_d] += term;
    if (j >= two_d && j > mean) {
      const double smallest = *std::min_element(out.weights.begin(), out.weights.end());
      if (term == 0.0 || term < 1e-18 * smallest) break;
    }
  }
  return out;
}

BackActionCoeffs::BackActionCoeffs(const CatCodeParams& params, double gamma)
    : d_(params.d()),
      alpha_(params.alpha()),
      damped_alpha_(params.damped_alpha(gamma)) {
  const int two_d = 2 * d_;
  norm_before_.resize(two_d);
  norm_after_.resize(two_d);
  for (int n = 0; n < two_d; ++n) {
    norm_before_[n] = normalization_factor(n, d_, alpha_);
    norm_after_[n] = normalization_factor(n, d_, damped_alpha_);
  }
  const int s = params.s();
  for (int n : {params.zero_index(), params.one_index()}) {
    if (norm_before_[n] <= kDegenerateNormalization) {
      throw DegenerateCatError("logical cat state C^" + std::to_string(n) +
                               " is degenerate at alpha=" + std::to_string(alpha_));
    }
  }
  for (int n = 0; n < two_d; ++n) {
    if (norm_after_[n] <= kDegenerateNormalization) {
      throw DegenerateCatError("damped cat state C^" + std::to_string(n) +
                               " is degenerate at alpha'=" +
                               std::to_string(damped_alpha_));
    }
  }
  a_.resize(d_);
  b_.resize(d_);
  c_.resize(d_);
  d_coeffs_.resize(d_);
  for (int k = 0; k < d_; ++k) {
    a_[k] = G(s, s - k);
    b_[k] = G(s, d_ + s - k);
    c_[k] = G(d_ + s, s - k);
    d_coeffs_[k] = G(d_ + s, d_ + s - k);
  }
}

double BackActionCoeffs::G(int n, int m) const {
  const int two_d = 2 * d_;
  return std::sqrt(norm_after_[positive_mod(m, two_d)] /
                   norm_before_[positive_mod(n, two_d)]);
}

BackActionCoeffs back_action(const CatCodeParams& params, double gamma) {
  return BackActionCoeffs(params, gamma);
}

LogicalChannel exact_logical_channel(const CatCodeParams& params, double gamma,
                                     const ExactChannelOptions& options) {
  check_gamma(gamma);
  const int d = params.d();
  const int two_d = 2 * d;
  const int nmax = options.nmax >= 0 ? options.nmax : default_nmax(params.alpha());
  const double alpha = params.alpha();
  const double damped = params.damped_alpha(gamma);

  const std::array<FockVector, 2> logical = {
      cat_state(params.zero_index(), d, alpha, nmax, options.tail_tolerance),
      cat_state(params.one_index(), d, alpha, nmax, options.tail_tolerance)};
  std::vector<FockVector> recovered;
  recovered.reserve(two_d);
  for (int n = 0; n < two_d; ++n) {
    recovered.push_back(cat_state(n, d, damped, nmax, options.tail_tolerance));
  }

  // Number of loss events to keep.
  const double mean = params.mean_loss(gamma);
  int last_k = 0;
  if (mean > 0.0) {
    double cumulative = 0.0;
    for (int k = 0;; ++k) {
      cumulative += std::exp(log_poisson(mean, k));
      last_k = k;
      if (cumulative > 1.0 - options.loss_mass_tolerance) break;
      if (k == nmax) {
        throw TruncationError("loss sum did not converge within nmax=" +
                              std::to_string(nmax));
      }
    }
  }

  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const int s = params.s();
  for (int k = 0; k <= last_k; ++k) {
    const FockOperator w = kraus_operator(k, gamma, nmax);
    const std::array<FockVector, 2> lost = {w.apply(logical[0]), w.apply(logical[1])};
    for (int j = 0; j < d; ++j) {
      const FockVector& bra0 = recovered[positive_mod(s - j, two_d)];
      const FockVector& bra1 = recovered[positive_mod(d + s - j, two_d)];
      // coeff[i][a]: amplitude of logical |a> after recovery branch j acting
      // on W_k |i>.
      Complex coeff[2][2];
      for (int i = 0; i < 2; ++i) {
        coeff[i][0] = bra0.inner(lost[i]);
        coeff[i][1] = bra1.inner(lost[i]);
      }
      for (int i = 0; i < 2; ++i) {
        for (int ip = 0; ip < 2; ++ip) {
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              m(2 * a + b, 2 * i + ip) += coeff[i][a] * std::conj(coeff[ip][b]);
            }
          }
        }
      }
    }
  }
  const double imag = m.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-10) {
    throw NumericalError("exact logical channel has imaginary residue " +
                         std::to_string(imag));
  }
  return LogicalChannel(m.real(), Provenance::kExact);
}

LogicalChannel analytic_channel(const CatCodeParams& params, double gamma) {
  const LossWeights t = loss_weights(params, gamma);
  const BackActionCoeffs g = back_action(params, gamma);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int k = 0; k < params.d(); ++k) {
    const double a = g.A()[k], b = g.B()[k], c = g.C()[k], dd = g.D()[k];
    const double keep = t.correct(k);
    const double flip = t.incorrect(k);
    m(0, 0) += keep * a * a;
    m(1, 1) += keep * a * dd;
    m(2, 2) += keep * a * dd;
    m(3, 3) += keep * dd * dd;
    m(0, 3) += flip * c * c;
    m(1, 2) += flip * b * c;
    m(2, 1) += flip * b * c;
    m(3, 0) += flip * b * b;
  }
  return LogicalChannel(m, Provenance::kAnalytic);
}

DephasingTerms dephasing_terms(int d, double alpha, double gamma) {
  check_gamma(gamma);
  if (d < 1) throw DomainError("d must be >= 1");
  DephasingTerms out;
  const double half = std::sin(kPi / (2.0 * d));
  const double h = half * half;
  const double full = std::sin(kPi / d);
  const double a2 = alpha * alpha;
  const double delta = gamma * a2;
  out.mu = 2.0 * delta * (2.0 * h - full * full);
  out.psi = delta * (2.0 * full - std::sin(2.0 * kPi / d));
  out.prefactor = 0.5 * std::exp(-4.0 * a2 * h);
  out.excess = std::expm1(4.0 * delta * h);
  const double e_mu = std::exp(out.mu);
  const double half_psi = std::sin(0.5 * out.psi);
  const double em1 = std::expm1(out.mu);
  // 1 - 2 e^mu cos(psi) + e^{2mu} = (e^mu - 1)^2 + 4 e^mu sin^2(psi/2)
  out.amplitude = std::sqrt(em1 * em1 + 4.0 * e_mu * half_psi * half_psi);
  // 1 - e^mu cos(psi) = -(e^mu - 1) + 2 e^mu sin^2(psi/2)
  out.phase = std::atan2(e_mu * std::sin(out.psi),
                         -em1 + 2.0 * e_mu * half_psi * half_psi);
  return out;
}

double neighbour_overlap(int d, double alpha) {
  return std::exp(-alpha * alpha * (1.0 - std::cos(kPi / d)));
}

double dephasing_angle(const DephasingTerms& terms, int d, double alpha, int s) {
  // The phase enters with a minus sign: cos(Phi) - e^mu cos(Phi + psi)
  // equals amplitude * cos(Phi - phase).
  return 2.0 * s * kPi / d - 2.0 * alpha * alpha * std::sin(kPi / d) - terms.phase;
}

double dephasing_probability(const DephasingTerms& terms, int d, double alpha, int s) {
  return terms.prefactor *
         (terms.excess - terms.amplitude * std::cos(dephasing_angle(terms, d, alpha, s)));
}

PauliApprox pauli_approx(const CatCodeParams& params, double gamma) {
  const LossWeights t = loss_weights(params, gamma);
  const int d = params.d();
  const DephasingTerms terms = dephasing_terms(d, params.alpha(), gamma);

  PauliApprox out;
  out.eps_f = t.bit_flip();
  out.mu = terms.mu;
  out.psi = terms.psi;
  out.theta = dephasing_angle(terms, d, params.alpha(), params.s());
  out.eps_d = dephasing_probability(terms, d, params.alpha(), params.s());
  out.overlap = neighbour_overlap(d, params.alpha());
  out.small_bit_flip = out.eps_f <= kPauliMaxBitFlip;
  out.small_overlap = out.overlap <= kPauliMaxOverlap;
  return out;
}

LogicalChannel pauli_channel(double eps_f, double eps_d) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = m(3, 3) = 1.0 - eps_f;
  m(0, 3) = m(3, 0) = eps_f;
  m(1, 1) = m(2, 2) = 1.0 - eps_f - 2.0 * eps_d;
  m(1, 2) = m(2, 1) = eps_f;
  return LogicalChannel(m, Provenance::kPauli);
}

}  // namespace catqec

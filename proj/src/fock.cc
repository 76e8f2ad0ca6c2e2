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

#include "catqec/fock.h"

#include <cmath>
#include <numbers>
#include <string>

#include "catqec/errors.h"

namespace catqec {

namespace {

// log of e^{-a^2} a^{2m} / m!, the Poisson weight of |m> in a coherent state
// of real amplitude a > 0.
double log_poisson_weight(double a, int m) {
  return -a * a + 2.0 * m * std::log(a) - std::lgamma(m + 1.0);
}

// Poisson mass of {m >= first, m = first (mod stride)} for amplitude a > 0,
// summed past the cutoff until the terms stop mattering.
double poisson_tail(double a, int first, int stride) {
  double total = 0.0;
  const double mean = a * a;
  for (int m = std::max(first, 0);; m += stride) {
    const double term = std::exp(log_poisson_weight(a, m));
    total += term;
    if (m > mean && term < 1e-30) break;
  }
  return total;
}

}  // namespace

FockVector::FockVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) {
    throw DomainError("FockVector needs at least one basis state");
  }
}

double FockVector::tail_mass() const {
  const int n = static_cast<int>(amplitudes_.size());
  const int width = std::min(kTailWidth, n);
  return amplitudes_.tail(width).squaredNorm();
}

Complex FockVector::inner(const FockVector& other) const {
  if (other.nmax() != nmax()) {
    throw DomainError("inner product of vectors with different cutoffs");
  }
  return amplitudes_.dot(other.amplitudes_);
}

FockOperator::FockOperator(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DomainError("FockOperator must be square and non-empty");
  }
}

FockVector FockOperator::apply(const FockVector& v) const {
  if (v.nmax() != nmax()) {
    throw DomainError("operator and vector have different cutoffs");
  }
  return FockVector(entries_ * v.amplitudes());
}

double FockOperator::expectation(const FockVector& v) const {
  return v.amplitudes().dot(entries_ * v.amplitudes()).real();
}

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs) {
  if (lhs.nmax() != rhs.nmax()) {
    throw DomainError("operator product with different cutoffs");
  }
  return FockOperator(lhs.entries() * rhs.entries());
}

CatCodeParams::CatCodeParams(int d, double alpha, int s)
    : d_(d), alpha_(alpha), s_(s) {
  if (d < 1) throw DomainError("cat code needs d >= 1, got " + std::to_string(d));
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("cat code needs alpha > 0, got " + std::to_string(alpha));
  }
  if (s < 0 || s >= d) {
    throw DomainError("logical subspace s must lie in [0, d-1], got s=" +
                      std::to_string(s));
  }
}

int CatCodeParams::wrap(int n) const { return positive_mod(n, 2 * d_); }

Complex CatCodeParams::omega() const {
  return std::polar(1.0, std::numbers::pi / d_);
}

double CatCodeParams::damped_alpha(double gamma) const {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("loss probability gamma must lie in [0, 1)");
  }
  return std::sqrt(1.0 - gamma) * alpha_;
}

double CatCodeParams::mean_loss(double gamma) const {
  return gamma * alpha_ * alpha_;
}

int positive_mod(int n, int modulus) {
  const int r = n % modulus;
  return r < 0 ? r + modulus : r;
}

int default_nmax(double alpha) {
  const int rule = static_cast<int>(std::ceil(alpha * alpha + 8.0 * alpha + 20.0));
  return std::max(rule, 32);
}

FockVector coherent_state(Complex beta, int nmax, double tail_tolerance) {
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(nmax + 1);
  const double r = std::abs(beta);
  if (r == 0.0) {
    amps[0] = 1.0;
    return FockVector(std::move(amps));
  }
  const double phase = std::arg(beta);
  for (int m = 0; m <= nmax; ++m) {
    const double log_mag = 0.5 * log_poisson_weight(r, m);
    amps[m] = std::polar(std::exp(log_mag), m * phase);
  }
  const double tail = poisson_tail(r, nmax + 1 - kTailWidth, 1);
  if (tail > tail_tolerance) {
    throw TruncationError("coherent state |beta|=" + std::to_string(r) +
                          " is not resolved by nmax=" + std::to_string(nmax));
  }
  return FockVector(std::move(amps));
}

double normalization_factor(int n, int d, double a) {
  if (d < 1) throw DomainError("normalization factor needs d >= 1");
  if (a < 0.0) throw DomainError("normalization factor needs a >= 0");
  const int two_d = 2 * d;
  const int nn = positive_mod(n, two_d);
  if (a == 0.0) return nn == 0 ? static_cast<double>(two_d) : 0.0;
  const double a2 = a * a;
  Complex sum = 0.0;
  for (int k = 0; k < two_d; ++k) {
    const double angle = std::numbers::pi * k / d;
    const Complex w = std::polar(1.0, angle);
    // w^{-kn} e^{(w^k - 1) a^2}
    const Complex exponent((w.real() - 1.0) * a2, w.imag() * a2 - angle * nn);
    sum += std::exp(exponent);
  }
  if (std::abs(sum.imag()) > 1e-12) {
    throw NumericalError("normalization factor has imaginary residue " +
                         std::to_string(sum.imag()));
  }
  return sum.real();
}

FockVector cat_state(int n, int d, double a, int nmax, double tail_tolerance) {
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  const int two_d = 2 * d;
  const int nn = positive_mod(n, two_d);
  const double norm_factor = normalization_factor(nn, d, a);
  if (norm_factor <= kDegenerateNormalization) {
    throw DegenerateCatError("cat state C^" + std::to_string(nn) + " with d=" +
                             std::to_string(d) + " is degenerate at amplitude " +
                             std::to_string(a));
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(nmax + 1);
  if (a == 0.0) {
    amps[0] = 1.0;
    return FockVector(std::move(amps));
  }
  for (int m = nn; m <= nmax; m += two_d) {
    amps[m] = std::exp(0.5 * log_poisson_weight(a, m));
  }
  const double kept = amps.squaredNorm();
  if (kept == 0.0) {
    throw TruncationError("cutoff nmax=" + std::to_string(nmax) +
                          " holds no support of cat state C^" + std::to_string(nn));
  }
  // Residue-class mass from nmax-5 onward, including what the cutoff drops.
  int first = nmax + 1 - kTailWidth;
  first += positive_mod(nn - first, two_d);
  const double tail = poisson_tail(a, first, two_d);
  const double dropped = poisson_tail(a, nmax + 1 + positive_mod(nn - nmax - 1, two_d), two_d);
  if (tail / (kept + dropped) > tail_tolerance) {
    throw TruncationError("cat state amplitude " + std::to_string(a) +
                          " is not resolved by nmax=" + std::to_string(nmax));
  }
  amps /= std::sqrt(kept);
  return FockVector(std::move(amps));
}

FockOperator annihilation(int nmax) {
  if (nmax < 1) throw DomainError("annihilation operator needs nmax >= 1");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
  for (int m = 1; m <= nmax; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  return FockOperator(std::move(a));
}

FockOperator number_operator(int nmax) {
  if (nmax < 1) throw DomainError("number operator needs nmax >= 1");
  Eigen::VectorXcd diag(nmax + 1);
  for (int m = 0; m <= nmax; ++m) diag[m] = static_cast<double>(m);
  return FockOperator(diag.asDiagonal().toDenseMatrix());
}

double mean_excitation(int n, int d, double a) {
  const double norm_n = normalization_factor(n, d, a);
  if (norm_n <= kDegenerateNormalization) {
    throw DegenerateCatError("mean excitation undefined: N_" + std::to_string(n) +
                             " is degenerate at amplitude " + std::to_string(a));
  }
  return a * a * normalization_factor(n - 1, d, a) / norm_n;
}

}  // namespace catqec

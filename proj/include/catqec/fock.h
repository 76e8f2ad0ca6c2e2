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

// Truncated Fock-space states and operators for a single bosonic mode, and
// the cat-code basis built on top of them.

#ifndef CATQEC_FOCK_H_
#define CATQEC_FOCK_H_

#include <complex>

#include <Eigen/Dense>

namespace catqec {

using Complex = std::complex<double>;

// Largest tail mass accepted for a state called well-truncated.
inline constexpr double kDefaultTailTolerance = 1e-12;

// Number of top basis states that make up the "tail" of a truncated vector.
inline constexpr int kTailWidth = 5;

// Normalization factors at or below this value mark a cat state as
// numerically undefined.
inline constexpr double kDegenerateNormalization = 1e-14;

// State vector over the number basis |0>, ..., |nmax>.
class FockVector {
 public:
  explicit FockVector(Eigen::VectorXcd amplitudes);

  int nmax() const { return static_cast<int>(amplitudes_.size()) - 1; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](int m) const { return amplitudes_[m]; }

  double norm_squared() const { return amplitudes_.squaredNorm(); }

  // Probability weight on the top kTailWidth number states.
  double tail_mass() const;

  // <this|other>.
  Complex inner(const FockVector& other) const;

 private:
  Eigen::VectorXcd amplitudes_;
};

// Operator on the same truncated number basis, (nmax+1) x (nmax+1).
class FockOperator {
 public:
  explicit FockOperator(Eigen::MatrixXcd entries);

  int nmax() const { return static_cast<int>(entries_.rows()) - 1; }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  FockVector apply(const FockVector& v) const;
  FockOperator adjoint() const { return FockOperator(entries_.adjoint()); }

  // <v|O|v>, real part only (callers use Hermitian operators).
  double expectation(const FockVector& v) const;

 private:
  Eigen::MatrixXcd entries_;
};

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs);

// The code triple: 2d coherent components of amplitude alpha on a circle,
// logical pair {|C^s>, |C^{s+d}>}.
class CatCodeParams {
 public:
  // Throws DomainError unless d >= 1, alpha > 0 and 0 <= s < d.
  CatCodeParams(int d, double alpha, int s);

  int d() const { return d_; }
  double alpha() const { return alpha_; }
  int s() const { return s_; }

  // Cat index of the logical |0> and |1>.
  int zero_index() const { return s_; }
  int one_index() const { return s_ + d_; }

  // n reduced into [0, 2d).
  int wrap(int n) const;

  // exp(i pi / d).
  Complex omega() const;

  // Amplitude after loss: sqrt(1 - gamma) * alpha.
  double damped_alpha(double gamma) const;

  // Mean number of lost excitations, gamma * alpha^2.
  double mean_loss(double gamma) const;

 private:
  int d_;
  double alpha_;
  int s_;
};

// n reduced into [0, modulus) for a positive modulus.
int positive_mod(int n, int modulus);

// Cutoff that keeps the Poisson tail of a coherent state of amplitude alpha
// below 1e-12: max(ceil(alpha^2 + 8 alpha + 20), 32).
int default_nmax(double alpha);

// e^{-|beta|^2/2} sum_m beta^m / sqrt(m!) |m>. Throws TruncationError when
// either the tail mass or the mass beyond nmax exceeds tail_tolerance.
FockVector coherent_state(Complex beta, int nmax,
                          double tail_tolerance = kDefaultTailTolerance);

// N_n(a) = sum_{k=0}^{2d-1} w^{-kn} exp((w^k - 1) a^2), w = exp(i pi / d).
// The sum is real; an imaginary residue above 1e-12 raises NumericalError.
double normalization_factor(int n, int d, double a);

// Cat basis state |C_a^n> built directly in the number basis: support on
// m = n (mod 2d) only. Throws DegenerateCatError when N_n(a) <= 1e-14 and
// TruncationError when the cutoff clips more than tail_tolerance.
FockVector cat_state(int n, int d, double a, int nmax,
                     double tail_tolerance = kDefaultTailTolerance);

// Boson annihilation operator a, <m-1|a|m> = sqrt(m).
FockOperator annihilation(int nmax);

// a^dagger a, diagonal with entries m.
FockOperator number_operator(int nmax);

// <C_a^n| a^dagger a |C_a^n> = a^2 N_{n-1}(a) / N_n(a).
double mean_excitation(int n, int d, double a);

}  // namespace catqec

#endif  // CATQEC_FOCK_H_

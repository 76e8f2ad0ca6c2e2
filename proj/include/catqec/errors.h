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

#ifndef CATQEC_ERRORS_H_
#define CATQEC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace catqec {

// Input outside the mathematical domain of an operation. The CLI maps these
// to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A cat state whose normalization factor is too small to be represented.
class DegenerateCatError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A logical channel matrix that does not map Hermitian inputs to Hermitian
// outputs.
class NonHermitianChannelError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Failure of a numerical procedure on valid input (truncation, convergence,
// bracketing). The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoCrossingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace catqec

#endif  // CATQEC_ERRORS_H_

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

// Small derivative-free minimizers used by the optimizers and the diamond
// distance search. All of them are deterministic.

#ifndef CATQEC_MINIMIZE_H_
#define CATQEC_MINIMIZE_H_

#include <functional>
#include <vector>

namespace catqec {

struct Minimum1D {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

// Golden-section search for a minimum of f on [lo, hi]. Stops once the
// bracket is narrower than x_tolerance.
Minimum1D golden_section_minimize(const std::function<double(double)>& f, double lo,
                                  double hi, double x_tolerance = 1e-10,
                                  int max_iterations = 200);

// Evaluates f on n evenly spaced points of [lo, hi] (both ends included),
// then golden-section refines inside the cells next to the best point.
Minimum1D grid_then_golden(const std::function<double(double)>& f, double lo,
                           double hi, int n, double x_tolerance = 1e-10);

// Bisection root of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
// Returns false when they do not.
bool bisect_root(const std::function<double(double)>& f, double lo, double hi,
                 double& root, double x_tolerance = 1e-12, int max_iterations = 200);

struct NelderMeadOptions {
  double initial_step = 0.1;
  // Converged once the spread of simplex values drops below
  // value_tolerance * max(|best|, value_floor).
  double value_tolerance = 1e-10;
  double value_floor = 1e-12;
  int max_evaluations = 4000;
};

struct MinimumND {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

MinimumND nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> start,
                               const NelderMeadOptions& options = {});

}  // namespace catqec

#endif  // CATQEC_MINIMIZE_H_

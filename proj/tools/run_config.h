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

// Parameters shared by the catqec subcommands and their flat key=value file
// format:
//
//   # comment
//   d = 4
//   gamma = 0.005
//   d_range = 2,3,4,5
//
// Unknown keys and malformed values are rejected with DomainError.

#ifndef CATQEC_TOOLS_RUN_CONFIG_H_
#define CATQEC_TOOLS_RUN_CONFIG_H_

#include <optional>
#include <string>
#include <vector>

namespace catqec {

struct RunConfig {
  int d = 4;
  double gamma = 0.005;
  double alpha = 3.0;
  std::optional<int> s;  // unset means every s in [0, d)
  std::string mode = "exact";  // exact | analytic | pauli | both

  double alpha_sq_min = 2.0;
  double alpha_sq_max = 12.0;
  double alpha_sq_step = 0.1;

  double eta = 0.995;
  std::vector<double> l_tot_km = {1000.0};
  double l_att_km = 20.0;
  std::vector<int> d_range = {2, 3, 4, 5, 6, 7, 8, 9};
  std::string chain = "exact";  // exact | pauli

  std::string output;        // empty writes to stdout
  std::string per_d_output;  // repeater per-d table
  std::string format;        // empty picks the command default

  int nmax = -1;
  bool certify = true;
  bool restrict_valid = true;

  double diamond_tolerance = 1e-10;
  int diamond_grid = 20;
  double tail_tolerance = 1e-12;
  double loss_mass_tolerance = 1e-14;
};

// Defaults, then environment overrides (CATQEC_DIAMOND_TOL, CATQEC_TAIL_TOL,
// CATQEC_LOSS_MASS_TOL).
RunConfig default_config();

void apply_environment(RunConfig& config);

// Applies the keys present in text on top of config.
void parse_config_text(const std::string& text, RunConfig& config);

void load_config_file(const std::string& path, RunConfig& config);

// Every key, one per line, in a form parse_config_text reads back exactly.
std::string format_config(const RunConfig& config);

// "2,3,4" or "2..9" (inclusive), or a mix such as "2..4,8".
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace catqec

#endif  // CATQEC_TOOLS_RUN_CONFIG_H_

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

// Subcommands of the catqec tool. Each writes its report to the given stream
// and throws the library errors unchanged; run_cli maps them to exit codes.

#ifndef CATQEC_TOOLS_CLI_H_
#define CATQEC_TOOLS_CLI_H_

#include <ostream>
#include <string>

#include "run_config.h"

namespace catqec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNumerical = 3;

// printf("%.12g").
std::string format_number(double x);

void cmd_channel(const RunConfig& config, std::ostream& out);
void cmd_sweep_alpha(const RunConfig& config, std::ostream& out);
void cmd_optimize(const RunConfig& config, std::ostream& out);
void cmd_bounds(const RunConfig& config, std::ostream& out);
// per_d receives the d,tau_minus,arc_length table; may be null.
void cmd_repeater(const RunConfig& config, std::ostream& out, std::ostream* per_d);
void cmd_suppression(const RunConfig& config, std::ostream& out);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catqec

#endif  // CATQEC_TOOLS_CLI_H_

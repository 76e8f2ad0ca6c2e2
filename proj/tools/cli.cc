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

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "catqec/channel.h"
#include "catqec/errors.h"
#include "catqec/metrics.h"
#include "catqec/optimize.h"
#include "catqec/repeater.h"
#include "json.hpp"

namespace catqec {

namespace {

using nlohmann::ordered_json;

constexpr const char* kHelpFooter =
    "Environment overrides for default tolerances (a config file or flag wins):\n"
    "  CATQEC_DIAMOND_TOL    relative stopping spread of the diamond refinement\n"
    "  CATQEC_TAIL_TOL       largest accepted Fock tail mass\n"
    "  CATQEC_LOSS_MASS_TOL  Poisson mass left out of the loss sum\n"
    "Exit codes: 0 success, 2 domain error, 3 numerical failure.";

// Value rounded to 12 significant digits, as written to JSON.
double rounded(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

ordered_json matrix_json(const LogicalChannel& e) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 4; ++j) row.push_back(rounded(e.matrix()(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ExactChannelOptions exact_options(const RunConfig& c) {
  ExactChannelOptions o;
  o.nmax = c.nmax;
  o.tail_tolerance = c.tail_tolerance;
  o.loss_mass_tolerance = c.loss_mass_tolerance;
  return o;
}

DiamondOptions diamond_options(const RunConfig& c) {
  DiamondOptions o;
  o.grid_points = c.diamond_grid;
  o.tolerance = c.diamond_tolerance;
  return o;
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.restrict_to_valid = c.restrict_valid;
  o.certify = c.certify;
  o.exact = exact_options(c);
  o.diamond = diamond_options(c);
  return o;
}

std::vector<double> alpha_sq_grid(const RunConfig& c) {
  if (!(c.alpha_sq_step > 0.0) || !(c.alpha_sq_min > 0.0) ||
      !(c.alpha_sq_max >= c.alpha_sq_min)) {
    throw DomainError("alpha^2 range needs 0 < min <= max and step > 0");
  }
  const int n = static_cast<int>(std::floor((c.alpha_sq_max - c.alpha_sq_min) / c.alpha_sq_step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = c.alpha_sq_min + i * c.alpha_sq_step;
  return out;
}

std::vector<int> s_values(const RunConfig& c) {
  if (c.s) return {*c.s};
  std::vector<int> out(std::max(c.d, 0));
  for (int s = 0; s < c.d; ++s) out[s] = s;
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void cmd_channel(const RunConfig& c, std::ostream& out) {
  const CatCodeParams params(c.d, c.alpha, c.s.value_or(0));
  if (c.mode != "exact" && c.mode != "analytic" && c.mode != "pauli" && c.mode != "both") {
    throw DomainError("mode must be exact, analytic, pauli or both");
  }
  const LogicalChannel exact = exact_logical_channel(params, c.gamma, exact_options(c));
  const LogicalChannel analytic = analytic_channel(params, c.gamma);
  const PauliApprox p = pauli_approx(params, c.gamma);

  ordered_json j;
  j["d"] = c.d;
  j["gamma"] = rounded(c.gamma);
  j["alpha"] = rounded(c.alpha);
  j["s"] = params.s();
  j["mode"] = c.mode;
  if (c.mode == "analytic") {
    j["matrix"] = matrix_json(analytic);
  } else if (c.mode == "pauli") {
    j["matrix"] = matrix_json(pauli_channel(p.eps_f, p.eps_d));
  } else {
    j["matrix"] = matrix_json(exact);
  }
  if (c.mode == "both") j["analytic_matrix"] = matrix_json(analytic);
  j["eps_f"] = rounded(p.eps_f);
  j["eps_d"] = rounded(p.eps_d);
  j["mu"] = rounded(p.mu);
  j["psi"] = rounded(p.psi);
  j["theta"] = rounded(p.theta);
  j["overlap"] = rounded(p.overlap);
  j["small_bit_flip"] = p.small_bit_flip;
  j["small_overlap"] = p.small_overlap;
  j["valid"] = p.valid();
  j["max_dev"] = rounded(max_abs_deviation(exact, analytic));
  j["leakage"] = rounded(exact.leakage());
  j["trace_defect"] = rounded(exact.trace_defect());
  out << j.dump(2) << '\n';
}

void cmd_sweep_alpha(const RunConfig& c, std::ostream& out) {
  const std::vector<double> grid = alpha_sq_grid(c);
  const std::vector<int> ss = s_values(c);
  write_row(out, {"alpha_sq", "s", "gamma_exact_diamond", "eps_f", "eps_d", "gamma_minus",
                  "gamma_plus", "gamma_bar"});
  for (double a2 : grid) {
    const double alpha = std::sqrt(a2);
    const EnvelopeBounds env = envelope_bounds(c.d, alpha, c.gamma);
    for (int s : ss) {
      const CatCodeParams params(c.d, alpha, s);
      const LogicalChannel e = exact_logical_channel(params, c.gamma, exact_options(c));
      const double diamond = diamond_distance_to_identity(e, diamond_options(c)).value;
      const PauliApprox p = pauli_approx(params, c.gamma);
      write_row(out, {format_number(a2), std::to_string(s), format_number(diamond),
                      format_number(p.eps_f), format_number(p.eps_d),
                      format_number(env.gamma_minus), format_number(env.gamma_plus),
                      format_number(env.gamma_bar)});
    }
  }
}

void cmd_optimize(const RunConfig& c, std::ostream& out) {
  const OptimalCode code = find_optimal_code(c.d, c.gamma, search_options(c));
  ordered_json j;
  j["d"] = code.d;
  j["gamma"] = rounded(code.gamma);
  j["alpha_o_analytic"] =
      code.alpha_o_analytic ? ordered_json(rounded(*code.alpha_o_analytic)) : ordered_json();
  j["alpha_star"] = rounded(code.alpha_star);
  j["alpha_sq_star"] = rounded(code.alpha_sq_star);
  j["s_star"] = code.s_star;
  j["objective"] = rounded(code.objective);
  j["gamma_minus_at_opt"] = rounded(code.gamma_minus_at_opt);
  j["certificate"] = code.certificate ? ordered_json(rounded(*code.certificate)) : ordered_json();
  j["alpha_sq_lo"] = rounded(code.alpha_sq_lo);
  j["alpha_sq_hi"] = rounded(code.alpha_sq_hi);
  out << j.dump(2) << '\n';
}

void cmd_bounds(const RunConfig& c, std::ostream& out) {
  write_row(out, {"alpha_sq", "eps_f", "gamma_minus", "gamma_plus", "gamma_bar"});
  for (double a2 : alpha_sq_grid(c)) {
    const EnvelopeBounds env = envelope_bounds(c.d, std::sqrt(a2), c.gamma);
    write_row(out, {format_number(a2), format_number(env.eps_f),
                    format_number(env.gamma_minus), format_number(env.gamma_plus),
                    format_number(env.gamma_bar)});
  }
}

void cmd_repeater(const RunConfig& c, std::ostream& out, std::ostream* per_d) {
  if (!(c.eta > 0.9 && c.eta <= 1.0)) throw DomainError("eta must lie in (0.9, 1]");
  if (c.chain != "exact" && c.chain != "pauli") throw DomainError("chain must be exact or pauli");
  for (double l : c.l_tot_km) {
    if (!(l >= c.l_att_km)) throw DomainError("every L_tot_km must be at least L_att_km");
  }
  SpacingOptions spacing;
  spacing.search = search_options(c);
  spacing.search.certify = false;
  const std::vector<SpacingOptimum> table = spacing_table(c.eta, c.d_range, spacing);
  const ChainMode mode = c.chain == "exact" ? ChainMode::kExact : ChainMode::kPauli;

  write_row(out, {"L_tot_km", "d_opt", "alpha_opt", "s_opt", "L0_tilde_opt", "N", "Q_Z", "Q_X",
                  "rate"});
  for (double l : c.l_tot_km) {
    PlanResult best;
    try {
      best = select_plan(table, l, c.l_att_km, mode, exact_options(c));
    } catch (const NoPositiveRateError& e) {
      best = e.best();
    }
    write_row(out, {format_number(l), std::to_string(best.plan.d), format_number(best.plan.alpha),
                    std::to_string(best.plan.s), format_number(best.plan.l0_tilde),
                    std::to_string(best.plan.stations), format_number(best.result.q_z),
                    format_number(best.result.q_x), format_number(best.result.rate)});
  }
  if (per_d) {
    write_row(*per_d, {"d", "tau_minus", "arc_length"});
    for (const SpacingOptimum& o : table) {
      write_row(*per_d, {std::to_string(o.d), format_number(o.tau_minus),
                         format_number(o.arc_length())});
    }
  }
}

void cmd_suppression(const RunConfig& c, std::ostream& out) {
  write_row(out, {"d", "gamma", "alpha_sq_o", "alpha_sq_subo", "gamma_minus_o",
                  "gamma_bar_subo", "ratio"});
  for (int d : c.d_range) {
    const SuppressionResult r = suppression_ratio(d, c.gamma);
    write_row(out, {std::to_string(d), format_number(c.gamma), format_number(r.alpha_sq_o),
                    format_number(r.alpha_sq_subo), format_number(r.gamma_minus_o),
                    format_number(r.gamma_bar_subo), format_number(r.ratio)});
  }
}

namespace {

std::string find_config_path(int argc, const char* const* argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string_view a = argv[i];
    if (a == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (a.starts_with("--config=")) {
      path = std::string(a.substr(9));
    }
  }
  return path;
}

// Flags write straight into the config so they win over the file.
void add_flags(CLI::App* sub, RunConfig& c, std::string& write_config) {
  sub->add_option("--config", "key=value parameter file (flags take precedence)");
  sub->add_option("--write-config", write_config, "write the effective config to this file");
  sub->add_option("--d", c.d, "half the number of coherent components");
  sub->add_option("--gamma", c.gamma, "loss probability per station");
  sub->add_option("--alpha", c.alpha, "coherent amplitude");
  sub->add_option_function<std::string>(
      "--s",
      [&c](const std::string& v) {
        c.s = v == "all" ? std::nullopt : std::optional<int>(parse_int_list(v).front());
      },
      "logical subspace label, or 'all'");
  sub->add_option("--mode", c.mode, "channel construction: exact, analytic, pauli or both");
  sub->add_option("--alpha-sq-min", c.alpha_sq_min, "first alpha^2 of a sweep");
  sub->add_option("--alpha-sq-max", c.alpha_sq_max, "last alpha^2 of a sweep");
  sub->add_option("--alpha-sq-step", c.alpha_sq_step, "alpha^2 increment of a sweep");
  sub->add_option("--eta", c.eta, "coupling efficiency");
  sub->add_option_function<std::string>(
      "--L-tot-km", [&c](const std::string& v) { c.l_tot_km = parse_double_list(v); },
      "total distances in km, comma separated");
  sub->add_option("--L-att-km", c.l_att_km, "fiber attenuation length in km");
  sub->add_option_function<std::string>(
      "--d-range", [&c](const std::string& v) { c.d_range = parse_int_list(v); },
      "values of d, e.g. 2..9 or 3,5,7");
  sub->add_option("--chain", c.chain, "per-station channel of the chain: exact or pauli");
  sub->add_option("--output", c.output, "output file (default stdout)");
  sub->add_option("--per-d-output", c.per_d_output, "repeater: file for the per-d table");
  sub->add_option("--nmax", c.nmax, "Fock cutoff override (default: automatic)");
  sub->add_option("--diamond-tol", c.diamond_tolerance, "diamond refinement tolerance");
  sub->add_option("--diamond-grid", c.diamond_grid, "diamond grid points per angle");
  sub->add_option("--tail-tol", c.tail_tolerance, "Fock tail tolerance");
  sub->add_option("--loss-mass-tol", c.loss_mass_tolerance, "omitted Poisson loss mass");
  sub->add_flag_callback("--no-certify", [&c] { c.certify = false; },
                         "optimize: skip the exact diamond certificate");
  sub->add_flag_callback("--no-validity-restriction", [&c] { c.restrict_valid = false; },
                         "optimize: allow alpha below the small-overlap regime");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string write_config;
  CLI::App app("Cat-code error correction over the lossy bosonic channel", "catqec");
  app.footer(kHelpFooter);
  app.require_subcommand(1);
  app.add_option("--config", "key=value parameter file (flags take precedence)");

  using Runner = std::function<void(std::ostream&)>;
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto add = [&](const char* name, const char* help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(sub, config, write_config);
    commands.emplace_back(sub, std::move(run));
  };
  add("channel", "logical channel matrix and Pauli parameters (JSON)",
      [&](std::ostream& o) { cmd_channel(config, o); });
  add("sweep-alpha", "exact diamond distance and envelopes over alpha^2 (CSV)",
      [&](std::ostream& o) { cmd_sweep_alpha(config, o); });
  add("optimize", "optimal (alpha, s) for one d (JSON)",
      [&](std::ostream& o) { cmd_optimize(config, o); });
  add("bounds", "envelopes over alpha^2 (CSV)", [&](std::ostream& o) { cmd_bounds(config, o); });
  add("repeater", "optimized repeater chain per distance (CSV)", [&](std::ostream& o) {
    std::unique_ptr<std::ofstream> per_d;
    if (!config.per_d_output.empty()) {
      per_d = std::make_unique<std::ofstream>(config.per_d_output);
      if (!*per_d) throw DomainError("cannot write '" + config.per_d_output + "'");
    }
    cmd_repeater(config, o, per_d.get());
  });
  add("suppression", "suppression ratio per d in --d-range (CSV)",
      [&](std::ostream& o) { cmd_suppression(config, o); });

  try {
    apply_environment(config);
    const std::string path = find_config_path(argc, argv);
    if (!path.empty()) load_config_file(path, config);
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      err << "catqec: " << e.what() << '\n';
      return kExitDomain;
    }
    if (!write_config.empty()) {
      std::ofstream f(write_config);
      if (!f) throw DomainError("cannot write '" + write_config + "'");
      f << format_config(config);
    }
    for (auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      if (config.output.empty()) {
        run(out);
      } else {
        std::ofstream f(config.output);
        if (!f) throw DomainError("cannot write '" + config.output + "'");
        run(f);
      }
    }
  } catch (const DomainError& e) {
    err << "catqec: domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NumericalError& e) {
    err << "catqec: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace catqec

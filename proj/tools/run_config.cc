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

#include "run_config.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "catqec/errors.h"

namespace catqec {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw DomainError("bad number for " + key + ": '" + value + "'");
  }
  return out;
}

int to_int(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw DomainError("bad integer for " + key + ": '" + value + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw DomainError("bad boolean for " + key + ": '" + value + "'");
}

std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

template <typename T, typename F>
std::string join(const std::vector<T>& v, F f) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += f(v[i]);
  }
  return out;
}

void set_env_double(const char* name, double& target) {
  if (const char* v = std::getenv(name)) target = to_double(name, v);
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int("list", item));
      continue;
    }
    const int lo = to_int("range", item.substr(0, dots));
    const int hi = to_int("range", item.substr(dots + 2));
    if (lo > hi) throw DomainError("empty range '" + item + "'");
    for (int i = lo; i <= hi; ++i) out.push_back(i);
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double("list", item));
  if (out.empty()) throw DomainError("empty number list");
  return out;
}

RunConfig default_config() {
  RunConfig c;
  apply_environment(c);
  return c;
}

void apply_environment(RunConfig& c) {
  set_env_double("CATQEC_DIAMOND_TOL", c.diamond_tolerance);
  set_env_double("CATQEC_TAIL_TOL", c.tail_tolerance);
  set_env_double("CATQEC_LOSS_MASS_TOL", c.loss_mass_tolerance);
}

void parse_config_text(const std::string& text, RunConfig& c) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "d") c.d = to_int(key, value);
    else if (key == "gamma") c.gamma = to_double(key, value);
    else if (key == "alpha") c.alpha = to_double(key, value);
    else if (key == "s") c.s = value == "all" ? std::nullopt : std::optional<int>(to_int(key, value));
    else if (key == "mode") c.mode = value;
    else if (key == "alpha_sq_min") c.alpha_sq_min = to_double(key, value);
    else if (key == "alpha_sq_max") c.alpha_sq_max = to_double(key, value);
    else if (key == "alpha_sq_step") c.alpha_sq_step = to_double(key, value);
    else if (key == "eta") c.eta = to_double(key, value);
    else if (key == "L_tot_km") c.l_tot_km = parse_double_list(value);
    else if (key == "L_att_km") c.l_att_km = to_double(key, value);
    else if (key == "d_range") c.d_range = parse_int_list(value);
    else if (key == "chain") c.chain = value;
    else if (key == "output") c.output = value;
    else if (key == "per_d_output") c.per_d_output = value;
    else if (key == "format") c.format = value;
    else if (key == "nmax") c.nmax = to_int(key, value);
    else if (key == "certify") c.certify = to_bool(key, value);
    else if (key == "restrict_valid") c.restrict_valid = to_bool(key, value);
    else if (key == "diamond_tolerance") c.diamond_tolerance = to_double(key, value);
    else if (key == "diamond_grid") c.diamond_grid = to_int(key, value);
    else if (key == "tail_tolerance") c.tail_tolerance = to_double(key, value);
    else if (key == "loss_mass_tolerance") c.loss_mass_tolerance = to_double(key, value);
    else throw DomainError("unknown config key '" + key + "'");
  }
}

void load_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  parse_config_text(buf.str(), config);
}

std::string format_config(const RunConfig& c) {
  std::ostringstream out;
  out << "d = " << c.d << '\n';
  out << "gamma = " << exact(c.gamma) << '\n';
  out << "alpha = " << exact(c.alpha) << '\n';
  out << "s = " << (c.s ? std::to_string(*c.s) : std::string("all")) << '\n';
  out << "mode = " << c.mode << '\n';
  out << "alpha_sq_min = " << exact(c.alpha_sq_min) << '\n';
  out << "alpha_sq_max = " << exact(c.alpha_sq_max) << '\n';
  out << "alpha_sq_step = " << exact(c.alpha_sq_step) << '\n';
  out << "eta = " << exact(c.eta) << '\n';
  out << "L_tot_km = " << join(c.l_tot_km, exact) << '\n';
  out << "L_att_km = " << exact(c.l_att_km) << '\n';
  out << "d_range = " << join(c.d_range, [](int d) { return std::to_string(d); }) << '\n';
  out << "chain = " << c.chain << '\n';
  out << "output = " << c.output << '\n';
  out << "per_d_output = " << c.per_d_output << '\n';
  out << "format = " << c.format << '\n';
  out << "nmax = " << c.nmax << '\n';
  out << "certify = " << (c.certify ? "true" : "false") << '\n';
  out << "restrict_valid = " << (c.restrict_valid ? "true" : "false") << '\n';
  out << "diamond_tolerance = " << exact(c.diamond_tolerance) << '\n';
  out << "diamond_grid = " << c.diamond_grid << '\n';
  out << "tail_tolerance = " << exact(c.tail_tolerance) << '\n';
  out << "loss_mass_tolerance = " << exact(c.loss_mass_tolerance) << '\n';
  return out.str();
}

}  // namespace catqec

#include "config.hpp"

#include <json.hpp>

#include "error.hpp"

namespace tlab {

using nlohmann::json;

Config Config::defaults() {
  Config c;
  c.tol = {
      {"bm_volume.violation", 1e-10},   // absolute on V^(1/2)
      {"bm_volume.equality", 1e-10},    // absolute chord deviation
      {"bm_torsion.violation", 1e-3},   // relative to T^(1/4) scale
      {"bm_torsion.equality", 5e-3},    // relative chord deviation
      {"concavity.violation", 1e-4},    // relative to f(0)^(1/4)
      {"poincare.violation", 1e-2},     // relative to |lhs| + |rhs|
      {"poincare.equality", 2e-2},      // relative to |lhs| + |rhs|
      {"poincare.constraint", 1e-8},    // mean-zero residual, relative
      {"crossform", 1e-6},              // spherical vs boundary assembly
      {"adjoint.gap", 1e-2},
      {"variation.fd1", 1e-2},
      {"variation.fd2", 5e-2},
      {"hessian.closed", 1e-8},
      {"hessian.pde", 5e-2},
      {"oracle.theorem3d.ball", 1e-6},
      {"oracle.theorem3d.general", 1e-2},
      {"oracle.homothety", 1e-10},
      {"oracle.torsion", 1e-3},
      {"equality.homothety", 1e-9},  // coefficient residual in homothety detection
  };
  return c;
}

double Config::tolerance(const std::string& key) const {
  auto it = tol.find(key);
  if (it == tol.end()) fail(ErrorCode::InvalidArgument, "unknown tolerance key '" + key + "'");
  return it->second;
}

void Config::set_number(const std::string& key, double value) {
  if (key == "delta") delta = value;
  else if (key == "nodes") nodes = static_cast<int>(value);
  else if (key == "solver_tol") solver_tol = value;
  else if (key == "eps_w_rel") eps_w_rel = value;
  else if (key == "crosscheck_tol") crosscheck_tol = value;
  else if (key == "fd_eps1_rel") fd_eps1_rel = value;
  else if (key == "fd_eps2_rel") fd_eps2_rel = value;
  else if (key == "max_degree") max_degree = static_cast<int>(value);
  else if (key == "ellipse_degree") ellipse_degree = static_cast<int>(value);
  else if (key == "aspect_limit") aspect_limit = value;
  else if (key == "seed") seed = static_cast<std::uint64_t>(value);
  else if (key == "quad_polar") quad_polar = static_cast<int>(value);
  else if (key == "quad_azimuthal") quad_azimuthal = static_cast<int>(value);
  else if (key == "quad_check_degree") quad_check_degree = static_cast<int>(value);
  else if (key.rfind("tol.", 0) == 0) {
    const std::string name = key.substr(4);
    if (tol.find(name) == tol.end())
      fail(ErrorCode::InvalidArgument, "unknown tolerance key '" + name + "'");
    if (!(value > 0.0)) fail(ErrorCode::InvalidArgument, "tolerances must be positive");
    tol[name] = value;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
  }
}

void Config::set_string(const std::string& key, const std::string& value) {
  if (key == "out") out = value;
  else if (key == "format") {
    if (value != "json" && value != "csv")
      fail(ErrorCode::InvalidArgument, "format must be json or csv");
    format = value;
  } else if (key == "ladder") {
    ladder.clear();
    std::string cur;
    for (char ch : value + ",") {
      if (ch == ',') {
        if (!cur.empty()) {
          const auto slash = cur.find('/');
          ladder.push_back(slash == std::string::npos
                               ? std::stod(cur)
                               : std::stod(cur.substr(0, slash)) /
                                     std::stod(cur.substr(slash + 1)));
          cur.clear();
        }
      } else {
        cur.push_back(ch);
      }
    }
    for (size_t i = 1; i < ladder.size(); ++i)
      if (!(ladder[i] < ladder[i - 1]))
        fail(ErrorCode::InvalidArgument, "ladder must be strictly decreasing");
  } else {
    fail(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
  }
}

std::string Config::to_json() const {
  json j;
  j["delta"] = delta;
  if (!ladder.empty()) j["ladder"] = ladder;
  j["nodes"] = nodes;
  j["solver_tol"] = solver_tol;
  j["eps_w_rel"] = eps_w_rel;
  j["crosscheck_tol"] = crosscheck_tol;
  j["fd_eps1_rel"] = fd_eps1_rel;
  j["fd_eps2_rel"] = fd_eps2_rel;
  j["max_degree"] = max_degree;
  j["ellipse_degree"] = ellipse_degree;
  j["aspect_limit"] = aspect_limit;
  j["seed"] = seed;
  j["quad_polar"] = quad_polar;
  j["quad_azimuthal"] = quad_azimuthal;
  j["quad_check_degree"] = quad_check_degree;
  j["format"] = format;
  if (!out.empty()) j["out"] = out;
  j["tol"] = tol;
  return j.dump();
}

void Config::merge_json(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(ErrorCode::ParseError, "config JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "tol") {
      if (!it.value().is_object()) fail(ErrorCode::ParseError, "'tol' must be an object");
      for (auto t = it.value().begin(); t != it.value().end(); ++t)
        set_number("tol." + t.key(), t.value().get<double>());
    } else if (key == "ladder") {
      ladder = it.value().get<std::vector<double>>();
    } else if (it.value().is_string()) {
      set_string(key, it.value().get<std::string>());
    } else if (it.value().is_number()) {
      set_number(key, it.value().get<double>());
    } else {
      fail(ErrorCode::ParseError, "unsupported config value for '" + key + "'");
    }
  }
}

TorsionOptions Config::torsion_options() const {
  TorsionOptions o;
  o.solver.residual_tol = solver_tol;
  o.grid.aspect_limit = aspect_limit;
  o.crosscheck_tol = crosscheck_tol;
  return o;
}

}  // namespace tlab

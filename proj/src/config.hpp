#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "body.hpp"
#include "torsion.hpp"

namespace tlab {

/// Runtime configuration. Tolerances live here, not in the verifiers, so
/// acceptance thresholds stay auditable and reports can echo them.
struct Config {
  double delta = 1.0 / 128.0;
  std::vector<double> ladder;  ///< optional resolution ladder (strictly decreasing)
  int nodes = 256;
  double solver_tol = 1e-10;
  double eps_w_rel = 1e-8;
  double crosscheck_tol = 1e-2;
  double fd_eps1_rel = 1e-3;  ///< first-difference step, relative to c0
  double fd_eps2_rel = 5e-3;  ///< second-difference step, relative to c0
  int max_degree = 64;
  int ellipse_degree = 16;
  double aspect_limit = 20.0;
  std::uint64_t seed = 1;
  int quad_polar = 64;
  int quad_azimuthal = 128;
  int quad_check_degree = 20;
  std::string out;
  std::string format = "json";

  /// Per-check tolerance table (see defaults() for the full key list).
  std::map<std::string, double> tol;

  static Config defaults();

  double tolerance(const std::string& key) const;

  /// Typed key-value setters used by the C API; unknown keys are errors.
  void set_number(const std::string& key, double value);
  void set_string(const std::string& key, const std::string& value);

  std::string to_json() const;
  void merge_json(const std::string& json_text);

  BodyLimits body_limits() const { return {eps_w_rel, max_degree}; }
  TorsionOptions torsion_options() const;
};

}  // namespace tlab

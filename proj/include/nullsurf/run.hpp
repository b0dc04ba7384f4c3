#ifndef NULLSURF_RUN_HPP_
#define NULLSURF_RUN_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nullsurf/gauss_weingarten.hpp"
#include "nullsurf/induced.hpp"

namespace nullsurf {

using json = nlohmann::json;

struct Tolerances {
  double null_tol = 1e-9;   // on-surface and nullity tests
  double residual = 1e-9;   // algebraic identity residuals
  double fd_step = 1e-5;    // finite-difference step; also the FD residual gate
};

struct SampleSpec {
  int count = 0;
  std::uint64_t seed = 0;
  double box = 1.0;
};

struct RunConfig {
  int n_pairs = 0;
  std::vector<int> signs;
  json hypersurface_spec;
  json policy_spec;
  std::variant<std::vector<Vector>, SampleSpec> points;
  Tolerances tol;

  static RunConfig parse(const json& j);  // throws ConfigError

  AmbientStructure make_structure() const;
  Hypersurface make_surface(const AmbientStructure& S) const;
  ScreenPolicy make_policy(const AmbientStructure& S) const;
  json echo() const;  // canonical re-serialization
};

std::vector<std::string> preset_names();
json preset_config(const std::string& name);  // throws ConfigError on unknown name

// Points resolved onto the hypersurface (Newton projection); throws
// ConfigError when an explicit point cannot be projected or sampling fails.
std::vector<Vector> resolve_points(const RunConfig& cfg, const AmbientStructure& S,
                                   const Hypersurface& H);

struct RunOutcome {
  int exit_code = 0;
  json report;
};

RunOutcome run_classify(const RunConfig& cfg);
RunOutcome run_verify(const RunConfig& cfg);

// Frame dump at a literal point (no projection). Throws on frame errors.
json frame_dump(const RunConfig& cfg, const Vector& point);

}  // namespace nullsurf

#endif  // NULLSURF_RUN_HPP_

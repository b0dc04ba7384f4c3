// nullsurf CLI: classify / verify / frame / examples over JSON run configs.
// Exit codes: 0 success, 1 failed validation or frame construction, 2 config
// errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nullsurf/run.hpp"

namespace {

using nullsurf::ConfigError;
using nullsurf::json;

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return j;
}

struct Overrides {
  std::optional<double> tol;
  std::optional<double> fd_step;
  std::optional<std::uint64_t> seed;

  void apply(json& cfg) const {
    if (tol) {
      cfg["tolerances"]["null"] = *tol;
      cfg["tolerances"]["residual"] = *tol;
    }
    if (fd_step) cfg["tolerances"]["fd_step"] = *fd_step;
    if (seed && cfg.contains("points") && cfg["points"].is_object() &&
        cfg["points"].contains("sample"))
      cfg["points"]["sample"]["seed"] = *seed;
  }
};

nullsurf::Vector parse_point_arg(const std::string& s) {
  nullsurf::Vector p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("--point: cannot parse '" + item + "' as a number");
    }
  }
  if (p.empty()) throw ConfigError("--point: empty coordinate list");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical frames, classification and induced structures on "
               "lightlike hypersurfaces of flat indefinite almost contact "
               "metric model spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string point_arg;
  std::string preset_name;
  Overrides ov;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "run config JSON file")->required();
    cmd->add_option("--tol", ov.tol, "override null/residual tolerances");
    cmd->add_option("--fd-step", ov.fd_step, "override finite-difference step");
    cmd->add_option("--seed", ov.seed, "override the point-sampling seed");
  };

  CLI::App* cmd_classify = app.add_subcommand("classify", "classify sample points");
  add_common(cmd_classify);
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the full identity suite");
  add_common(cmd_verify);
  CLI::App* cmd_frame = app.add_subcommand("frame", "dump the frame at one point");
  add_common(cmd_frame);
  cmd_frame->add_option("--point", point_arg, "comma-separated point coordinates")->required();
  CLI::App* cmd_examples =
      app.add_subcommand("examples", "list preset configs, or print one by name");
  cmd_examples->add_option("name", preset_name, "preset name to print");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_examples->parsed()) {
      if (preset_name.empty()) {
        for (const auto& n : nullsurf::preset_names()) std::cout << n << "\n";
      } else {
        std::cout << nullsurf::preset_config(preset_name).dump(2) << "\n";
      }
      return 0;
    }

    json raw = load_config_file(config_path);
    ov.apply(raw);
    const nullsurf::RunConfig cfg = nullsurf::RunConfig::parse(raw);

    if (cmd_classify->parsed()) {
      const auto out = nullsurf::run_classify(cfg);
      std::cout << out.report.dump(2) << "\n";
      return out.exit_code;
    }
    if (cmd_verify->parsed()) {
      const auto out = nullsurf::run_verify(cfg);
      std::cout << out.report.dump(2) << "\n";
      return out.exit_code;
    }
    if (cmd_frame->parsed()) {
      const auto p = parse_point_arg(point_arg);
      std::cout << nullsurf::frame_dump(cfg, p).dump(2) << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nullsurf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

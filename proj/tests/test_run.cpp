#include <doctest.h>

#include "nullsurf/run.hpp"

using namespace nullsurf;

TEST_SUITE_BEGIN("run");

TEST_CASE("preset configs parse and echo canonically") {
  for (const auto& name : preset_names()) {
    const json raw = preset_config(name);
    const RunConfig cfg = RunConfig::parse(raw);
    CHECK(cfg.echo() == raw);
  }
}

TEST_CASE("config validation errors") {
  CHECK_THROWS_AS(RunConfig::parse(json::parse("{}")), ConfigError);
  CHECK_THROWS_AS(preset_config("no-such-preset"), ConfigError);

  json bad = preset_config("fixture-a");
  bad["ambient"]["signs"] = {1, 1};
  const RunConfig cfg = RunConfig::parse(bad);
  CHECK_THROWS_AS(cfg.make_structure(), ConfigError);  // Riemannian signature

  json badsurf = preset_config("fixture-a");
  badsurf["hypersurface"] = {{"kind", "builtin"}, {"name", "bogus"}};
  const RunConfig cfg2 = RunConfig::parse(badsurf);
  const AmbientStructure S = cfg2.make_structure();
  CHECK_THROWS_AS(cfg2.make_surface(S), ConfigError);

  json badpts = preset_config("fixture-a");
  badpts["points"] = {{"sample", {{"count", 0}}}};
  CHECK_THROWS_AS(RunConfig::parse(badpts), ConfigError);
}

TEST_CASE("explicit points are projected, unprojectable ones rejected") {
  json cfg_json = preset_config("fixture-b");
  cfg_json["points"] = json::array({json::array({1.0, 2.0, 3.0, 4.0, 5.0})});
  const RunConfig cfg = RunConfig::parse(cfg_json);
  const AmbientStructure S = cfg.make_structure();
  const Hypersurface H = cfg.make_surface(S);
  const auto pts = resolve_points(cfg, S, H);
  REQUIRE(pts.size() == 1);
  CHECK(std::abs(H.value(pts[0]) - H.level) <= 1e-12);

  // a point that Newton-projects into the excluded cone vertex
  json cone_json = preset_config("null-cone");
  cone_json["points"] = json::array({json::array({1e-9, 0.0, 0.0, 0.0, 0.0})});
  const RunConfig cone_cfg = RunConfig::parse(cone_json);
  const AmbientStructure Sc = cone_cfg.make_structure();
  const Hypersurface Hc = cone_cfg.make_surface(Sc);
  CHECK_THROWS_AS(resolve_points(cone_cfg, Sc, Hc), ConfigError);
}

TEST_CASE("quadric configs run end to end") {
  json cfg_json = preset_config("fixture-b");
  cfg_json["hypersurface"] = {
      {"kind", "quadric"},
      {"matrix", {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}},
      {"covector", {0, 0, 0, 0, 0}},
      {"constant", 0.0}};
  cfg_json["points"] = json::array({json::array({3.0, 0.0, 1.0, 2.0, 2.0})});
  const RunConfig cfg = RunConfig::parse(cfg_json);
  const RunOutcome out = run_classify(cfg);
  CHECK(out.exit_code == 0);
  REQUIRE(out.report["points"].size() == 1);
  const auto& rec = out.report["points"][0];
  CHECK(rec["class"] == "inascreen");
  CHECK(std::abs(rec["b"].get<double>() - 4.0) <= 1e-9);  // b = 2z on this cone
}

TEST_CASE("classify runs match the fixture expectations") {
  const RunOutcome a = run_classify(RunConfig::parse(preset_config("fixture-a")));
  CHECK(a.exit_code == 0);
  CHECK(a.report["summary"]["pass"] == true);
  CHECK(a.report["summary"]["class_counts"]["inascreen"] == 10);
  CHECK(a.report["summary"]["class_counts"]["tangential"] == 10);
  for (const auto& rec : a.report["points"]) {
    CHECK(rec["class"] == "inascreen");
    CHECK(rec["tangential"] == true);
    CHECK(rec["proper"] == false);
  }

  const RunOutcome b = run_classify(RunConfig::parse(preset_config("fixture-b")));
  CHECK(b.exit_code == 0);
  CHECK(b.report["summary"]["class_counts"]["proper"] == 10);
  for (const auto& rec : b.report["points"]) {
    CHECK(std::abs(rec["a"].get<double>() - 0.25) <= 1e-9);
    CHECK(std::abs(rec["b"].get<double>() - 1.0) <= 1e-9);
    CHECK(rec["induced"].is_object());
  }

  const RunOutcome z = run_classify(RunConfig::parse(preset_config("fixture-b-ascreen")));
  CHECK(z.exit_code == 0);
  CHECK(z.report["summary"]["class_counts"]["ascreen"] == 10);
  for (const auto& rec : z.report["points"]) {
    CHECK(std::abs(rec["lambda"].get<double>() + 2.0) <= 1e-9);
    CHECK(rec["induced"].is_null());  // ascreen, not proper inascreen
  }
}

TEST_CASE("verify runs pass on every preset") {
  for (const auto& name : preset_names()) {
    const RunOutcome out = run_verify(RunConfig::parse(preset_config(name)));
    CHECK(out.exit_code == 0);
    CHECK(out.report["summary"]["pass"] == true);
    for (const auto& row : out.report["identities"]) CHECK(row["pass"] == true);
  }
}

TEST_CASE("report JSON round-trips") {
  const RunOutcome out = run_classify(RunConfig::parse(preset_config("fixture-b")));
  const std::string dumped = out.report.dump();
  CHECK(json::parse(dumped) == out.report);
}

TEST_CASE("identical config and seed give byte-identical reports") {
  const RunConfig cfg = RunConfig::parse(preset_config("fixture-b"));
  const std::string r1 = run_classify(cfg).report.dump(2);
  const std::string r2 = run_classify(cfg).report.dump(2);
  CHECK(r1 == r2);

  const RunConfig cone = RunConfig::parse(preset_config("null-cone"));
  CHECK(run_verify(cone).report.dump(2) == run_verify(cone).report.dump(2));
}

TEST_CASE("frame dump requires the literal point on the surface") {
  const RunConfig cfg = RunConfig::parse(preset_config("fixture-b"));
  const json dump = frame_dump(cfg, {0, 0, 0, 0, 0});
  CHECK(dump["class"] == "inascreen");
  CHECK(std::abs(dump["a"].get<double>() - 0.25) <= 1e-12);
  CHECK_THROWS_AS(frame_dump(cfg, {1, 0, 0, 0, 0}), NotOnHypersurface);
}

TEST_SUITE_END();

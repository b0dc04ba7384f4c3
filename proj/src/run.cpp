#include "nullsurf/run.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "nullsurf/rng.hpp"

namespace nullsurf {

namespace {

constexpr int kStructureTrials = 200;
constexpr int kHermitianTrials = 256;
constexpr std::uint64_t kHermitianSeedBase = 0x9e3779b9ULL;

json vec_json(const Vector& v) { return json(v); }

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json columns_json(const std::vector<Vector>& cols) {
  json out = json::array();
  for (const auto& c : cols) out.push_back(vec_json(c));
  return out;
}

Vector parse_vector(const json& j, const std::string& what, int expect_dim = -1) {
  if (!j.is_array()) throw ConfigError(what + ": expected an array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw ConfigError(what + ": expected numeric entries");
    v.push_back(x.get<double>());
  }
  if (expect_dim >= 0 && static_cast<int>(v.size()) != expect_dim)
    throw ConfigError(what + ": expected " + std::to_string(expect_dim) + " entries, got " +
                      std::to_string(v.size()));
  return v;
}

Mat parse_matrix(const json& j, const std::string& what, int expect_dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != expect_dim)
    throw ConfigError(what + ": expected a " + std::to_string(expect_dim) + "-row matrix");
  Mat m(expect_dim, expect_dim);
  for (int i = 0; i < expect_dim; ++i) {
    const Vector row = parse_vector(j[static_cast<std::size_t>(i)], what + " row", expect_dim);
    for (int k = 0; k < expect_dim; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
  }
  return m;
}

// max-abs tracker remembering the point attaining it
struct Tracked {
  double value = 0.0;
  int point = -1;
  void update(double v, int idx) {
    if (std::abs(v) > value) {
      value = std::abs(v);
      point = idx;
    }
  }
};

struct IdentityTable {
  std::map<std::string, Tracked> rows;
  void update(const std::string& name, double v, int idx) { rows[name].update(v, idx); }
};

}  // namespace

RunConfig RunConfig::parse(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig cfg;

  if (!j.contains("ambient") || !j["ambient"].is_object())
    throw ConfigError("config: missing ambient block");
  const json& amb = j["ambient"];
  if (!amb.contains("n_pairs") || !amb["n_pairs"].is_number_integer())
    throw ConfigError("config: ambient.n_pairs must be an integer");
  cfg.n_pairs = amb["n_pairs"].get<int>();
  if (cfg.n_pairs < 1) throw ConfigError("config: ambient.n_pairs must be >= 1");
  if (!amb.contains("signs") || !amb["signs"].is_array())
    throw ConfigError("config: ambient.signs must be an array");
  for (const auto& s : amb["signs"]) {
    if (!s.is_number_integer()) throw ConfigError("config: ambient.signs entries must be +-1");
    const int v = s.get<int>();
    if (v != 1 && v != -1) throw ConfigError("config: ambient.signs entries must be +-1");
    cfg.signs.push_back(v);
  }
  if (static_cast<int>(cfg.signs.size()) != cfg.n_pairs)
    throw ConfigError("config: ambient.signs must list exactly n_pairs entries");

  if (!j.contains("hypersurface") || !j["hypersurface"].is_object())
    throw ConfigError("config: missing hypersurface block");
  cfg.hypersurface_spec = j["hypersurface"];

  cfg.policy_spec = j.value("screen_policy", json{{"kind", "basis-scan"}});
  if (!cfg.policy_spec.is_object() || !cfg.policy_spec.contains("kind"))
    throw ConfigError("config: screen_policy needs a kind");

  if (!j.contains("points")) throw ConfigError("config: missing points");
  const json& pts = j["points"];
  if (pts.is_array()) {
    std::vector<Vector> explicit_points;
    for (const auto& p : pts) explicit_points.push_back(parse_vector(p, "points entry"));
    if (explicit_points.empty()) throw ConfigError("config: points list is empty");
    cfg.points = std::move(explicit_points);
  } else if (pts.is_object() && pts.contains("sample")) {
    const json& s = pts["sample"];
    SampleSpec spec;
    spec.count = s.value("count", 0);
    if (spec.count < 1) throw ConfigError("config: points.sample.count must be >= 1");
    spec.seed = s.value("seed", 0ULL);
    spec.box = s.value("box", 1.0);
    if (!(spec.box > 0.0)) throw ConfigError("config: points.sample.box must be positive");
    cfg.points = spec;
  } else {
    throw ConfigError("config: points must be a list or a sample spec");
  }

  const json tols = j.value("tolerances", json::object());
  cfg.tol.null_tol = tols.value("null", 1e-9);
  cfg.tol.residual = tols.value("residual", 1e-9);
  cfg.tol.fd_step = tols.value("fd_step", 1e-5);
  if (!(cfg.tol.null_tol > 0.0) || !(cfg.tol.residual > 0.0) || !(cfg.tol.fd_step > 0.0))
    throw ConfigError("config: tolerances must be positive");
  return cfg;
}

AmbientStructure RunConfig::make_structure() const {
  try {
    return standard_model(n_pairs, signs);
  } catch (const RiemannianSignature& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

Hypersurface RunConfig::make_surface(const AmbientStructure& S) const {
  const json& h = hypersurface_spec;
  const std::string kind = h.value("kind", "");
  if (kind == "affine") {
    Vector w = parse_vector(h.at("covector"), "hypersurface.covector", S.dim());
    const double c = h.value("constant", 0.0);
    if (enorm(w) == 0.0) throw ConfigError("config: affine covector must be non-zero");
    return Hypersurface::affine(std::move(w), c);
  }
  if (kind == "quadric") {
    Mat A = parse_matrix(h.at("matrix"), "hypersurface.matrix", S.dim());
    Vector w = h.contains("covector")
                   ? parse_vector(h["covector"], "hypersurface.covector", S.dim())
                   : Vector(static_cast<std::size_t>(S.dim()), 0.0);
    const double c = h.value("constant", 0.0);
    return Hypersurface::quadric(std::move(A), std::move(w), c);
  }
  if (kind == "builtin") {
    const std::string name = h.value("name", "");
    if (name == "null-cone") return Hypersurface::null_cone(S.metric);
    if (name == "fixture-a" || name == "fixture-b") {
      if (S.dim() != 5)
        throw ConfigError("config: builtin " + name + " lives in the 5-dimensional model");
      Hypersurface hs =
          name == "fixture-a"
              ? Hypersurface::affine({-1.0, 0.0, 1.0, 0.0, 0.0}, 0.0)
              : Hypersurface::affine({-std::sqrt(2.0), 0.0, 1.0, 0.0, 1.0}, 0.0);
      hs.builtin = name;
      return hs;
    }
    throw ConfigError("config: unknown builtin hypersurface '" + name + "'");
  }
  throw ConfigError("config: hypersurface.kind must be affine, quadric or builtin");
}

ScreenPolicy RunConfig::make_policy(const AmbientStructure& S) const {
  const std::string kind = policy_spec.value("kind", "");
  if (kind == "basis-scan") return ScreenPolicy::basis_scan();
  if (kind == "auxiliary-vector") {
    if (!policy_spec.contains("auxiliary"))
      throw ConfigError("config: auxiliary-vector policy needs an auxiliary vector");
    return ScreenPolicy::auxiliary_vector(
        parse_vector(policy_spec["auxiliary"], "screen_policy.auxiliary", S.dim()));
  }
  throw ConfigError("config: screen_policy.kind must be basis-scan or auxiliary-vector");
}

json RunConfig::echo() const {
  json out;
  out["ambient"] = {{"n_pairs", n_pairs}, {"signs", signs}};
  out["hypersurface"] = hypersurface_spec;
  out["screen_policy"] = policy_spec;
  if (std::holds_alternative<SampleSpec>(points)) {
    const auto& s = std::get<SampleSpec>(points);
    out["points"] = {{"sample", {{"count", s.count}, {"seed", s.seed}, {"box", s.box}}}};
  } else {
    json pts = json::array();
    for (const auto& p : std::get<std::vector<Vector>>(points)) pts.push_back(vec_json(p));
    out["points"] = std::move(pts);
  }
  out["tolerances"] = {
      {"null", tol.null_tol}, {"residual", tol.residual}, {"fd_step", tol.fd_step}};
  return out;
}

std::vector<std::string> preset_names() {
  return {"fixture-a", "fixture-b", "fixture-b-ascreen", "null-cone"};
}

json preset_config(const std::string& name) {
  json cfg;
  cfg["ambient"] = {{"n_pairs", 2}, {"signs", {-1, 1}}};
  cfg["screen_policy"] = {{"kind", "basis-scan"}};
  cfg["tolerances"] = {{"null", 1e-9}, {"residual", 1e-9}, {"fd_step", 1e-5}};
  if (name == "fixture-a") {
    cfg["hypersurface"] = {{"kind", "builtin"}, {"name", "fixture-a"}};
    cfg["points"] = {{"sample", {{"count", 10}, {"seed", 1}, {"box", 1.0}}}};
  } else if (name == "fixture-b") {
    cfg["hypersurface"] = {{"kind", "builtin"}, {"name", "fixture-b"}};
    cfg["points"] = {{"sample", {{"count", 10}, {"seed", 2}, {"box", 1.0}}}};
  } else if (name == "fixture-b-ascreen") {
    cfg["hypersurface"] = {{"kind", "builtin"}, {"name", "fixture-b"}};
    cfg["screen_policy"] = {{"kind", "auxiliary-vector"},
                            {"auxiliary", {0.0, 0.0, 0.0, 0.0, 1.0}}};
    cfg["points"] = {{"sample", {{"count", 10}, {"seed", 3}, {"box", 1.0}}}};
  } else if (name == "null-cone") {
    cfg["hypersurface"] = {{"kind", "builtin"}, {"name", "null-cone"}};
    cfg["points"] = {{"sample", {{"count", 16}, {"seed", 7}, {"box", 2.0}}}};
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return cfg;
}

std::vector<Vector> resolve_points(const RunConfig& cfg, const AmbientStructure& S,
                                   const Hypersurface& H) {
  const double tol = cfg.tol.null_tol;
  auto on_surface = [&](const Vector& q) {
    const double res = std::abs(H.value(q) - H.level);
    return res <= tol * std::max(1.0, enorm(H.differential(q)) * std::max(1.0, enorm(q)));
  };

  std::vector<Vector> out;
  if (std::holds_alternative<std::vector<Vector>>(cfg.points)) {
    int idx = 0;
    for (const auto& p : std::get<std::vector<Vector>>(cfg.points)) {
      if (static_cast<int>(p.size()) != S.dim())
        throw ConfigError("points[" + std::to_string(idx) + "]: wrong dimension");
      Vector q = project_to_surface(H, p, 25);
      if (!on_surface(q) || !all_finite(q))
        throw ConfigError("points[" + std::to_string(idx) + "]: projection onto the surface failed");
      if (H.min_point_norm > 0.0 && enorm(q) < H.min_point_norm)
        throw ConfigError("points[" + std::to_string(idx) + "]: inside the excluded vertex region");
      out.push_back(std::move(q));
      ++idx;
    }
    return out;
  }

  const auto& spec = std::get<SampleSpec>(cfg.points);
  SplitMix64 rng(spec.seed);
  const int max_attempts = 200 * spec.count;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < spec.count;
       ++attempt) {
    Vector q = rng.vector(S.dim(), -spec.box, spec.box);
    q = project_to_surface(H, std::move(q), 30);
    if (!all_finite(q) || !on_surface(q)) continue;
    if (H.min_point_norm > 0.0 && enorm(q) < H.min_point_norm) continue;
    out.push_back(std::move(q));
  }
  if (static_cast<int>(out.size()) < spec.count)
    throw ConfigError("sampling: could not place the requested points on the surface");
  return out;
}

namespace {

json structure_block(const ValidationReport& v) {
  return json{{"eta_zeta", v.eta_zeta},
              {"phi_squared", v.phi_squared},
              {"phi_zeta", v.phi_zeta},
              {"eta_after_phi", v.eta_after_phi},
              {"compatibility", v.compatibility},
              {"metric_duality", v.metric_duality},
              {"skewness", v.skewness},
              {"trials", v.trials},
              {"seed", v.seed},
              {"max_residual", v.max_residual()},
              {"pass", v.pass()}};
}

json induced_block(const InducedStructure& ind, const HermitianReport& herm,
                   const NonexistenceWitness& wit) {
  return json{{"phi_matrix", mat_json(ind.phi)},
              {"omega", vec_json(ind.omega)},
              {"hermitian_residual", herm.hermitian},
              {"degeneracy_residuals",
               {{"g_tilde_xi", herm.gtilde_xi}, {"g_tilde_phi_xi", herm.gtilde_phi_xi}}},
              {"identity_residuals",
               {{"phi_squared", ind.phi_squared},
                {"omega_phi_vs_eta", ind.omega_phi_vs_eta},
                {"omega_xi", ind.omega_xi},
                {"phi_xi_match", ind.phi_xi_match},
                {"compatibility", herm.compatibility},
                {"skew_exchange", herm.skew_exchange}}},
              {"obstruction",
               {{"omega_phi_xi", wit.omega_phi_xi},
                {"hermitian_defect_xi_xi", wit.hermitian_defect_xi_xi}}}};
}

json gw_block(const SecondFundamentalData& data, const GWReport& rep) {
  return json{{"B", mat_json(data.B)},
              {"C", mat_json(data.C)},
              {"tau", vec_json(data.tau)},
              {"A_N", columns_json(data.A_N)},
              {"A_star_xi", columns_json(data.A_star)},
              {"residuals",
               {{"symmetry", rep.b_symmetry},
                {"shape_B", rep.shape_b},
                {"shape_C", rep.shape_c},
                {"nabla_g", rep.nabla_g},
                {"b_xi_column", rep.b_xi_column}}}};
}

struct PointResult {
  json record;
  bool frame_ok = false;
  bool gw_ok = true;
  std::optional<Classification> cls;
};

PointResult process_point(const AmbientStructure& S, const Hypersurface& H,
                          const ScreenPolicy& policy, const Tolerances& tol, int idx,
                          const Vector& p, IdentityTable& table) {
  PointResult out;
  out.record["point"] = vec_json(p);
  try {
    const NullFrame frame = build_null_frame(S, H, p, policy, tol.null_tol);
    const FrameResiduals fres = frame_residuals(S, frame);
    const ZetaDecomposition dec = decompose_zeta(S, frame, tol.residual);
    const Classification cls = classify(dec, tol.residual);
    const DprimeInvariance dpi = check_dprime_invariance(S, frame, tol.residual);
    out.frame_ok = true;
    out.cls = cls;

    table.update("frame_xi_null", fres.xi_null, idx);
    table.update("frame_n_null", fres.n_null, idx);
    table.update("frame_pairing", fres.pairing, idx);
    table.update("frame_screen_xi", fres.screen_vs_xi, idx);
    table.update("frame_screen_n", fres.screen_vs_n, idx);
    table.update("frame_phi_in_screen", fres.phi_in_screen, idx);
    table.update("frame_dprime_orth", fres.dprime_orth, idx);
    table.update("unit_identity", dec.unit_identity, idx);
    table.update("f_pairing", std::max(std::abs(dec.pair_phi_xi), std::abs(dec.pair_phi_n)), idx);
    table.update("f_vanishing", std::max(std::abs(dec.vanish_f1), std::abs(dec.vanish_f2)), idx);
    table.update("gram_det_identity", dec.gram_det_identity, idx);
    table.update("decomposition_residual", dec.residual, idx);
    table.update("wprime_orth", dec.wprime_orth, idx);
    table.update("dprime_pairing", std::max(dpi.pairing_a, dpi.pairing_b), idx);
    table.update("dprime_in_screen", dpi.screen_defect, idx);

    const bool det_small = std::abs(dec.gram_det) <= tol.residual;
    const bool is_ascreen = cls.label == PositionClass::Ascreen;
    table.update("ascreen_iff_gram_det_zero", det_small == is_ascreen ? 0.0 : 1.0, idx);
    if (std::abs(dec.b) <= tol.residual) table.update("calin_a_where_b_zero", dec.a, idx);

    out.record["a"] = dec.a;
    out.record["b"] = dec.b;
    out.record["f1"] = dec.f1;
    out.record["f2"] = dec.f2;
    out.record["w_prime"] = vec_json(dec.Wprime);
    out.record["class"] = to_string(cls.label);
    out.record["tangential"] = cls.tangential;
    out.record["proper"] = cls.proper;
    out.record["lambda"] = dec.lambda ? json(*dec.lambda) : json(nullptr);
    out.record["gram_det"] = dec.gram_det;
    out.record["residuals"] = {{"frame_max", fres.max_residual()},
                               {"decomposition", dec.residual},
                               {"unit_identity", dec.unit_identity},
                               {"f_pairing", std::max(std::abs(dec.pair_phi_xi), std::abs(dec.pair_phi_n))},
                               {"f_vanishing", std::max(std::abs(dec.vanish_f1), std::abs(dec.vanish_f2))},
                               {"gram_det_identity", dec.gram_det_identity},
                               {"wprime_orth", dec.wprime_orth},
                               {"dprime_pairing_a", dpi.pairing_a},
                               {"dprime_pairing_b", dpi.pairing_b}};
    out.record["dprime"] = {{"invariant", dpi.invariant},
                            {"in_screen", dpi.in_screen},
                            {"span_defect", dpi.span_defect},
                            {"screen_defect", dpi.screen_defect}};

    if (cls.proper) {
      const IndependenceReport ir = check_independence(S, frame, dec, tol.residual);
      out.record["independence"] = {{"gram_det_abs", ir.gram_det_abs},
                                    {"phi_pair_independent", ir.phi_pair_independent},
                                    {"zeta_independent", ir.zeta_independent},
                                    {"pass", ir.pass}};
      table.update("independence", ir.pass ? 0.0 : 1.0, idx);

      const InducedStructure ind = induced_phi_omega(S, frame, dec, tol.residual);
      const HermitianReport herm = verify_hermitian(ind, kHermitianTrials, tol.residual,
                                                    kHermitianSeedBase + static_cast<std::uint64_t>(idx));
      const NonexistenceWitness wit = nonexistence_witness(ind, dec, tol.residual);
      out.record["induced"] = induced_block(ind, herm, wit);

      table.update("induced_phi_squared", ind.phi_squared, idx);
      table.update("induced_omega_phi_vs_eta", ind.omega_phi_vs_eta, idx);
      table.update("induced_omega_xi", ind.omega_xi, idx);
      table.update("induced_phi_xi_match", ind.phi_xi_match, idx);
      table.update("induced_tangency", ind.tangency_residual, idx);
      table.update("hermitian_g_tilde", herm.hermitian, idx);
      table.update("compatibility_induced", herm.compatibility, idx);
      table.update("skew_exchange", herm.skew_exchange, idx);
      table.update("g_tilde_xi", herm.gtilde_xi, idx);
      table.update("g_tilde_phi_xi", herm.gtilde_phi_xi, idx);
      table.update("witness_omega_vs_b", wit.omega_phi_xi_vs_b, idx);
      table.update("witness_defect_vs_b_sq", wit.defect_vs_b_sq, idx);
    } else {
      out.record["independence"] = nullptr;
      out.record["induced"] = nullptr;
    }

    try {
      FrameField field(S, H, p, policy, tol.null_tol);
      const SecondFundamentalData data = second_fundamental(field, tol.fd_step);
      const GWReport gw = verify_gw_identities(S, field, data, tol.fd_step);
      out.record["gauss_weingarten"] = gw_block(data, gw);
      table.update("gw_b_symmetry", gw.b_symmetry, idx);
      table.update("gw_shape_B", gw.shape_b, idx);
      table.update("gw_shape_C", gw.shape_c, idx);
      table.update("gw_nabla_g", gw.nabla_g, idx);
      table.update("gw_b_xi_column", gw.b_xi_column, idx);
    } catch (const Error& e) {
      out.record["gauss_weingarten"] = {{"error", e.what()}};
      out.gw_ok = false;
    }
  } catch (const Error& e) {
    out.record["error"] = e.what();
    out.frame_ok = false;
  }
  return out;
}

json summary_block(const std::vector<PointResult>& results, const IdentityTable& table) {
  int ascreen = 0, inascreen = 0, tangential = 0, proper = 0;
  for (const auto& r : results) {
    if (!r.cls) continue;
    if (r.cls->label == PositionClass::Ascreen)
      ++ascreen;
    else
      ++inascreen;
    if (r.cls->tangential) ++tangential;
    if (r.cls->proper) ++proper;
  }
  json max_res = json::object();
  for (const auto& [name, tracked] : table.rows) max_res[name] = tracked.value;
  return json{{"class_counts",
               {{"ascreen", ascreen},
                {"inascreen", inascreen},
                {"tangential", tangential},
                {"proper", proper}}},
              {"max_residuals", max_res}};
}

}  // namespace

RunOutcome run_classify(const RunConfig& cfg) {
  const AmbientStructure S = cfg.make_structure();
  const Hypersurface H = cfg.make_surface(S);
  const ScreenPolicy policy = cfg.make_policy(S);
  const std::vector<Vector> points = resolve_points(cfg, S, H);

  RunOutcome out;
  out.report["config"] = cfg.echo();
  const ValidationReport sval = validate_structure(S, kStructureTrials, cfg.tol.residual);
  out.report["structure"] = structure_block(sval);

  IdentityTable table;
  std::vector<PointResult> results;
  json records = json::array();
  bool frames_ok = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointResult r = process_point(S, H, policy, cfg.tol, static_cast<int>(i), points[i], table);
    frames_ok = frames_ok && r.frame_ok;
    records.push_back(r.record);
    results.push_back(std::move(r));
  }
  out.report["points"] = std::move(records);

  json summary = summary_block(results, table);
  const bool pass = sval.pass() && frames_ok;
  summary["pass"] = pass;
  out.report["summary"] = std::move(summary);
  out.exit_code = pass ? 0 : 1;
  return out;
}

RunOutcome run_verify(const RunConfig& cfg) {
  const AmbientStructure S = cfg.make_structure();
  const Hypersurface H = cfg.make_surface(S);
  const ScreenPolicy policy = cfg.make_policy(S);
  const std::vector<Vector> points = resolve_points(cfg, S, H);

  RunOutcome out;
  out.report["config"] = cfg.echo();
  const ValidationReport sval = validate_structure(S, kStructureTrials, cfg.tol.residual);
  out.report["structure"] = structure_block(sval);

  IdentityTable table;
  std::vector<PointResult> results;
  json records = json::array();
  bool frames_ok = true;
  bool gw_ok = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointResult r = process_point(S, H, policy, cfg.tol, static_cast<int>(i), points[i], table);
    frames_ok = frames_ok && r.frame_ok;
    gw_ok = gw_ok && r.gw_ok;
    records.push_back(r.record);
    results.push_back(std::move(r));
  }
  out.report["points"] = std::move(records);

  // assemble the identity table; FD-extracted identities are gated by the
  // step-sized tolerance, the algebraic ones by the residual tolerance
  const double rtol = cfg.tol.residual;
  const double fdtol = cfg.tol.fd_step;
  json identities = json::array();
  bool all_pass = sval.pass() && frames_ok && gw_ok;
  auto emit = [&](const std::string& name, double tolerance) {
    const auto it = table.rows.find(name);
    const double value = it == table.rows.end() ? 0.0 : it->second.value;
    const int worst = it == table.rows.end() ? -1 : it->second.point;
    const bool pass = value <= tolerance;
    all_pass = all_pass && pass;
    identities.push_back(json{{"name", name},
                              {"max_residual", value},
                              {"tolerance", tolerance},
                              {"worst_point", worst < 0 ? json(nullptr) : json(worst)},
                              {"pass", pass}});
  };

  identities.push_back(json{{"name", "structure_axioms"},
                            {"max_residual", sval.max_residual()},
                            {"tolerance", rtol},
                            {"worst_point", nullptr},
                            {"pass", sval.pass()}});
  all_pass = all_pass && sval.pass();

  for (const char* name :
       {"frame_xi_null", "frame_n_null", "frame_pairing", "frame_screen_xi", "frame_screen_n",
        "frame_phi_in_screen", "frame_dprime_orth", "unit_identity", "f_pairing", "f_vanishing",
        "gram_det_identity", "decomposition_residual", "wprime_orth", "dprime_pairing", "dprime_in_screen",
        "ascreen_iff_gram_det_zero", "calin_a_where_b_zero", "independence",
        "induced_phi_squared", "induced_omega_phi_vs_eta", "induced_omega_xi",
        "induced_phi_xi_match", "induced_tangency", "hermitian_g_tilde", "compatibility_induced",
        "skew_exchange", "g_tilde_xi", "g_tilde_phi_xi", "witness_omega_vs_b",
        "witness_defect_vs_b_sq"})
    emit(name, rtol);
  for (const char* name :
       {"gw_b_symmetry", "gw_shape_B", "gw_shape_C", "gw_nabla_g", "gw_b_xi_column"})
    emit(name, fdtol);

  out.report["identities"] = std::move(identities);
  json summary = summary_block(results, table);
  summary["pass"] = all_pass;
  out.report["summary"] = std::move(summary);
  out.exit_code = all_pass ? 0 : 1;
  return out;
}

json frame_dump(const RunConfig& cfg, const Vector& point) {
  const AmbientStructure S = cfg.make_structure();
  const Hypersurface H = cfg.make_surface(S);
  const ScreenPolicy policy = cfg.make_policy(S);

  const NullFrame frame = build_null_frame(S, H, point, policy, cfg.tol.null_tol);
  const ZetaDecomposition dec = decompose_zeta(S, frame, cfg.tol.residual);
  const Classification cls = classify(dec, cfg.tol.residual);

  json out;
  out["point"] = vec_json(frame.point);
  out["xi"] = vec_json(frame.xi);
  out["N"] = vec_json(frame.N);
  out["phi_xi"] = vec_json(frame.phi_xi);
  out["phi_N"] = vec_json(frame.phi_N);
  out["screen"] = columns_json(frame.screen);
  out["dprime"] = columns_json(frame.dprime);
  out["a"] = dec.a;
  out["b"] = dec.b;
  out["f1"] = dec.f1;
  out["f2"] = dec.f2;
  out["w_prime"] = vec_json(dec.Wprime);
  out["class"] = to_string(cls.label);
  out["tangential"] = cls.tangential;
  out["proper"] = cls.proper;
  out["lambda"] = dec.lambda ? json(*dec.lambda) : json(nullptr);
  out["gram_det"] = dec.gram_det;
  out["degenerate_span"] = frame.degenerate_span;
  return out;
}

}  // namespace nullsurf

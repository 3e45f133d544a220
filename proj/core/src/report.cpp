#include "holomotion/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <system_error>
#include <unistd.h>

#include "holomotion/homotopy.hpp"

namespace holomotion {

using nlohmann::json;

namespace {

// Drops a leading "<stage>: " so the stage is not named twice.
std::string without_prefix(const char* name, const std::string& what) {
  const std::string prefix = std::string(name) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const ConstraintViolation& e) {
    throw StageError(name, e.predicate(), without_prefix(name, e.what()));
  } catch (const SubcheckError& e) {
    throw StageError(name, e.subcheck(), without_prefix(name, e.what()));
  } catch (const Error& e) {
    throw StageError(name, "", without_prefix(name, e.what()));
  }
}

WindingOptions winding_options(const RunConfig& c) {
  WindingOptions w;
  w.max_depth = c.max_depth;
  return w;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void RunConfig::validate() const {
  if (n < 2) throw DomainError("n must be at least 2");
  if (R && !(*R > 0.0)) throw DomainError("R must be positive");
  if (r && !(*r > 0.0)) throw DomainError("r must be positive");
  if (z0 && !(*z0 > 0.0)) throw DomainError("z0 must be positive");
  if (samples < 16 || (samples & (samples - 1)) != 0) {
    throw DomainError("samples must be a power of two, at least 16");
  }
  if (max_depth < 1) throw DomainError("max_depth must be positive");
  if (!(rtol > 0.0)) throw DomainError("rtol must be positive");
}

json config_to_json(const RunConfig& c) {
  return json{{"n", c.n},
              {"R", optional_number(c.R)},
              {"r", optional_number(c.r)},
              {"z0", optional_number(c.z0)},
              {"samples", c.samples},
              {"max_depth", c.max_depth},
              {"rtol", c.rtol},
              {"out", c.out}};
}

RunConfig config_from_json(const json& j, RunConfig base) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  static const std::set<std::string> known{"n", "R", "r", "z0", "samples",
                                           "max_depth", "rtol", "out"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw DomainError("unknown config key '" + key + "'");
  }
  auto opt = [&](const char* key, std::optional<double>& field) {
    if (!j.contains(key)) return;
    field = j.at(key).is_null() ? std::nullopt : std::optional<double>(j.at(key).get<double>());
  };
  try {
    if (j.contains("n")) base.n = j.at("n").get<int>();
    opt("R", base.R);
    opt("r", base.r);
    opt("z0", base.z0);
    if (j.contains("samples")) base.samples = j.at("samples").get<int>();
    if (j.contains("max_depth")) base.max_depth = j.at("max_depth").get<int>();
    if (j.contains("rtol")) base.rtol = j.at("rtol").get<double>();
    if (j.contains("out")) base.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed config: ") + e.what());
  }
  return base;
}

bool Report::all_certified() const {
  const bool checks_ok =
      std::all_of(certificates.checks.begin(), certificates.checks.end(),
                  [](const CheckEntry& c) { return c.certified; });
  const bool windings_ok = std::all_of(windings.begin(), windings.end(),
                                       [](const auto& kv) { return kv.second.certified; });
  return checks_ok && windings_ok;
}

void to_json(json& j, const Report& r) {
  json checks = json::array();
  for (const CheckEntry& c : r.certificates.checks) {
    checks.push_back({{"name", c.name}, {"certified", c.certified}, {"value", c.value}});
  }
  json windings = json::object();
  for (const auto& [key, w] : r.windings) {
    windings[key] = {{"value", w.value}, {"certified", w.certified}, {"samples", w.samples}};
  }
  const auto& m = r.certificates.injectivity_margins;
  j = json{
      {"config", config_to_json(r.config)},
      {"a_n", r.a_n},
      {"params",
       {{"R", r.params.R}, {"r", r.params.r}, {"m_est", r.params.m_est}, {"z0", r.params.z0}}},
      {"certificates",
       {{"rouche_margin", r.certificates.rouche_margin},
        {"rouche_fragile", r.certificates.rouche_fragile},
        {"zeros_of_h", r.certificates.zeros_of_h},
        {"g_unit_circle_dev", r.certificates.g_unit_circle_dev},
        {"injectivity_margins",
         {{"min_abs_g", m.min_abs_g},
          {"min_abs_g_minus_z0", m.min_abs_g_minus_z0},
          {"max_abs_g", m.max_abs_g}}},
        {"basepoint_residual", r.certificates.basepoint_residual},
        {"holomorphy_residual", r.certificates.holomorphy_residual},
        {"checks", checks}}},
      {"windings", windings},
      {"verdict_zero_winding",
       r.verdict_zero_winding ? json(*r.verdict_zero_winding) : json(nullptr)},
      {"homotopy",
       {{"word", r.homotopy.word},
        {"reduced_word", r.homotopy.reduced_word},
        {"cyclic_word", r.homotopy.cyclic_word},
        {"abelianization", r.homotopy.abelianization},
        {"agrees_with_lemma_pr", r.homotopy.agrees_with_lemma_pr}}},
      {"figures", r.figures},
  };
}

void from_json(const json& j, Report& r) {
  r.config = config_from_json(j.at("config"));
  r.a_n = j.at("a_n").get<double>();
  const json& p = j.at("params");
  r.params = {p.at("R").get<double>(), p.at("r").get<double>(), p.at("m_est").get<double>(),
              p.at("z0").get<double>()};
  const json& c = j.at("certificates");
  r.certificates.rouche_margin = c.at("rouche_margin").get<double>();
  r.certificates.rouche_fragile = c.at("rouche_fragile").get<bool>();
  r.certificates.zeros_of_h = c.at("zeros_of_h").get<int>();
  r.certificates.g_unit_circle_dev = c.at("g_unit_circle_dev").get<double>();
  const json& m = c.at("injectivity_margins");
  r.certificates.injectivity_margins = {m.at("min_abs_g").get<double>(),
                                        m.at("min_abs_g_minus_z0").get<double>(),
                                        m.at("max_abs_g").get<double>()};
  r.certificates.basepoint_residual = c.at("basepoint_residual").get<double>();
  r.certificates.holomorphy_residual = c.at("holomorphy_residual").get<double>();
  r.certificates.checks.clear();
  for (const json& e : c.at("checks")) {
    r.certificates.checks.push_back(
        {e.at("name").get<std::string>(), e.at("certified").get<bool>(), e.at("value").get<double>()});
  }
  r.windings.clear();
  for (const auto& [key, w] : j.at("windings").items()) {
    r.windings[key] = {w.at("value").get<int>(), w.at("certified").get<bool>(),
                       w.at("samples").get<std::size_t>()};
  }
  const json& v = j.at("verdict_zero_winding");
  r.verdict_zero_winding = v.is_null() ? std::nullopt : std::optional<bool>(v.get<bool>());
  const json& h = j.at("homotopy");
  r.homotopy.word = h.at("word").get<std::string>();
  r.homotopy.reduced_word = h.at("reduced_word").get<std::string>();
  r.homotopy.cyclic_word = h.at("cyclic_word").get<std::string>();
  r.homotopy.abelianization = h.at("abelianization").get<std::array<int, 2>>();
  r.homotopy.agrees_with_lemma_pr = h.at("agrees_with_lemma_pr").get<bool>();
  r.figures = j.at("figures").get<std::vector<std::string>>();
}

std::string emit_report(const Report& report) { return json(report).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return json::parse(text).get<Report>(); }

ConstructionParams construct_params(const RunConfig& config) {
  config.validate();
  return stage("select_parameters", [&] {
    SelectionOptions options;
    options.rtol = config.rtol;
    options.initial_samples = config.samples;
    return select_parameters(config.n, {config.R, config.r, config.z0}, options);
  });
}

Report run_construct(const RunConfig& config) {
  Report report;
  report.config = config;
  report.a_n = stage("solve_a", [&] { return solve_a(config.n); });
  const ConstructionParams params = construct_params(config);
  report.params = {params.R, params.r, params.m_est, params.z0};
  auto& checks = report.certificates.checks;

  const CertificateReport cert = stage("certify_construction", [&] {
    CertificateOptions options;
    options.samples = config.samples;
    options.winding = winding_options(config);
    options.rtol = config.rtol;
    return certify_construction(params, options);
  });
  report.certificates.rouche_margin = cert.rouche_margin;
  report.certificates.rouche_fragile = cert.rouche_fragile;
  report.certificates.zeros_of_h = cert.zeros_of_h_in_D;
  report.certificates.g_unit_circle_dev = cert.g_unit_circle_dev;
  for (const CheckItem& item : cert.items) checks.push_back({item.name, item.pass, item.value});

  const MotionSpec spec = make_motion(params);
  const AxiomReport axioms = stage("axiom_check", [&] {
    AxiomOptions options;
    options.boundary_samples = config.samples;
    options.rtol = config.rtol;
    return axiom_check(spec, options);
  });
  report.certificates.injectivity_margins = {axioms.min_abs_g_on_boundary,
                                             axioms.min_abs_g_minus_z0_on_boundary,
                                             axioms.max_abs_g_on_boundary};
  report.certificates.basepoint_residual = axioms.basepoint_residual;
  report.certificates.holomorphy_residual = axioms.holomorphy_residual;
  checks.push_back({"axiom i: basepoint identity", axioms.basepoint_pass,
                    axioms.basepoint_residual});
  checks.push_back({"axiom ii: injectivity", axioms.injectivity_pass,
                    axioms.min_abs_g_minus_z0_on_boundary});
  checks.push_back({"axiom iii: holomorphy", axioms.holomorphy_pass,
                    axioms.holomorphy_residual});

  const PairWindingTable table = stage("zero_winding_verdict", [&] {
    VerdictOptions options;
    options.samples = config.samples;
    options.winding = winding_options(config);
    return zero_winding_verdict(spec, options);
  });
  for (const PairWinding& e : table.entries) {
    report.windings[pair_key(e.pair)] = {e.report.winding, e.report.certified,
                                         e.report.samples_used};
  }
  report.verdict_zero_winding = table.verdict;
  checks.push_back({"zero winding condition", table.verdict.value_or(false),
                    table.verdict ? 1.0 : 0.0});
  const int xi0 = table.at(kAllPairs[0]).winding;
  const int xi_inf = table.at(kAllPairs[2]).winding;
  checks.push_back({"xi_inf winding = -(xi_0 winding)", xi_inf == -xi0,
                    static_cast<double>(xi_inf + xi0)});

  const PairWindingTable perturbed = stage("zero_winding_verdict", [&] {
    VerdictOptions options;
    options.samples = config.samples;
    options.winding = winding_options(config);
    options.radius_factor = 1.01;
    return zero_winding_verdict(spec, options);
  });
  bool same = perturbed.verdict.has_value();
  for (std::size_t k = 0; k < perturbed.entries.size(); ++k) {
    same = same && perturbed.entries[k].report.winding == table.entries[k].report.winding;
  }
  checks.push_back({"windings unchanged on perturbed generator", same, same ? 1.0 : 0.0});

  const HomotopyClass loop = run_word(config);
  report.homotopy.word = loop.word.to_string();
  report.homotopy.reduced_word = loop.reduced.to_string();
  report.homotopy.cyclic_word = loop.cyclic.to_string();
  report.homotopy.abelianization = {loop.abelianization.first, loop.abelianization.second};
  report.homotopy.agrees_with_lemma_pr = loop.nontrivial();
  const auto [about_zero, about_z0] = stage("trace_word", [&] {
    const ClosedCurve image =
        map_curve(params.g, circle_curve(0.0, 1.0, config.samples));
    return std::pair{winding_number(image, 0.0, winding_options(config)).winding,
                     winding_number(image, params.z0, winding_options(config)).winding};
  });
  const bool abel_ok = loop.abelianization.first == about_zero &&
                       loop.abelianization.second == about_z0;
  checks.push_back({"abelianization matches windings", abel_ok, abel_ok ? 1.0 : 0.0});
  return report;
}

WindingReport run_winding(const RunConfig& config, LabelPair pair) {
  const ConstructionParams params = construct_params(config);
  return stage("zero_winding_verdict", [&] {
    const MotionSpec spec = make_motion(params);
    return winding_number(delta_curve(spec, pair, config.samples), 0.0,
                          winding_options(config));
  });
}

HomotopyClass run_word(const RunConfig& config) {
  const ConstructionParams params = construct_params(config);
  return stage("trace_word", [&] {
    const PuncturedPlane plane = PuncturedPlane::with_default_rays(0.0, params.z0);
    const ClosedCurve image = map_curve(params.g, circle_curve(0.0, 1.0, config.samples));
    TraceOptions options;
    options.max_depth = config.max_depth;
    return classify_loop(plane, image, options);
  });
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::create_directories(dir);
  const fs::path tmp =
      dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace holomotion

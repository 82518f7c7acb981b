// Batch verification: JSON run configuration, per-point pipeline and
// machine-readable reports.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "circulant/algebra.hpp"
#include "circulant/curvature.hpp"
#include "circulant/fields.hpp"
#include "circulant/frames.hpp"
#include "circulant/log.hpp"
#include "circulant/random.hpp"

namespace circulant {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Bad configuration; the message starts with the offending field path or
/// with the line/column of a syntax error.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Tolerances {
  double frame_tol = 1e-12;
  double curvature_tol = 1e-9;
  double theorem_tol = 1e-6;

  static Tolerances defaults(DerivativeMode mode) {
    if (mode == DerivativeMode::analytic) return {};
    return {1e-12, 1e-6, 1e-5};
  }
};

enum class ReportFormat { json, csv };

struct OutputSpec {
  ReportFormat format = ReportFormat::json;
  std::string path;  // empty: do not write
};

struct RunConfig {
  Family family = Family::constant;
  std::vector<double> params;
  DerivativeMode mode = DerivativeMode::analytic;
  double fd_step = kDefaultFdStep;
  std::vector<ChartPoint> points;
  std::vector<Vector> seeds;
  std::optional<std::uint64_t> rng_seed;
  std::size_t random_seed_count = 0;  // > 0 when seeds came from "random:N"
  Tolerances tolerances{};
  OutputSpec output{};
  unsigned threads = 1;
  Json echo;  // normalized copy of the parsed configuration

  FieldFamilySpec family_spec() const { return make_family(family, params, mode, fd_step); }
};

struct SeedRecord {
  Vector seed{};
  std::array<double, 6> mu{};
  double theorem3_residual = 0.0;
  double theorem3_relative = 0.0;  // theorem3_residual / (1 + |mu1|)
  double zero_residual = 0.0;
  std::vector<double> identity_residuals;
  double identity_max = 0.0;
};

struct PointRecord {
  ChartPoint point{};
  Coeffs coeffs{};
  double parallel_residual = 0.0;         // gradient criterion, unit B coefficient
  double parallel_residual_halved = 0.0;  // gradient criterion, halved B coefficient
  double nabla_q_residual = 0.0;
  double frame_residual = 0.0;  // spectral orthonormal q-base, max |Gram - I|
  double metric_compatibility = 0.0;
  SymmetryResiduals symmetry{};
  double q_invariance_residual = 0.0;
  std::vector<SeedRecord> seeds;
};

enum class CriterionStatus { pass, fail, not_applicable };

inline std::string_view to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::pass: return "pass";
    case CriterionStatus::fail: return "fail";
    case CriterionStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

struct Criterion {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  CriterionStatus status = CriterionStatus::pass;
};

struct VerificationReport {
  std::vector<PointRecord> records;
  std::vector<Criterion> criteria;
  bool parallel = true;  // D q = 0 at every point, to curvature_tol
  double max_nabla_q = 0.0;
  double max_parallel_residual = 0.0;
  double max_parallel_residual_halved = 0.0;
  bool passed = true;
  Json config_echo;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void field_error(const std::string& field, const std::string& msg) {
  throw ConfigError("field '" + field + "': " + msg);
}

inline double get_number(const Json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) field_error(field, "must be finite");
  return v;
}

inline std::vector<double> get_numbers(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_number(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline Vector get_vector(const Json& j, const std::string& field) {
  const auto v = get_numbers(j, field);
  if (v.size() != 4) field_error(field, "expected 4 numbers, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3]};
}

// A per-axis quantity given either as a scalar or as 4 numbers.
inline Vector get_axes(const Json& j, const std::string& field) {
  if (j.is_number()) {
    const double v = get_number(j, field);
    return {v, v, v, v};
  }
  return get_vector(j, field);
}

inline Family parse_family(const std::string& name) {
  if (name == "constant") return Family::constant;
  if (name == "s_wave") return Family::s_wave;
  if (name == "parallel_wave") return Family::parallel_wave;
  if (name == "control") return Family::control;
  if (name == "custom")
    field_error("family.name", "custom families need analytic derivatives and are only available through the library API");
  field_error("family.name", "unknown family '" + name + "' (expected constant, s_wave, parallel_wave or control)");
}

inline std::vector<ChartPoint> expand_grid(const Json& g) {
  if (!g.is_object()) field_error("grid", "expected an object with min, max, count");
  for (const char* key : {"min", "max", "count"})
    if (!g.contains(key)) field_error(std::string("grid.") + key, "missing");
  const Vector lo = get_axes(g["min"], "grid.min");
  const Vector hi = get_axes(g["max"], "grid.max");
  const Vector cnt = get_axes(g["count"], "grid.count");
  std::array<std::size_t, 4> n{};
  for (std::size_t a = 0; a < kDim; ++a) {
    if (cnt[a] < 1 || cnt[a] != std::floor(cnt[a]) || cnt[a] > 1000)
      field_error("grid.count", "counts must be integers in [1, 1000]");
    n[a] = static_cast<std::size_t>(cnt[a]);
  }
  const auto coord = [&](std::size_t a, std::size_t i) {
    return n[a] == 1 ? lo[a] : lo[a] + (hi[a] - lo[a]) * static_cast<double>(i) / static_cast<double>(n[a] - 1);
  };
  std::vector<ChartPoint> pts;
  for (std::size_t i0 = 0; i0 < n[0]; ++i0)
    for (std::size_t i1 = 0; i1 < n[1]; ++i1)
      for (std::size_t i2 = 0; i2 < n[2]; ++i2)
        for (std::size_t i3 = 0; i3 < n[3]; ++i3) pts.push_back({coord(0, i0), coord(1, i1), coord(2, i2), coord(3, i3)});
  return pts;
}

inline Json vec_json(const Vector& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

}  // namespace detail

/// Parses and validates a JSON run configuration. `derivative_mode`
/// overrides are applied by the caller before tolerances are defaulted, so
/// they are taken here as an optional argument.
inline RunConfig parse_config(const std::string& text, std::optional<DerivativeMode> mode_override = std::nullopt) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("syntax error at " + detail::line_col(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");

  static const std::array<const char*, 10> known{"family",    "derivative_mode", "fd_step", "points", "grid",
                                                 "seeds",     "rng_seed",        "tolerances", "output", "threads"};
  for (const auto& [key, _] : j.items())
    if (std::find_if(known.begin(), known.end(), [&](const char* k) { return key == k; }) == known.end())
      detail::field_error(key, "unknown field");

  RunConfig cfg;
  if (!j.contains("family") || !j["family"].is_object()) detail::field_error("family", "missing or not an object");
  const auto& fam = j["family"];
  if (!fam.contains("name") || !fam["name"].is_string()) detail::field_error("family.name", "missing or not a string");
  cfg.family = detail::parse_family(fam["name"].get<std::string>());
  if (!fam.contains("params")) detail::field_error("family.params", "missing");
  cfg.params = detail::get_numbers(fam["params"], "family.params");

  if (j.contains("derivative_mode")) {
    const auto& m = j["derivative_mode"];
    if (m == "analytic") {
      cfg.mode = DerivativeMode::analytic;
    } else if (m == "fd") {
      cfg.mode = DerivativeMode::finite_difference;
    } else {
      detail::field_error("derivative_mode", "expected \"analytic\" or \"fd\"");
    }
  }
  if (mode_override) cfg.mode = *mode_override;
  if (j.contains("fd_step")) {
    cfg.fd_step = detail::get_number(j["fd_step"], "fd_step");
    if (!(cfg.fd_step > 0.0)) detail::field_error("fd_step", "must be > 0");
  }

  try {
    (void)cfg.family_spec();
  } catch (const Error& e) {
    detail::field_error("family.params", e.what());
  }

  if (j.contains("points") == j.contains("grid")) detail::field_error("points", "give exactly one of 'points' or 'grid'");
  if (j.contains("points")) {
    const auto& pts = j["points"];
    if (!pts.is_array() || pts.empty()) detail::field_error("points", "expected a non-empty array of 4-vectors");
    for (std::size_t i = 0; i < pts.size(); ++i)
      cfg.points.push_back(detail::get_vector(pts[i], "points[" + std::to_string(i) + "]"));
  } else {
    cfg.points = detail::expand_grid(j["grid"]);
  }

  if (j.contains("rng_seed")) {
    const auto& s = j["rng_seed"];
    if (!s.is_number_unsigned()) detail::field_error("rng_seed", "expected a non-negative integer");
    cfg.rng_seed = s.get<std::uint64_t>();
  }
  if (!j.contains("seeds")) detail::field_error("seeds", "missing");
  const auto& seeds = j["seeds"];
  if (seeds.is_string()) {
    const auto s = seeds.get<std::string>();
    const std::string prefix = "random:";
    if (s.rfind(prefix, 0) != 0) detail::field_error("seeds", "expected \"random:N\" or an array of 4-vectors");
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(s.substr(prefix.size()), &used);
      if (used != s.size() - prefix.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      detail::field_error("seeds", "bad count in \"" + s + "\"");
    }
    if (n < 1 || n > 100000) detail::field_error("seeds", "random count must be in [1, 100000]");
    if (!cfg.rng_seed) detail::field_error("rng_seed", "required when seeds are \"random:N\"");
    cfg.random_seed_count = n;
    cfg.seeds = random_qbase_seeds(n, *cfg.rng_seed);
  } else {
    if (!seeds.is_array() || seeds.empty()) detail::field_error("seeds", "expected \"random:N\" or a non-empty array");
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      const std::string field = "seeds[" + std::to_string(i) + "]";
      const auto v = detail::get_vector(seeds[i], field);
      if (!qbase_predicate(v)) detail::field_error(field, "vector does not generate a q-base");
      cfg.seeds.push_back(v);
    }
  }

  cfg.tolerances = Tolerances::defaults(cfg.mode);
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) detail::field_error("tolerances", "expected an object");
    for (const auto& [key, val] : t.items()) {
      double* slot = key == "frame_tol"       ? &cfg.tolerances.frame_tol
                     : key == "curvature_tol" ? &cfg.tolerances.curvature_tol
                     : key == "theorem_tol"   ? &cfg.tolerances.theorem_tol
                                              : nullptr;
      if (slot == nullptr) detail::field_error("tolerances." + key, "unknown tolerance");
      *slot = detail::get_number(val, "tolerances." + key);
      if (!(*slot > 0.0)) detail::field_error("tolerances." + key, "must be > 0");
    }
  }

  if (j.contains("output")) {
    const auto& o = j["output"];
    if (!o.is_object()) detail::field_error("output", "expected an object");
    if (o.contains("format")) {
      if (o["format"] == "json") {
        cfg.output.format = ReportFormat::json;
      } else if (o["format"] == "csv") {
        cfg.output.format = ReportFormat::csv;
      } else {
        detail::field_error("output.format", "expected \"json\" or \"csv\"");
      }
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) detail::field_error("output.path", "expected a string");
      cfg.output.path = o["path"].get<std::string>();
    }
  }

  if (j.contains("threads")) {
    const auto& t = j["threads"];
    if (!t.is_number_unsigned() || t.get<unsigned>() < 1 || t.get<unsigned>() > 256)
      detail::field_error("threads", "expected an integer in [1, 256]");
    cfg.threads = t.get<unsigned>();
  }

  // Admissibility over the chart is guaranteed by the family check; re-check
  // each point so errors name the point.
  const auto spec = cfg.family_spec();
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    const auto v = admissibility_violation(spec.value_at(cfg.points[i]));
    if (!v.empty()) detail::field_error("points[" + std::to_string(i) + "]", "metric violates " + v);
  }

  Json echo;
  echo["family"] = {{"name", std::string(to_string(cfg.family))}, {"params", cfg.params}};
  echo["derivative_mode"] = std::string(to_string(cfg.mode));
  echo["fd_step"] = cfg.fd_step;
  if (j.contains("grid")) {
    echo["grid"] = j["grid"];
  }
  echo["point_count"] = cfg.points.size();
  if (cfg.random_seed_count > 0) {
    echo["seeds"] = "random:" + std::to_string(cfg.random_seed_count);
  } else {
    echo["seeds"] = Json::array();
    for (const auto& s : cfg.seeds) echo["seeds"].push_back(detail::vec_json(s));
  }
  echo["rng_seed"] = cfg.rng_seed ? Json(*cfg.rng_seed) : Json(nullptr);
  echo["tolerances"] = {{"frame_tol", cfg.tolerances.frame_tol},
                        {"curvature_tol", cfg.tolerances.curvature_tol},
                        {"theorem_tol", cfg.tolerances.theorem_tol}};
  echo["output"] = {{"format", cfg.output.format == ReportFormat::json ? "json" : "csv"}, {"path", cfg.output.path}};
  cfg.echo = std::move(echo);
  return cfg;
}

inline RunConfig load_config(const std::string& path, std::optional<DerivativeMode> mode_override = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text, mode_override);
}

inline PointRecord evaluate_point(const FieldFamilySpec& spec, const ChartPoint& p, const std::vector<Vector>& seeds) {
  PointRecord rec;
  rec.point = p;
  const auto jet = eval_jet(spec, p);
  rec.coeffs = jet.value;
  const auto mj = metric_jet(jet);
  const auto gamma = christoffel(mj);
  const auto curv = riemann(mj);
  rec.parallel_residual = parallel_residual(spec, p, GradBRule::unit);
  rec.parallel_residual_halved = parallel_residual(spec, p, GradBRule::halved);
  rec.nabla_q_residual = nabla_q_residual(gamma);
  rec.frame_residual = verify_frame(rec.coeffs, spectral_frame(rec.coeffs).seed).max_deviation;
  rec.metric_compatibility = metric_compatibility_residual(mj, gamma);
  rec.symmetry = symmetry_residuals(curv);
  rec.q_invariance_residual = tensor_q_invariance_residual(curv);
  for (const auto& s : seeds) {
    SeedRecord sr;
    sr.seed = s;
    const auto sec = q_section_curvatures(curv, rec.coeffs, s);
    sr.mu = sec.mu;
    sr.theorem3_residual = sec.theorem3_residual;
    sr.theorem3_relative = sec.theorem3_residual / (1.0 + std::abs(sec.mu[0]));
    sr.zero_residual = sec.zero_residual;
    for (const auto& r : identity_suite(curv, s)) {
      sr.identity_residuals.push_back(r.value);
      sr.identity_max = std::max(sr.identity_max, r.value);
    }
    rec.seeds.push_back(std::move(sr));
  }
  return rec;
}

/// Evaluates summary criteria from the per-point records alone.
inline void summarize(VerificationReport& rep, const Tolerances& tol) {
  double frame = 0.0;
  double frame_scaled = 0.0;
  double symmetry = 0.0;
  double compat = 0.0;
  double nabla = 0.0;
  double parallel = 0.0;
  double parallel_halved = 0.0;
  double qinv = 0.0;
  double t3 = 0.0;
  double zero = 0.0;
  double ident = 0.0;
  for (const auto& r : rep.records) {
    frame = std::max(frame, r.frame_residual);
    frame_scaled = std::max(frame_scaled, r.frame_residual / (1.0 + r.coeffs.A));
    symmetry = std::max(symmetry, r.symmetry.max());
    compat = std::max(compat, r.metric_compatibility);
    nabla = std::max(nabla, r.nabla_q_residual);
    parallel = std::max(parallel, r.parallel_residual);
    parallel_halved = std::max(parallel_halved, r.parallel_residual_halved);
    qinv = std::max(qinv, r.q_invariance_residual);
    for (const auto& s : r.seeds) {
      t3 = std::max(t3, s.theorem3_relative);
      zero = std::max(zero, s.zero_residual);
      ident = std::max(ident, s.identity_max);
    }
  }
  rep.parallel = nabla <= tol.curvature_tol;
  rep.max_nabla_q = nabla;
  rep.max_parallel_residual = parallel;
  rep.max_parallel_residual_halved = parallel_halved;
  const auto check = [](double v, double t) { return v <= t ? CriterionStatus::pass : CriterionStatus::fail; };
  const auto theorem = [&](double v, double t) { return rep.parallel ? check(v, t) : CriterionStatus::not_applicable; };
  rep.criteria = {
      {"orthonormal_qframe", frame_scaled, tol.frame_tol, check(frame_scaled, tol.frame_tol)},
      {"riemann_symmetries", symmetry, tol.curvature_tol, check(symmetry, tol.curvature_tol)},
      {"metric_compatibility", compat, tol.curvature_tol, check(compat, tol.curvature_tol)},
      {"q_invariance", qinv, tol.theorem_tol, theorem(qinv, tol.theorem_tol)},
      {"theorem3_equal_curvatures", t3, tol.theorem_tol, theorem(t3, tol.theorem_tol)},
      {"theorem3_vanishing_curvatures", zero, tol.theorem_tol, theorem(zero, tol.theorem_tol)},
      {"curvature_identities", ident, tol.theorem_tol, theorem(ident, tol.theorem_tol)},
  };
  rep.passed = std::none_of(rep.criteria.begin(), rep.criteria.end(),
                            [](const Criterion& c) { return c.status == CriterionStatus::fail; });
}

inline Json to_json(const PointRecord& r) {
  Json j;
  j["point"] = detail::vec_json(r.point);
  j["coeffs"] = {{"A", r.coeffs.A}, {"B", r.coeffs.B}, {"C", r.coeffs.C}};
  j["parallel_residual"] = r.parallel_residual;
  j["parallel_residual_halved"] = r.parallel_residual_halved;
  j["nabla_q_residual"] = r.nabla_q_residual;
  j["frame_residual"] = r.frame_residual;
  j["metric_compatibility"] = r.metric_compatibility;
  j["symmetry_residuals"] = {{"antisym_ij", r.symmetry.antisym_ij},
                             {"antisym_kl", r.symmetry.antisym_kl},
                             {"pair", r.symmetry.pair},
                             {"bianchi", r.symmetry.bianchi}};
  j["q_invariance_residual"] = r.q_invariance_residual;
  j["seeds"] = Json::array();
  for (const auto& s : r.seeds) {
    Json sj;
    sj["seed"] = detail::vec_json(s.seed);
    sj["mu"] = s.mu;
    sj["theorem3_residual"] = s.theorem3_residual;
    sj["theorem3_relative"] = s.theorem3_relative;
    sj["zero_residual"] = s.zero_residual;
    sj["identity_residuals"] = s.identity_residuals;
    j["seeds"].push_back(std::move(sj));
  }
  return j;
}

inline Json to_json(const VerificationReport& rep) {
  Json j;
  j["tool"] = {{"name", "cml"}, {"version", kToolVersion}};
  j["config"] = rep.config_echo;
  j["records"] = Json::array();
  for (const auto& r : rep.records) j["records"].push_back(to_json(r));
  Json summary;
  summary["status"] = rep.passed ? "pass" : "fail";
  summary["parallel"] = rep.parallel;
  summary["max_nabla_q_residual"] = rep.max_nabla_q;
  summary["max_parallel_residual"] = rep.max_parallel_residual;
  summary["max_parallel_residual_halved"] = rep.max_parallel_residual_halved;
  summary["criteria"] = Json::array();
  for (const auto& c : rep.criteria)
    summary["criteria"].push_back(
        {{"name", c.name}, {"max", c.value}, {"tolerance", c.tolerance}, {"status", std::string(to_string(c.status))}});
  j["summary"] = std::move(summary);
  return j;
}

namespace detail {

inline std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

/// One row per (point, seed).
inline std::string to_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "point_index,x1,x2,x3,x4,A,B,C,parallel_residual,parallel_residual_halved,nabla_q_residual,frame_residual,"
        "metric_compatibility,symmetry_max,q_invariance_residual,seed_index,s1,s2,s3,s4,"
        "mu1,mu2,mu3,mu4,mu5,mu6,theorem3_residual,theorem3_relative,zero_residual,identity_max\n";
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    for (std::size_t k = 0; k < r.seeds.size(); ++k) {
      const auto& s = r.seeds[k];
      os << i;
      for (double v : r.point) os << ',' << detail::num(v);
      os << ',' << detail::num(r.coeffs.A) << ',' << detail::num(r.coeffs.B) << ',' << detail::num(r.coeffs.C);
      for (double v : {r.parallel_residual, r.parallel_residual_halved, r.nabla_q_residual, r.frame_residual, r.metric_compatibility,
                       r.symmetry.max(), r.q_invariance_residual})
        os << ',' << detail::num(v);
      os << ',' << k;
      for (double v : s.seed) os << ',' << detail::num(v);
      for (double v : s.mu) os << ',' << detail::num(v);
      for (double v : {s.theorem3_residual, s.theorem3_relative, s.zero_residual, s.identity_max})
        os << ',' << detail::num(v);
      os << '\n';
    }
  }
  return os.str();
}

inline std::string serialize(const VerificationReport& rep, ReportFormat format) {
  return format == ReportFormat::json ? to_json(rep).dump(2) + "\n" : to_csv(rep);
}

/// Runs the full pipeline. Points are evaluated independently (optionally on
/// several threads); the report is assembled in point order, so the output
/// does not depend on the thread count. Writes the report when the config
/// names an output path.
inline VerificationReport run_verify(const RunConfig& cfg) {
  const auto spec = cfg.family_spec();
  VerificationReport rep;
  rep.config_echo = cfg.echo;
  rep.records.resize(cfg.points.size());
  log::info("verify: " + std::to_string(cfg.points.size()) + " points x " + std::to_string(cfg.seeds.size()) + " seeds");

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.points.size())));
  std::vector<std::exception_ptr> errors(workers);
  const auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < cfg.points.size(); i += workers) {
        rep.records[i] = evaluate_point(spec, cfg.points[i], cfg.seeds);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (log::level() >= log::Level::debug)
    for (std::size_t i = 0; i < rep.records.size(); ++i)
      log::debug("point " + std::to_string(i) + ": nabla_q=" + detail::num(rep.records[i].nabla_q_residual));

  summarize(rep, cfg.tolerances);
  if (!cfg.output.path.empty()) {
    std::ofstream out(cfg.output.path, std::ios::binary);
    if (!out) throw Error("cannot write report to '" + cfg.output.path + "'");
    out << serialize(rep, cfg.output.format);
    log::info("report written to " + cfg.output.path);
  }
  return rep;
}

}  // namespace circulant

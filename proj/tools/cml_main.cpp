// cml: command-line front end for the circulant metric library.
//
//   cml inspect   --coeffs A,B,C | --config PATH --point x1,x2,x3,x4
//   cml qbase     --coeffs A,B,C [--seed-vector v1,v2,v3,v4]
//   cml pyramid   --coeffs A,B,C [--seed-vector v1,v2,v3,v4]
//   cml curvature --config PATH --point x1,x2,x3,x4 [--seed-vector ...] [--mode analytic|fd]
//   cml verify    --config PATH [--mode analytic|fd] [--format json|csv] [--out PATH]
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 bad input or configuration.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "circulant/circulant.hpp"

namespace {

using circulant::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::vector<double> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw circulant::InvalidArgument(flag + ": '" + item + "' is not a number");
    }
    if (used != item.size() || !std::isfinite(v))
      throw circulant::InvalidArgument(flag + ": '" + item + "' is not a finite number");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw circulant::InvalidArgument(flag + ": expected " + std::to_string(expected) + " comma-separated numbers");
  return out;
}

circulant::Coeffs parse_coeffs(const std::string& text) {
  const auto v = parse_list(text, 3, "--coeffs");
  return {v[0], v[1], v[2]};
}

circulant::Vector parse_vector(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, 4, flag);
  return {v[0], v[1], v[2], v[3]};
}

std::optional<circulant::DerivativeMode> parse_mode(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "analytic") return circulant::DerivativeMode::analytic;
  if (text == "fd") return circulant::DerivativeMode::finite_difference;
  throw circulant::InvalidArgument("--mode: expected analytic or fd");
}

Json vec_json(const circulant::Vector& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

Json mat_json(const circulant::Mat4<double>& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(Json::array({row[0], row[1], row[2], row[3]}));
  return j;
}

Json coeffs_json(const circulant::Coeffs& c) { return {{"A", c.A}, {"B", c.B}, {"C", c.C}}; }

Json inspect_json(const circulant::Coeffs& c) {
  Json j;
  j["coeffs"] = coeffs_json(c);
  j["admissible"] = circulant::is_admissible(c);
  const auto violation = circulant::admissibility_violation(c);
  j["violated_inequality"] = violation.empty() ? Json(nullptr) : Json(violation);
  const auto g = circulant::metric_matrix(c);
  j["metric"] = mat_json(g);
  j["eigenvalues"] = circulant::metric_eigenvalues(c);
  j["det_closed"] = circulant::metric_det_closed(c);
  j["det_lu"] = circulant::determinant(g);
  j["positive_definite"] = circulant::cholesky(g).has_value();
  return j;
}

Json frame_json(const circulant::Coeffs& c, const circulant::Vector& seed) {
  const auto res = circulant::verify_frame(c, seed);
  Json j;
  j["seed"] = vec_json(seed);
  j["vectors"] = Json::array();
  for (int k = 0; k < 4; ++k) j["vectors"].push_back(vec_json(circulant::apply_q(seed, k)));
  j["gram"] = mat_json(res.gram);
  j["max_deviation"] = res.max_deviation;
  return j;
}

Json paper_json(const circulant::PaperConstructionReport& r) {
  const auto num = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  Json j;
  j["status"] = std::string(circulant::to_string(r.status));
  j["x2"] = num(r.x2);
  j["sum_x1_x3"] = num(r.sum_x1_x3);
  j["prod_x1_x3"] = num(r.prod_x1_x3);
  j["discriminant_D"] = num(r.discriminant_D);
  j["candidate"] = r.candidate ? vec_json(*r.candidate) : Json(nullptr);
  j["max_deviation"] = r.residual ? Json(r.residual->max_deviation) : Json(nullptr);
  j["spectral_max_deviation"] = r.spectral_max_deviation;
  return j;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_inspect(const std::string& coeffs, const std::string& config, const std::string& point) {
  if (!coeffs.empty()) {
    print(inspect_json(parse_coeffs(coeffs)));
    return kExitPass;
  }
  if (config.empty() || point.empty())
    throw circulant::InvalidArgument("inspect needs --coeffs, or --config together with --point");
  const auto cfg = circulant::load_config(config);
  const auto p = parse_vector(point, "--point");
  auto j = inspect_json(cfg.family_spec().value_at(p));
  j["point"] = vec_json(p);
  print(j);
  return kExitPass;
}

int cmd_qbase(const std::string& coeffs, const std::string& seed) {
  const auto c = parse_coeffs(coeffs);
  circulant::require_admissible(c);
  Json j;
  j["coeffs"] = coeffs_json(c);
  if (!seed.empty()) {
    const auto x = parse_vector(seed, "--seed-vector");
    j["seed_vector"] = {{"vector", vec_json(x)},
                        {"polynomial", circulant::qbase_polynomial(x)},
                        {"det_qorbit", circulant::det_qorbit(x)},
                        {"is_qbase", circulant::qbase_predicate(x)},
                        {"frame", frame_json(c, x)}};
  }
  j["paper_construction"] = paper_json(circulant::paper_frame(c));
  const auto frame = circulant::spectral_frame(c);
  j["spectral_frame"] = frame_json(c, frame.seed);
  j["spectral_frame"]["is_qbase"] = circulant::qbase_predicate(frame.seed);
  print(j);
  return kExitPass;
}

int cmd_pyramid(const std::string& coeffs, const std::string& seed) {
  const auto c = parse_coeffs(coeffs);
  circulant::require_admissible(c);
  const auto x = seed.empty() ? circulant::spectral_frame(c).seed : parse_vector(seed, "--seed-vector");
  const auto r = circulant::pyramid_report(c, x);
  Json j;
  j["coeffs"] = coeffs_json(c);
  j["seed"] = vec_json(x);
  j["cos_alpha"] = r.cos_alpha;
  j["cos_beta"] = r.cos_beta;
  j["edge_sq_long"] = r.edge_sq_long;
  j["edge_sq_short"] = r.edge_sq_short;
  j["cos_gamma"] = r.cos_gamma;
  j["cos_delta"] = r.cos_delta;
  j["angle_sum_residual"] = r.angle_sum_residual;
  j["law_of_cosines_residual"] = r.law_of_cosines_residual;
  print(j);
  return kExitPass;
}

int cmd_curvature(const std::string& config, const std::string& point, const std::string& seed,
                  const std::string& mode) {
  if (config.empty() || point.empty()) throw circulant::InvalidArgument("curvature needs --config and --point");
  const auto cfg = circulant::load_config(config, parse_mode(mode));
  const auto spec = cfg.family_spec();
  const auto p = parse_vector(point, "--point");
  const auto jet = circulant::eval_jet(spec, p);
  const auto mj = circulant::metric_jet(jet);
  const auto gamma = circulant::christoffel(mj);
  const auto curv = circulant::riemann(mj);
  const auto sym = circulant::symmetry_residuals(curv);

  Json j;
  j["point"] = vec_json(p);
  j["coeffs"] = coeffs_json(jet.value);
  j["derivative_mode"] = std::string(circulant::to_string(spec.derivative_mode()));
  j["parallel_residual"] = circulant::parallel_residual(spec, p, circulant::GradBRule::unit);
  j["parallel_residual_halved"] = circulant::parallel_residual(spec, p, circulant::GradBRule::halved);
  j["nabla_q_residual"] = circulant::nabla_q_residual(gamma);
  j["metric_compatibility"] = circulant::metric_compatibility_residual(mj, gamma);
  j["symmetry_residuals"] = {
      {"antisym_ij", sym.antisym_ij}, {"antisym_kl", sym.antisym_kl}, {"pair", sym.pair}, {"bianchi", sym.bianchi}};
  j["q_invariance_residual"] = circulant::tensor_q_invariance_residual(curv);
  // Independent components R_ijkl with i<j, k<l, (i,j) <= (k,l).
  Json comps = Json::array();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t jj = i + 1; jj < 4; ++jj)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = k + 1; l < 4; ++l)
          if (i * 4 + jj <= k * 4 + l) comps.push_back({{"ijkl", {i + 1, jj + 1, k + 1, l + 1}}, {"value", curv(i, jj, k, l)}});
  j["riemann"] = std::move(comps);
  if (!seed.empty()) {
    const auto x = parse_vector(seed, "--seed-vector");
    const auto sec = circulant::q_section_curvatures(curv, jet.value, x);
    j["sections"] = {{"seed", vec_json(x)},
                     {"mu", sec.mu},
                     {"denominators", sec.denominators},
                     {"theorem3_residual", sec.theorem3_residual},
                     {"zero_residual", sec.zero_residual}};
    Json ids = Json::array();
    for (const auto& r : circulant::identity_suite(curv, x)) ids.push_back({{"identity", r.label}, {"residual", r.value}});
    j["identities"] = std::move(ids);
  }
  print(j);
  return kExitPass;
}

int cmd_verify(const std::string& config, const std::string& mode, const std::string& format,
               const std::string& out) {
  if (config.empty()) throw circulant::InvalidArgument("verify needs --config");
  auto cfg = circulant::load_config(config, parse_mode(mode));
  if (!format.empty()) {
    if (format == "json") {
      cfg.output.format = circulant::ReportFormat::json;
    } else if (format == "csv") {
      cfg.output.format = circulant::ReportFormat::csv;
    } else {
      throw circulant::InvalidArgument("--format: expected json or csv");
    }
  }
  if (!out.empty()) cfg.output.path = out;
  const auto rep = circulant::run_verify(cfg);
  if (cfg.output.path.empty()) std::cout << circulant::serialize(rep, cfg.output.format);
  for (const auto& c : rep.criteria)
    circulant::log::info(c.name + ": " + std::string(circulant::to_string(c.status)));
  std::cerr << "verify: " << (rep.passed ? "pass" : "fail") << (rep.parallel ? "" : " (non-parallel: theorem checks not applicable)")
            << '\n';
  return rep.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circulant metric geometry: q-bases, curvature and verification reports"};
  app.set_version_flag("--version", circulant::kToolVersion);
  app.require_subcommand(1);

  std::string coeffs, config, point, seed, mode, format, out;

  auto* inspect = app.add_subcommand("inspect", "Metric, spectrum and admissibility at a point");
  inspect->add_option("--coeffs", coeffs, "A,B,C");
  inspect->add_option("--config", config, "Run configuration (family) file");
  inspect->add_option("--point", point, "x1,x2,x3,x4");

  auto* qbase = app.add_subcommand("qbase", "q-base predicate, literal and spectral orthonormal frames");
  qbase->add_option("--coeffs", coeffs, "A,B,C")->required();
  qbase->add_option("--seed-vector", seed, "v1,v2,v3,v4");

  auto* pyramid = app.add_subcommand("pyramid", "Edges and face angles of the q-orbit tetrahedron");
  pyramid->add_option("--coeffs", coeffs, "A,B,C")->required();
  pyramid->add_option("--seed-vector", seed, "v1,v2,v3,v4 (default: spectral orthonormal seed)");

  auto* curvature = app.add_subcommand("curvature", "Connection and curvature at one chart point");
  curvature->add_option("--config", config, "Run configuration (family) file")->required();
  curvature->add_option("--point", point, "x1,x2,x3,x4")->required();
  curvature->add_option("--seed-vector", seed, "v1,v2,v3,v4");
  curvature->add_option("--mode", mode, "analytic|fd");

  auto* verify = app.add_subcommand("verify", "Full verification pipeline over a configuration");
  verify->add_option("--config", config, "Run configuration file")->required();
  verify->add_option("--mode", mode, "analytic|fd");
  verify->add_option("--format", format, "json|csv");
  verify->add_option("--out", out, "Report path (default: config output.path, else stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*inspect) return cmd_inspect(coeffs, config, point);
    if (*qbase) return cmd_qbase(coeffs, seed);
    if (*pyramid) return cmd_pyramid(coeffs, seed);
    if (*curvature) return cmd_curvature(config, point, seed, mode);
    if (*verify) return cmd_verify(config, mode, format, out);
  } catch (const circulant::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

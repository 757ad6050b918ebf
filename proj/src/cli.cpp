#include "orlicz/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "orlicz/estimates.hpp"
#include "orlicz/hammerstein.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/random.hpp"
#include "orlicz/rootfind.hpp"
#include "orlicz/serialization.hpp"

namespace orlicz {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Deterministic CSV report: fixed column set, '.' decimal, 17 significant
/// digits, one JSON mirror object per row.
class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(const json& row) { rows_.push_back(row); }

  void write(const std::string& out_path) const {
    std::ofstream csv(out_path);
    if (!csv) throw std::invalid_argument("cannot open output path: " + out_path);
    for (std::size_t i = 0; i < columns_.size(); ++i) csv << (i ? "," : "") << columns_[i];
    csv << "\n";
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) csv << ",";
        const json& cell = row.at(columns_[i]);
        if (cell.is_number_float())
          csv << fmt17(cell.get<double>());
        else if (cell.is_boolean())
          csv << (cell.get<bool>() ? 1 : 0);
        else if (cell.is_string())
          csv << cell.get<std::string>();
        else
          csv << cell.dump();
      }
      csv << "\n";
    }
    std::ofstream js(out_path + ".json");
    js << json(rows_).dump(2) << "\n";
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<json> rows_;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<std::pair<std::string, NFunction>> load_nfunctions(const json& cfg) {
  if (!cfg.contains("nfunctions") || !cfg.at("nfunctions").is_array() ||
      cfg.at("nfunctions").empty())
    throw std::invalid_argument("config needs a nonempty \"nfunctions\" array");
  std::vector<std::pair<std::string, NFunction>> out;
  for (const auto& j : cfg.at("nfunctions")) {
    NFunction M = NFunction::from_spec(spec_from_json(j));
    out.emplace_back(M.name(), std::move(M));
  }
  return out;
}

// Detects x = t * chi_D and returns (t, mu(D)) for the closed-form check.
std::optional<std::pair<double, double>> as_scaled_indicator(const MeasureSpace& space,
                                                             const GridFunction& x) {
  double t = 0.0, mu_d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    if (t == 0.0)
      t = x[i];
    else if (x[i] != t)
      return std::nullopt;
    mu_d += space.weight(i);
  }
  if (t == 0.0) return std::nullopt;
  return std::make_pair(t, mu_d);
}

int cmd_norm(const json& cfg, const std::string& out_path) {
  const auto nfunctions = load_nfunctions(cfg);
  const MeasureSpace space = space_from_json(cfg.at("space"));
  if (!cfg.contains("functions") || !cfg.at("functions").is_array() ||
      cfg.at("functions").empty())
    throw std::invalid_argument("config needs a nonempty \"functions\" array");
  std::vector<GridFunction> functions;
  for (const auto& j : cfg.at("functions")) functions.push_back(grid_from_json(j));
  std::vector<double> lambdas = cfg.value("lambda_samples", std::vector<double>{0.5, 1.0, 2.0});

  Report report({"function", "nfunction", "quantity", "value", "bound", "slack", "pass"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t fi = 0; fi < functions.size(); ++fi) {
    const GridFunction& x = functions[fi];
    for (const auto& [name, M] : nfunctions) {
      const NormReport r = check_relations(M, space, x, lambdas);
      auto row = [&](const std::string& q, double value, double bound, double slack, bool pass) {
        report.add_row(json{{"function", static_cast<double>(fi)},
                            {"nfunction", name},
                            {"quantity", q},
                            {"value", value},
                            {"bound", bound},
                            {"slack", slack},
                            {"pass", pass}});
      };
      row("modular", r.modular_value, nan, nan, true);
      row("luxemburg", r.luxemburg, nan, nan, true);
      row("orlicz", r.orlicz, nan, nan, true);
      row("equivalence", r.orlicz, 2.0 * r.luxemburg, r.equivalence_slack, r.equivalence_pass);
      row("relation1", r.modular_value, r.luxemburg, r.relation1_slack, r.relation1_pass);
      row("eq2", r.modular_value, nan, r.eq2_worst_slack, r.eq2_pass);
      if (r.lp_identity_applicable)
        row("lp_identity", r.modular_value, std::pow(r.luxemburg, *M.power_exponent()),
            r.lp_identity_slack, r.lp_identity_pass);
      if (auto ind = as_scaled_indicator(space, x)) {
        const auto [t, mu_d] = *ind;
        const CharNorms closed = char_norms(M, mu_d);
        const double cl = std::abs(t) * closed.luxemburg;
        const double ca = std::abs(t) * closed.orlicz;
        row("char_lux_agreement", r.luxemburg, cl, std::abs(r.luxemburg - cl),
            std::abs(r.luxemburg - cl) <= 1e-8 * std::max(1.0, cl));
        row("char_orl_agreement", r.orlicz, ca, std::abs(r.orlicz - ca),
            std::abs(r.orlicz - ca) <= 1e-8 * std::max(1.0, ca));
      }
    }
  }
  report.write(out_path);
  return 0;
}

int cmd_conjugate_table(const json& cfg, const std::string& out_path) {
  const auto nfunctions = load_nfunctions(cfg);
  const json grid_cfg = cfg.value("u_grid", json::object());
  const double lo = grid_cfg.value("min", 0.01);
  const double hi = grid_cfg.value("max", 10.0);
  const std::size_t count = grid_cfg.value("count", std::size_t{25});
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("u_grid needs 0 < min < max");

  Report report({"nfunction", "u", "m", "conjugate", "involution_rel_err", "young_slack"});
  for (const auto& [name, M] : nfunctions) {
    const NFunction conj = M.conjugate();
    const NFunction conj2 = conj.conjugate();
    for (double u : log_grid(lo, hi, count)) {
      const double m = M(u);
      const double mc = conj(u);
      const double invol = std::abs(conj2(u) - m) / std::max(m, 1.0);
      const double young = m + mc - u * u;
      report.add_row(json{{"nfunction", name},
                          {"u", u},
                          {"m", m},
                          {"conjugate", mc},
                          {"involution_rel_err", invol},
                          {"young_slack", young}});
    }
  }
  report.write(out_path);
  return 0;
}

int cmd_probe(const json& cfg, const std::string& out_path) {
  const auto nfunctions = load_nfunctions(cfg);
  const double d2_umax = cfg.value("delta2_u_max", 1e4);
  const double d3_k = cfg.value("delta3_k", 2.0);
  const double d3_umax = cfg.value("delta3_u_max", 30.0);
  const double c4_k = cfg.value("cond4_k", 2.0);
  const double c4_umax = cfg.value("cond4_u_max", 1e6);

  Report report({"nfunction", "probe", "value", "verdict", "note"});
  for (const auto& [name, M] : nfunctions) {
    const Delta2Report d2 = delta2_probe(M, d2_umax);
    report.add_row(json{{"nfunction", name},
                        {"probe", "delta2"},
                        {"value", d2.sup_ratio},
                        {"verdict", d2.verdict},
                        {"note", d2.overflow_u ? "overflow at u=" + fmt17(*d2.overflow_u) : ""}});
    const Delta3Report d3 = delta3_probe(M, d3_k, d3_umax);
    report.add_row(
        json{{"nfunction", name},
             {"probe", "delta3"},
             {"value", d3.u0},
             {"verdict", d3.verdict},
             {"note", d3.finite_range_end ? "partial range, finite up to u=" +
                                                fmt17(*d3.finite_range_end)
                                          : ""}});
    const Condition4Report c4 = growth_condition4_probe(M, c4_k, c4_umax);
    report.add_row(json{{"nfunction", name},
                        {"probe", "condition4"},
                        {"value", c4.growth_factor},
                        {"verdict", c4.verdict},
                        {"note", c4.overflow_u ? "scanned up to u=" + fmt17(*c4.overflow_u) : ""}});
  }
  report.write(out_path);
  return 0;
}

// One admissible sample for a theorem row: a seeded Gaussian direction
// rescaled to a target Luxemburg norm.
GridFunction sample_with_norm(const NFunction& M, const MeasureSpace& space, double target,
                              SampleRng& rng) {
  GridFunction x(rng.gaussian_vector(space.size()));
  const double norm = luxemburg_norm(M, space, x);
  return (target / norm) * x;
}

int cmd_verify_theorems(const json& cfg, const std::string& out_path, std::uint64_t seed) {
  const int samples = cfg.value("samples_per_theorem", 100);
  const std::size_t grid_n = cfg.value("sandwich_grid", std::size_t{200});
  const bool include_bad_phi = cfg.value("include_bad_phi", false);
  const std::vector<double> p_values = cfg.value("p_values", std::vector<double>{1.5, 2.0, 3.0});
  MeasureSpace space = cfg.contains("space")
                           ? space_from_json(cfg.at("space"))
                           : MeasureSpace(std::vector<double>(16, 1.0 / 16.0));

  Report report(
      {"check", "nfunction", "phi", "sample", "norm_x", "bound", "actual", "slack", "pass"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto add = [&](const std::string& check, const std::string& nfn, const std::string& phi,
                 double sample, double norm_x, double bound, double actual, double slack,
                 bool pass) {
    report.add_row(json{{"check", check},
                        {"nfunction", nfn},
                        {"phi", phi},
                        {"sample", sample},
                        {"norm_x", norm_x},
                        {"bound", bound},
                        {"actual", actual},
                        {"slack", slack},
                        {"pass", pass}});
  };

  const NFunction expml = NFunction::exp_minus_linear();
  const NFunction expsq = NFunction::exp_square();
  const NFunction entropy = NFunction::entropy_like();
  const PhiMinorant lambda2_large = PhiMinorant::power(2.0, PhiDomain::large);
  const PhiMinorant lambda2_small = PhiMinorant::power(2.0, PhiDomain::small);
  const PhiMinorant phi12 = PhiMinorant::exp_linear_ratio();
  const PhiMinorant phi_sq = PhiMinorant::exp_square_ratio();

  // Minorant hypothesis checks, Theorems 1-4 families.
  {
    const auto lam_large = log_grid(1.0, 10.0, 50);
    const auto lam_small = log_grid(1e-3, 0.999, 50);
    auto u_grid_for = [](const NFunction& M) {
      return log_grid(1e-6, std::min(1e6, 0.45 * finite_range_max(M)), 50);
    };
    auto minorant_row = [&](const NFunction& M, const PhiMinorant& phi,
                            const std::vector<double>& lam) {
      const MinorantReport r = verify_minorant(M, phi, lam, u_grid_for(M));
      add("minorant", M.name(), phi.name(), -1.0, nan, nan, r.worst_violation_rel,
          r.worst_violation_rel, r.pass);
    };
    minorant_row(expml, lambda2_large, lam_large);
    minorant_row(expml, phi12, lam_large);
    minorant_row(expsq, lambda2_large, lam_large);
    minorant_row(expsq, phi_sq, lam_large);
    minorant_row(entropy, lambda2_small, lam_small);
    for (double p : p_values)
      minorant_row(NFunction::power_log(p), PhiMinorant::power(p + 1.0, PhiDomain::small),
                   lam_small);
  }

  SampleRng rng(seed);
  // Structured constant-function samples make pass/fail deterministic across
  // seeds (random admissible samples always pass when the hypothesis holds).
  const std::vector<double> structured_large = {1.05, 1.2, 1.5, 2.0, 3.0};

  auto theorem1_rows = [&](const NFunction& M, const PhiMinorant& phi, bool passes_hypothesis) {
    for (int s = 0; s < samples; ++s) {
      const bool structured = s < static_cast<int>(structured_large.size());
      const double target = structured ? structured_large[static_cast<std::size_t>(s)]
                                       : rng.uniform(1.0, 3.0);
      GridFunction x = structured
                           ? (target / luxemburg_norm(M, space,
                                                      GridFunction::constant(1.0, space.size()))) *
                                 GridFunction::constant(1.0, space.size())
                           : sample_with_norm(M, space, target, rng);
      if (!passes_hypothesis && !structured) continue;  // keep bad-phi rows deterministic
      const BoundReport r = theorem1_bound(M, space, x, phi);
      add("theorem1", M.name(), phi.name(), s, r.norm_x, r.bound_value, r.actual, r.slack,
          r.pass);
    }
  };
  theorem1_rows(expml, lambda2_large, true);
  theorem1_rows(expsq, lambda2_large, true);
  if (include_bad_phi)
    theorem1_rows(expml, PhiMinorant::power(3.0, PhiDomain::large), false);

  auto theorem2_rows = [&](const NFunction& M, const PhiMinorant& phi) {
    for (int s = 0; s < samples; ++s) {
      GridFunction x = sample_with_norm(M, space, rng.uniform(2.0, 6.0), rng);
      const BoundReport r = theorem2_bound(M, space, x, phi, 2.0);
      add("theorem2", M.name(), phi.name(), s, r.norm_x, r.bound_value, r.actual, r.slack,
          r.pass && r.witness_chain_ok);
    }
  };
  theorem2_rows(expml, phi12);
  theorem2_rows(expsq, phi_sq);

  auto theorem3_rows = [&](const NFunction& M, const PhiMinorant& phi) {
    for (int s = 0; s < samples; ++s) {
      GridFunction x = sample_with_norm(M, space, rng.uniform(0.05, 1.0), rng);
      const BoundReport r = theorem3_bound(M, space, x, phi);
      add("theorem3", M.name(), phi.name(), s, r.norm_x, r.bound_value, r.actual, r.slack,
          r.pass);
    }
  };
  theorem3_rows(entropy, lambda2_small);
  for (double p : p_values)
    theorem3_rows(NFunction::power_log(p), PhiMinorant::power(p + 1.0, PhiDomain::small));

  {
    const double norm_one =
        luxemburg_norm(entropy, space, GridFunction::constant(1.0, space.size()));
    const PhiMinorant phi4 = PhiMinorant::lift(lambda2_small);
    for (int s = 0; s < samples; ++s) {
      GridFunction x = sample_with_norm(entropy, space, rng.uniform(0.05, 1.0), rng);
      const BoundReport r = theorem4_bound(entropy, space, x, phi4, 0.5 / norm_one);
      add("theorem4", entropy.name(), phi4.name(), s, r.norm_x, r.bound_value, r.actual, r.slack,
          r.pass && r.witness_chain_ok);
    }
  }

  {
    const auto lam = log_grid(1e-3, 0.999, grid_n);
    const auto ugrid = log_grid(1e-6, 1e6, grid_n);
    auto sandwich_row = [&](SandwichCase which, const std::string& label, double p) {
      const SandwichReport r = sandwich_check(which, p, lam, ugrid);
      add(label, label, "interval", -1.0, nan, r.worst_upper_slack_rel, r.worst_lower_slack_rel,
          std::min(r.worst_lower_slack_rel, r.worst_upper_slack_rel), r.pass);
    };
    sandwich_row(SandwichCase::M1, "sandwich_M1", 2.0);
    for (double p : p_values) sandwich_row(SandwichCase::M2, "sandwich_M2_p" + fmt17(p), p);
    sandwich_row(SandwichCase::M3, "sandwich_M3", 2.0);
  }

  report.write(out_path);
  return 0;
}

int cmd_solve(const json& cfg, const std::string& out_path, std::optional<double> tol_override) {
  const HammersteinProblem problem = problem_from_json(cfg);
  const double tol = tol_override.value_or(cfg.value("tol", 1e-10));
  const int max_iter = cfg.value("max_iter", 500);
  const SolveResult result = solve(problem, tol, max_iter);

  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
  out << solve_result_to_json(result).dump(2) << "\n";

  if (!result.converged) return 3;
  const bool certs_ok =
      result.certificates.uniqueness && result.certificates.st_residual <= 1e-8;
  return certs_ok ? 0 : 2;
}

}  // namespace

int run_command(const RunConfig& config) {
  try {
    if (config.config_path.empty() || config.out_path.empty())
      throw std::invalid_argument("--config and --out are required");
    const json cfg = load_config(config.config_path);
    if (config.command == "norm") return cmd_norm(cfg, config.out_path);
    if (config.command == "conjugate-table") return cmd_conjugate_table(cfg, config.out_path);
    if (config.command == "probe") return cmd_probe(cfg, config.out_path);
    if (config.command == "verify-theorems")
      return cmd_verify_theorems(cfg, config.out_path, config.seed);
    if (config.command == "solve") return cmd_solve(cfg, config.out_path, config.tol);
    throw std::invalid_argument("unknown command: " + config.command);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: " << msg << "\n";
    return 64;
  }
}

}  // namespace orlicz

#include "orlicz/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace orlicz {

std::string kind_name(NFunctionKind kind) {
  switch (kind) {
    case NFunctionKind::power: return "power";
    case NFunctionKind::exp_minus_linear: return "exp_minus_linear";
    case NFunctionKind::exp_square: return "exp_square";
    case NFunctionKind::entropy_like: return "entropy_like";
    case NFunctionKind::power_log: return "power_log";
    case NFunctionKind::sum: return "sum";
  }
  throw std::invalid_argument("unknown N-function kind");
}

NFunctionKind kind_from_name(const std::string& name) {
  if (name == "power") return NFunctionKind::power;
  if (name == "exp_minus_linear") return NFunctionKind::exp_minus_linear;
  if (name == "exp_square") return NFunctionKind::exp_square;
  if (name == "entropy_like") return NFunctionKind::entropy_like;
  if (name == "power_log") return NFunctionKind::power_log;
  if (name == "sum") return NFunctionKind::sum;
  throw std::invalid_argument("unknown N-function kind: " + name);
}

json spec_to_json(const NFunctionSpec& spec) {
  json params = json::object();
  if (spec.kind == NFunctionKind::power || spec.kind == NFunctionKind::power_log)
    params["p"] = spec.p;
  if (spec.kind == NFunctionKind::sum) {
    json members = json::array();
    for (const auto& m : spec.members) members.push_back(spec_to_json(m));
    params["members"] = members;
  }
  return json{{"kind", kind_name(spec.kind)}, {"params", params}};
}

NFunctionSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("N-function spec must be an object with a \"kind\"");
  NFunctionSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  const json params = j.value("params", json::object());
  if (spec.kind == NFunctionKind::power || spec.kind == NFunctionKind::power_log) {
    if (!params.contains("p")) throw std::invalid_argument("kind needs params.p");
    spec.p = params.at("p").get<double>();
  }
  if (spec.kind == NFunctionKind::sum) {
    if (!params.contains("members")) throw std::invalid_argument("sum needs params.members");
    for (const auto& m : params.at("members")) spec.members.push_back(spec_from_json(m));
  }
  spec.validate();
  return spec;
}

MeasureSpace space_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("measure space must be a JSON array of weights");
  return MeasureSpace(j.get<std::vector<double>>());
}

GridFunction grid_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("grid function must be a JSON array of values");
  return GridFunction(j.get<std::vector<double>>());
}

json grid_to_json(const GridFunction& x) { return json(x.values); }

std::pair<MeasureSpace, GridFunction> cells_from_csv(const std::string& text) {
  std::vector<double> weights, values;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c, ','))
      throw std::invalid_argument("cell table rows need cell_index,weight,value");
    try {
      std::stod(a);
    } catch (const std::exception&) {
      continue;  // header row
    }
    weights.push_back(std::stod(b));
    values.push_back(std::stod(c));
  }
  if (weights.empty()) throw std::invalid_argument("cell table has no data rows");
  return {MeasureSpace(std::move(weights)), GridFunction(std::move(values))};
}

namespace {

Eigen::MatrixXd matrix_from_json(const json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
  const auto flat = j.get<std::vector<double>>();
  if (flat.size() != n * n)
    throw std::invalid_argument(std::string(what) + " must hold n*n row-major entries");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = flat[r * n + c];
  return m;
}

NonlinearitySpec nonlinearity_from_json(const json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("f must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  NonlinearitySpec f;
  if (kind == "zero") {
    f.f = [](std::size_t, double) { return 0.0; };
    f.dfdu = [](std::size_t, double) { return 0.0; };
  } else if (kind == "poly") {
    const json params = j.value("params", json::object());
    const double c1 = params.value("c1", 0.0);
    const double c2 = params.value("c2", 0.0);
    const double c3 = params.value("c3", 0.0);
    f.f = [c1, c2, c3](std::size_t, double u) { return c1 * u + c2 * u * u + c3 * u * u * u; };
    f.dfdu = [c1, c2, c3](std::size_t, double u) { return c1 + 2.0 * c2 * u + 3.0 * c3 * u * u; };
  } else {
    throw std::invalid_argument("unknown nonlinearity kind: " + kind);
  }
  f.delta = j.value("delta", 0.0);
  if (j.contains("coercivity")) {
    const json& co = j.at("coercivity");
    f.has_coercivity = true;
    f.coercivity_a = co.at("a").get<double>();
    f.coercivity_b = co.at("b").get<double>();
    if (co.at("c").is_array())
      f.coercivity_c = grid_from_json(co.at("c"));
    else
      f.coercivity_c = GridFunction::constant(co.at("c").get<double>(), n);
    if (f.coercivity_c.size() != n)
      throw std::invalid_argument("coercivity c length does not match the space");
  }
  return f;
}

}  // namespace

HammersteinProblem problem_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("problem file must be a JSON object");
  MeasureSpace space = space_from_json(j.at("space"));
  const std::size_t n = space.size();
  NFunction M = NFunction::from_spec(spec_from_json(j.at("nfunction")));
  HammersteinProblem problem{std::move(space),
                             std::move(M),
                             matrix_from_json(j.at("S"), n, "S"),
                             matrix_from_json(j.at("T"), n, "T"),
                             nonlinearity_from_json(j.at("f"), n),
                             grid_from_json(j.at("g")),
                             j.at("sigma").get<double>()};
  if (problem.g.size() != n) throw std::invalid_argument("g length does not match the space");
  return problem;
}

json solve_result_to_json(const SolveResult& result) {
  return json{{"x", result.x.values},
              {"residual", result.residual_L},
              {"iterations", result.iterations},
              {"converged", result.converged},
              {"used_newton", result.used_newton},
              {"residual_history", result.residual_history},
              {"certificates",
               {{"st_residual", result.certificates.st_residual},
                {"sigma", result.certificates.sigma},
                {"delta", result.certificates.delta},
                {"uniqueness", result.certificates.uniqueness}}}};
}

}  // namespace orlicz

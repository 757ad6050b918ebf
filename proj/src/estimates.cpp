#include "orlicz/estimates.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/rootfind.hpp"

namespace orlicz {

namespace {

// Shared with the exp_minus_linear catalog entry: e^t - t - 1 with a series
// switchover so that phi ratios stay accurate down to u ~ 1e-6.
double expml_stable(double t) {
  if (t > 709.0) return kInf;
  if (t < 0.5) {
    double sum = 0.0, term = 0.5 * t * t;
    for (int k = 2; term > 1e-18 * sum + 5e-324 && k < 200; ++k) {
      sum += term;
      term *= t / static_cast<double>(k + 1);
    }
    return sum;
  }
  return std::expm1(t) - t;
}

}  // namespace

double PhiMinorant::operator()(double lambda) const {
  if (arity_ != 1) throw std::invalid_argument(name_ + " takes two arguments");
  return f1_(lambda);
}

double PhiMinorant::operator()(double lambda, double u) const {
  if (arity_ != 2) throw std::invalid_argument(name_ + " takes one argument");
  return f2_(lambda, u);
}

PhiMinorant PhiMinorant::power(double alpha, PhiDomain domain) {
  PhiMinorant phi;
  phi.arity_ = 1;
  phi.domain_ = domain;
  phi.name_ = "lambda^" + std::to_string(alpha);
  phi.f1_ = [alpha](double l) { return std::pow(l, alpha); };
  return phi;
}

PhiMinorant PhiMinorant::baseline() {
  PhiMinorant phi;
  phi.arity_ = 1;
  phi.domain_ = PhiDomain::large;
  phi.name_ = "baseline";
  phi.f1_ = [](double l) { return l < 1.0 ? 0.0 : l; };
  return phi;
}

PhiMinorant PhiMinorant::exp_linear_ratio() {
  PhiMinorant phi;
  phi.arity_ = 2;
  phi.domain_ = PhiDomain::large;
  phi.name_ = "exp_linear_ratio";
  phi.f2_ = [](double l, double u) { return expml_stable(l * u) / expml_stable(u); };
  return phi;
}

PhiMinorant PhiMinorant::exp_square_ratio() {
  PhiMinorant phi;
  phi.arity_ = 2;
  phi.domain_ = PhiDomain::large;
  phi.name_ = "exp_square_ratio";
  phi.f2_ = [](double l, double u) {
    const double num = l * l * u * u, den = u * u;
    if (num > 709.0) return kInf;
    return std::expm1(num) / std::expm1(den);
  };
  return phi;
}

PhiMinorant PhiMinorant::ratio_of(const NFunction& M, PhiDomain domain) {
  PhiMinorant phi;
  phi.arity_ = 2;
  phi.domain_ = domain;
  phi.name_ = "ratio_of(" + M.name() + ")";
  phi.f2_ = [M](double l, double u) { return M(l * u) / M(u); };
  return phi;
}

PhiMinorant PhiMinorant::lift(const PhiMinorant& phi1) {
  if (phi1.arity_ != 1) throw std::invalid_argument("lift expects a one-argument minorant");
  PhiMinorant phi;
  phi.arity_ = 2;
  phi.domain_ = phi1.domain_;
  phi.name_ = phi1.name_ + " (lifted)";
  auto f = phi1.f1_;
  phi.f2_ = [f](double l, double) { return f(l); };
  return phi;
}

MinorantReport verify_minorant(const NFunction& M, const PhiMinorant& phi,
                               const std::vector<double>& lambda_grid,
                               const std::vector<double>& u_grid) {
  for (double l : lambda_grid) {
    const bool in_domain = phi.domain() == PhiDomain::large ? l >= 1.0 : (l > 0.0 && l <= 1.0);
    if (!in_domain) throw std::invalid_argument("lambda grid leaves the minorant domain");
  }
  for (double u : u_grid)
    if (!(u > 0.0)) throw std::invalid_argument("u grid must be positive");

  MinorantReport rep;
  rep.pass = true;
  double worst = 0.0;
  for (double l : lambda_grid) {
    for (double u : u_grid) {
      const double m_u = M(u);
      const double m_lu = M(l * u);
      if (!std::isfinite(m_lu)) continue;  // inequality holds past overflow
      const double p = phi.arity() == 1 ? phi(l) : phi(l, u);
      if (!std::isfinite(p)) continue;
      const double viol = (m_lu - p * m_u) / std::max(m_u, 1e-300);
      if (viol < worst) {
        worst = viol;
        rep.worst_lambda = l;
        rep.worst_u = u;
      }
    }
  }
  rep.worst_violation_rel = worst;
  rep.pass = worst >= -1e-12;

  if (phi.arity() == 2) {
    for (double u : u_grid) {
      double prev = -kInf;
      for (double l : lambda_grid) {
        const double v = phi(l, u);
        if (!std::isfinite(v)) break;
        if (v < prev * (1.0 - 1e-12) - 1e-300) rep.monotone_lambda_ok = false;
        prev = v;
      }
    }
    for (double l : lambda_grid) {
      double prev = -kInf;
      for (double u : u_grid) {
        const double v = phi(l, u);
        if (!std::isfinite(v)) break;
        if (v < prev * (1.0 - 1e-12) - 1e-300) rep.monotone_u_ok = false;
        prev = v;
      }
    }
    rep.pass = rep.pass && rep.monotone_lambda_ok && rep.monotone_u_ok;
  }
  return rep;
}

namespace {

constexpr double kBoundSlackTol = 1e-9;

BoundReport make_bound_report(const NFunction& M, const MeasureSpace& space,
                              const GridFunction& x, double bound, double norm_x) {
  BoundReport rep;
  rep.applicable = true;
  rep.norm_x = norm_x;
  rep.bound_value = bound;
  rep.actual = modular(M, space, x);
  rep.slack = rep.actual - bound;  // +inf actual dominates any finite bound
  rep.pass = rep.actual >= bound - kBoundSlackTol;
  return rep;
}

}  // namespace

BoundReport theorem1_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi) {
  if (phi.arity() != 1 || phi.domain() != PhiDomain::large)
    throw std::invalid_argument("theorem1_bound needs a one-argument large-domain minorant");
  const double norm_x = luxemburg_norm(M, space, x);
  if (norm_x < 1.0) {
    BoundReport rep;
    rep.norm_x = norm_x;
    return rep;  // not applicable
  }
  return make_bound_report(M, space, x, phi(norm_x), norm_x);
}

BoundReport theorem2_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi, double R) {
  if (!(R > 1.0)) throw std::invalid_argument("theorem2_bound requires R > 1");
  if (phi.arity() != 2 || phi.domain() != PhiDomain::large)
    throw std::invalid_argument("theorem2_bound needs a two-argument large-domain minorant");
  const double norm_x = luxemburg_norm(M, space, x);
  if (norm_x < R) {
    BoundReport rep;
    rep.norm_x = norm_x;
    return rep;  // not applicable
  }
  const double norm_one = luxemburg_norm(M, space, GridFunction::constant(1.0, space.size()));
  const double h = (R - 1.0) / (R * norm_one);
  BoundReport rep = make_bound_report(M, space, x, phi(norm_x / R, h), norm_x);
  rep.h = h;
  rep.witness = truncate_below(x, h * norm_x);
  rep.witness_norm = luxemburg_norm(M, space, rep.witness);
  rep.witness_chain_ok = rep.witness_norm >= norm_x / R - kBoundSlackTol;
  return rep;
}

BoundReport theorem3_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi) {
  if (phi.arity() != 1 || phi.domain() != PhiDomain::small)
    throw std::invalid_argument("theorem3_bound needs a one-argument small-domain minorant");
  const double norm_x = luxemburg_norm(M, space, x);
  if (!(norm_x > 0.0) || norm_x > 1.0) {
    BoundReport rep;
    rep.norm_x = norm_x;
    return rep;  // not applicable
  }
  return make_bound_report(M, space, x, phi(norm_x), norm_x);
}

BoundReport theorem4_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi, double h) {
  if (phi.arity() != 2 || phi.domain() != PhiDomain::small)
    throw std::invalid_argument("theorem4_bound needs a two-argument small-domain minorant");
  const double norm_one = luxemburg_norm(M, space, GridFunction::constant(1.0, space.size()));
  if (!(h > 0.0) || !(h < 1.0 / norm_one))
    throw std::invalid_argument("theorem4_bound requires 0 < h < 1/||1||");
  const double norm_x = luxemburg_norm(M, space, x);
  if (!(norm_x > 0.0) || norm_x > 1.0) {
    BoundReport rep;
    rep.norm_x = norm_x;
    return rep;  // not applicable
  }
  BoundReport rep = make_bound_report(M, space, x, phi((1.0 - h * norm_one) * norm_x, h), norm_x);
  rep.h = h;
  rep.witness = truncate_below(x, h * norm_x);
  rep.witness_norm = luxemburg_norm(M, space, rep.witness);
  rep.witness_chain_ok = rep.witness_norm >= (1.0 - h * norm_one) * norm_x - kBoundSlackTol;
  return rep;
}

SandwichReport sandwich_check(SandwichCase which, double p,
                              const std::vector<double>& lambda_grid,
                              const std::vector<double>& u_grid) {
  if (which != SandwichCase::M1 && !(p > 1.0))
    throw std::invalid_argument("sandwich_check requires p > 1");
  for (double l : lambda_grid)
    if (!(l > 0.0 && l < 1.0))
      throw std::invalid_argument("sandwich lambda grid must lie in (0, 1)");

  const NFunction m1 = NFunction::entropy_like();
  const NFunction m2 = which == SandwichCase::M1 ? m1 : NFunction::power_log(p);
  const NFunction m3 = which == SandwichCase::M3 ? NFunction::sum({m1, m2}) : m1;

  auto eval = [&](double u) {
    switch (which) {
      case SandwichCase::M1: return m1(u);
      case SandwichCase::M2: return m2(u);
      case SandwichCase::M3: return m3(u);
    }
    return 0.0;
  };
  double lo_exp = 2.0, hi_exp = 1.0;
  if (which == SandwichCase::M2) {
    lo_exp = p + 1.0;
    hi_exp = p;
  } else if (which == SandwichCase::M3) {
    lo_exp = p + 1.0;
    hi_exp = 1.0;
  }

  SandwichReport rep;
  double worst_lo = kInf, worst_hi = kInf;
  for (double l : lambda_grid) {
    const double low = std::pow(l, lo_exp), high = std::pow(l, hi_exp);
    for (double u : u_grid) {
      const double mu = eval(u), mlu = eval(l * u);
      const double slack_lo = (mlu - low * mu) / mu;
      const double slack_hi = (high * mu - mlu) / mu;
      if (slack_lo < worst_lo) {
        worst_lo = slack_lo;
        rep.worst_lambda = l;
        rep.worst_u = u;
      }
      if (slack_hi < worst_hi) worst_hi = slack_hi;
    }
  }
  rep.worst_lower_slack_rel = worst_lo;
  rep.worst_upper_slack_rel = worst_hi;
  rep.pass = worst_lo >= -1e-12 && worst_hi >= -1e-12;
  return rep;
}

DegeneracyReport small_norm_degeneracy_probe(const NFunction& M, double R, int max_refinements,
                                             double threshold) {
  if (!(R > 0.0) || !(R < 1.0))
    throw std::invalid_argument("degeneracy probe requires 0 < R < 1");
  DegeneracyReport rep;
  rep.infimum_estimate = kInf;
  rep.refinements_used = -1;
  // Indicator on a cell of measure 2^{-k}, scaled so that its Luxemburg norm
  // is exactly R: the scale is R M^{-1}(2^k) by the characteristic-function
  // formula, and the modular is M(scale) 2^{-k} in closed form.
  for (int k = 0; k <= max_refinements; ++k) {
    const double mu_d = std::ldexp(1.0, -k);
    const double scale = R * M.inverse(1.0 / mu_d);
    const double value = M(scale) * mu_d;
    rep.mu_d.push_back(mu_d);
    rep.modulars.push_back(value);
    rep.infimum_estimate = std::min(rep.infimum_estimate, value);
    if (value < threshold && rep.refinements_used < 0) rep.refinements_used = k;
  }
  rep.dropped_below_threshold = rep.refinements_used >= 0;
  return rep;
}

}  // namespace orlicz

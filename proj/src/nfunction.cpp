#include "orlicz/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "orlicz/random.hpp"
#include "orlicz/rootfind.hpp"

namespace orlicz {

namespace {

// e^t - t - 1 without cancellation. The closed form loses all relative
// accuracy below t ~ 1e-8, which the small-u sandwich grids do reach.
double exp_minus_linear_stable(double t) {
  if (t > 709.0) return kInf;
  if (t < 0.5) {
    double sum = 0.0, term = 0.5 * t * t;  // t^2/2!
    for (int k = 2; term > 1e-18 * sum + 5e-324 && k < 200; ++k) {
      sum += term;
      term *= t / static_cast<double>(k + 1);
    }
    return sum;
  }
  return std::expm1(t) - t;
}

// (1+t) ln(1+t) - t; series sum_{k>=2} (-1)^k t^k / (k(k-1)) for small t.
double entropy_like_stable(double t) {
  if (t < 0.5) {
    double sum = 0.0, term = 0.5 * t * t, sign = 1.0;
    for (int k = 2; term > 1e-18 * std::abs(sum) + 5e-324 && k < 400; ++k) {
      sum += sign * term;
      term *= t * static_cast<double>(k - 1) / static_cast<double>(k + 1);
      sign = -sign;
    }
    return sum;
  }
  return (1.0 + t) * std::log1p(t) - t;
}

}  // namespace

struct NFunction::Impl {
  virtual ~Impl() = default;
  virtual double eval(double u) const = 0;
  virtual double deriv(double u) const {
    // Central-difference fallback for entries without an analytic derivative.
    const double h = std::max(1e-6, 1e-8 * u);
    const double lo = std::max(0.0, u - h);
    return (eval(u + h) - eval(lo)) / (u + h - lo);
  }
  virtual double inverse(double y) const {
    if (y == 0.0) return 0.0;
    return detail::solve_nondecreasing([this](double u) { return eval(u); }, y, 1.0);
  }
  // Analytic conjugate when known; nullptr requests the numeric fallback.
  virtual std::shared_ptr<const Impl> conjugate() const { return nullptr; }
  virtual std::string name() const = 0;
  virtual std::optional<double> power_exponent() const { return std::nullopt; }
};

namespace {

using ImplPtr = std::shared_ptr<const NFunction::Impl>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// c u^q: closed under conjugation, arises as the conjugate of u^p.
struct ScaledPowerImpl final : NFunction::Impl {
  double c, q;
  ScaledPowerImpl(double c_, double q_) : c(c_), q(q_) {}
  double eval(double u) const override { return c * std::pow(u, q); }
  double deriv(double u) const override { return c * q * std::pow(u, q - 1.0); }
  double inverse(double y) const override { return std::pow(y / c, 1.0 / q); }
  ImplPtr conjugate() const override {
    const double q2 = q / (q - 1.0);
    const double c2 = (q - 1.0) / q * std::pow(c * q, -1.0 / (q - 1.0));
    return std::make_shared<ScaledPowerImpl>(c2, q2);
  }
  std::string name() const override { return "scaled_power(c=" + num(c) + ",q=" + num(q) + ")"; }
};

struct PowerImpl final : NFunction::Impl {
  double p;
  explicit PowerImpl(double p_) : p(p_) {}
  double eval(double u) const override { return std::pow(u, p); }
  double deriv(double u) const override { return p * std::pow(u, p - 1.0); }
  double inverse(double y) const override { return std::pow(y, 1.0 / p); }
  ImplPtr conjugate() const override {
    if (!(p > 1.0)) throw std::invalid_argument("conjugate of u^p needs p > 1");
    const double q = p / (p - 1.0);
    return std::make_shared<ScaledPowerImpl>((p - 1.0) * std::pow(p, -q), q);
  }
  std::string name() const override { return "power(p=" + num(p) + ")"; }
  std::optional<double> power_exponent() const override { return p; }
};

struct EntropyLikeImpl;

struct ExpMinusLinearImpl final : NFunction::Impl {
  double eval(double u) const override { return exp_minus_linear_stable(u); }
  double deriv(double u) const override { return std::expm1(u); }
  ImplPtr conjugate() const override;
  std::string name() const override { return "exp_minus_linear"; }
};

struct EntropyLikeImpl final : NFunction::Impl {
  double eval(double u) const override { return entropy_like_stable(u); }
  double deriv(double u) const override { return std::log1p(u); }
  ImplPtr conjugate() const override { return std::make_shared<ExpMinusLinearImpl>(); }
  std::string name() const override { return "entropy_like"; }
};

ImplPtr ExpMinusLinearImpl::conjugate() const { return std::make_shared<EntropyLikeImpl>(); }

struct ExpSquareImpl final : NFunction::Impl {
  double eval(double u) const override {
    const double t = u * u;
    return t > 709.0 ? kInf : std::expm1(t);
  }
  double deriv(double u) const override {
    const double t = u * u;
    return t > 709.0 ? kInf : 2.0 * u * std::exp(t);
  }
  double inverse(double y) const override { return std::sqrt(std::log1p(y)); }
  std::string name() const override { return "exp_square"; }
};

struct PowerLogImpl final : NFunction::Impl {
  double p;
  explicit PowerLogImpl(double p_) : p(p_) {}
  double eval(double u) const override { return std::pow(u, p) * std::log1p(u); }
  double deriv(double u) const override {
    return p * std::pow(u, p - 1.0) * std::log1p(u) + std::pow(u, p) / (1.0 + u);
  }
  std::string name() const override { return "power_log(p=" + num(p) + ")"; }
};

struct SumImpl final : NFunction::Impl {
  std::vector<ImplPtr> members;
  explicit SumImpl(std::vector<ImplPtr> m) : members(std::move(m)) {}
  double eval(double u) const override {
    double s = 0.0;
    for (const auto& m : members) s += m->eval(u);
    return s;
  }
  double deriv(double u) const override {
    double s = 0.0;
    for (const auto& m : members) s += m->deriv(u);
    return s;
  }
  std::string name() const override {
    std::string n = "sum(";
    for (std::size_t i = 0; i < members.size(); ++i) n += (i ? "+" : "") + members[i]->name();
    return n + ")";
  }
};

// Numeric conjugate: M*(v) = v w - M(w) at the stationary point M'(w) = v.
// Its derivative is the argmax w(v), by the standard convex-duality identity.
struct NumericConjugateImpl final : NFunction::Impl {
  ImplPtr base;
  explicit NumericConjugateImpl(ImplPtr b) : base(std::move(b)) {}

  double argmax(double v) const {
    return detail::solve_nondecreasing([this](double w) { return base->deriv(w); }, v, 1.0);
  }
  double eval(double v) const override {
    if (v == 0.0) return 0.0;
    const double w = argmax(v);
    return v * w - base->eval(w);
  }
  double deriv(double v) const override { return v == 0.0 ? 0.0 : argmax(v); }
  std::string name() const override { return "conjugate(" + base->name() + ")"; }
};

void require_nonneg_finite(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(what) + " must be a finite nonnegative real");
}

}  // namespace

// -- NFunction surface ----------------------------------------------------

double NFunction::operator()(double u) const {
  require_nonneg_finite(u, "N-function argument");
  return u == 0.0 ? 0.0 : impl_->eval(u);
}

double NFunction::deriv(double u) const {
  require_nonneg_finite(u, "N-function argument");
  return u == 0.0 ? 0.0 : impl_->deriv(u);
}

double NFunction::inverse(double y) const {
  require_nonneg_finite(y, "inverse argument");
  return impl_->inverse(y);
}

NFunction NFunction::conjugate() const {
  if (auto analytic = impl_->conjugate()) return NFunction(std::move(analytic));
  return NFunction(std::make_shared<NumericConjugateImpl>(impl_));
}

std::string NFunction::name() const { return impl_->name(); }

std::optional<double> NFunction::power_exponent() const { return impl_->power_exponent(); }

NFunction NFunction::power(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("power exponent must be positive");
  return NFunction(std::make_shared<PowerImpl>(p));
}
NFunction NFunction::exp_minus_linear() {
  return NFunction(std::make_shared<ExpMinusLinearImpl>());
}
NFunction NFunction::exp_square() { return NFunction(std::make_shared<ExpSquareImpl>()); }
NFunction NFunction::entropy_like() { return NFunction(std::make_shared<EntropyLikeImpl>()); }
NFunction NFunction::power_log(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("power_log exponent must exceed 1");
  return NFunction(std::make_shared<PowerLogImpl>(p));
}
NFunction NFunction::sum(std::vector<NFunction> members) {
  if (members.size() < 2) throw std::invalid_argument("sum needs at least two members");
  std::vector<ImplPtr> impls;
  impls.reserve(members.size());
  for (const auto& m : members) impls.push_back(m.impl_);
  return NFunction(std::make_shared<SumImpl>(std::move(impls)));
}

void NFunctionSpec::validate() const {
  switch (kind) {
    case NFunctionKind::power:
    case NFunctionKind::power_log:
      if (!(p > 1.0)) throw std::invalid_argument("exponent p must exceed 1");
      break;
    case NFunctionKind::sum:
      if (members.size() < 2) throw std::invalid_argument("sum needs at least two members");
      for (const auto& m : members) m.validate();
      break;
    default:
      break;
  }
}

NFunction NFunction::from_spec(const NFunctionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case NFunctionKind::power: return power(spec.p);
    case NFunctionKind::exp_minus_linear: return exp_minus_linear();
    case NFunctionKind::exp_square: return exp_square();
    case NFunctionKind::entropy_like: return entropy_like();
    case NFunctionKind::power_log: return power_log(spec.p);
    case NFunctionKind::sum: {
      std::vector<NFunction> members;
      members.reserve(spec.members.size());
      for (const auto& m : spec.members) members.push_back(from_spec(m));
      return sum(std::move(members));
    }
  }
  throw std::invalid_argument("unknown N-function kind");
}

// -- probes ----------------------------------------------------------------

double finite_range_max(const NFunction& M) {
  double lo = 1.0, hi = 1.0;
  int guard = 0;
  while (std::isfinite(M(hi)) && guard++ < 1100) {
    lo = hi;
    if (hi > 8.9e307) return hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::isfinite(M(mid)) ? lo : hi) = mid;
  }
  return lo;
}

NFunctionReport verify_nfunction(const NFunction& M, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("grid must be sorted");
  if (!(grid.back() > 0.0)) throw std::invalid_argument("grid needs positive points");

  NFunctionReport rep;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = M(grid[i]);

  // Midpoint convexity over all pairs; pairs past the overflow edge are
  // skipped (nothing to compare).
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (!std::isfinite(values[i]) || !std::isfinite(values[j])) continue;
      const double m_mid = M(0.5 * (grid[i] + grid[j]));
      if (!std::isfinite(m_mid)) continue;
      const double rhs = 0.5 * (values[i] + values[j]);
      worst = std::max(worst, (m_mid - rhs) / std::max(rhs, 1e-300));
    }
  }
  rep.worst_convexity_violation = worst;
  rep.convex_ok = worst <= 1e-12;

  // Limit evidence on r(u) = M(u)/u. The small side uses the stated absolute
  // threshold. An absolute threshold at the large end misjudges slowly
  // divergent entries like (1+u)ln(1+u)-u, so the large-side test is growth
  // of r across the grid plus strict increase over the top finite decade.
  double u_lo = 0.0, u_hi = 0.0;
  for (double u : grid)
    if (u > 0.0) {
      u_lo = u;
      break;
    }
  for (double u : grid)
    if (u > 0.0 && std::isfinite(M(u))) u_hi = u;

  const double r_lo = M(u_lo) / u_lo;
  const double r_hi = M(u_hi) / u_hi;
  rep.ratio_at_min = r_lo;
  rep.ratio_at_max = r_hi;
  rep.zero_limit_ok = r_lo < 1e-3;
  const double r_decade = M(u_hi / 10.0) / (u_hi / 10.0);
  rep.infinity_limit_ok = r_hi >= 1e3 * r_lo && r_hi > 1.0001 * r_decade;

  rep.pass = rep.convex_ok && rep.zero_limit_ok && rep.infinity_limit_ok;
  return rep;
}

Delta2Report delta2_probe(const NFunction& M, double u_max) {
  if (!(u_max >= 10.0)) throw std::invalid_argument("delta2_probe requires u_max >= 10");
  Delta2Report rep;
  for (double u : log_grid(1.0, u_max, 200)) {
    const double m2 = M(2.0 * u);
    if (!std::isfinite(m2)) {
      rep.overflow_u = u;
      rep.verdict = false;
      return rep;
    }
    rep.sup_ratio = std::max(rep.sup_ratio, m2 / M(u));
  }
  auto ratio = [&M](double u) { return M(2.0 * u) / M(u); };
  rep.verdict = ratio(u_max) <= 2.0 * ratio(u_max / 10.0);
  return rep;
}

Delta3Report delta3_probe(const NFunction& M, double k, double u_max) {
  if (!(k > 1.0)) throw std::invalid_argument("delta3_probe requires k > 1");
  Delta3Report rep;
  const auto grid = log_grid(1e-2, u_max, 400);
  // Scan from the top down for the largest contiguous tail on which
  // u M(u) <= M(ku) holds; overflow of M(ku) counts as holding but marks
  // the scan as partial.
  double u0 = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t idx = grid.size(); idx-- > 0;) {
    const double u = grid[idx];
    const double rhs = M(k * u);
    if (!std::isfinite(rhs)) {
      rep.finite_range_end = u;
      u0 = u;
      continue;
    }
    if (u * M(u) <= rhs * (1.0 + 1e-12))
      u0 = u;
    else
      break;
  }
  rep.verdict = std::isfinite(u0) && u0 < u_max;
  rep.u0 = std::isfinite(u0) ? u0 : 0.0;
  return rep;
}

Condition4Report growth_condition4_probe(const NFunction& M, double k, double u_max) {
  if (!(k > 1.0)) throw std::invalid_argument("growth_condition4_probe requires k > 1");
  Condition4Report rep;
  const NFunction conj = M.conjugate();
  auto r = [&](double u) { return M(k * u) / (u * conj.inverse(u)); };

  // Restrict to the finite range of M(ku).
  double u_hi = u_max;
  if (!std::isfinite(M(std::min(k * u_max, 8.9e307)))) {
    u_hi = 0.99 * finite_range_max(M) / k;
    rep.overflow_u = u_hi;
  }
  const auto decade = log_grid(u_hi / 10.0, u_hi, 40);
  bool increasing = true;
  double prev = r(decade.front());
  for (std::size_t i = 1; i < decade.size(); ++i) {
    const double cur = r(decade[i]);
    if (cur < prev * (1.0 - 1e-9)) increasing = false;
    prev = cur;
  }
  rep.increasing_trend = increasing;
  rep.growth_factor = r(u_hi) / r(u_hi / 10.0);
  rep.verdict = increasing && rep.growth_factor > 2.0;
  return rep;
}

}  // namespace orlicz

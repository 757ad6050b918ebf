// Minorant inequalities M(lambda u) >= phi(...) M(u) and the modular lower
// bounds in norm that follow from them, for both the large-norm and the
// small-norm regime, plus the sandwich inequalities of the entropy-like and
// power-log families and the small-norm degeneracy probe.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orlicz/measure.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

enum class PhiDomain { large, small };  // lambda >= 1 vs 0 < lambda <= 1

/// A growth minorant phi(lambda) or phi(lambda, u): positive on its domain,
/// nondecreasing in each argument in the two-argument case.
class PhiMinorant {
 public:
  int arity() const { return arity_; }
  PhiDomain domain() const { return domain_; }
  const std::string& name() const { return name_; }

  double operator()(double lambda) const;
  double operator()(double lambda, double u) const;

  /// lambda^alpha
  static PhiMinorant power(double alpha, PhiDomain domain);
  /// 0 below 1, lambda above: the minorant every N-function admits.
  static PhiMinorant baseline();
  /// (e^{lambda u} - lambda u - 1) / (e^u - u - 1), lambda >= 1
  static PhiMinorant exp_linear_ratio();
  /// (e^{lambda^2 u^2} - 1) / (e^{u^2} - 1), lambda >= 1
  static PhiMinorant exp_square_ratio();
  /// The sharp minorant phi(lambda, u) = M(lambda u)/M(u); defined for u > 0.
  static PhiMinorant ratio_of(const NFunction& M, PhiDomain domain);
  /// Lift a one-argument minorant to two arguments (constant in u).
  static PhiMinorant lift(const PhiMinorant& phi1);

 private:
  PhiMinorant() = default;
  int arity_ = 1;
  PhiDomain domain_ = PhiDomain::large;
  std::string name_;
  std::function<double(double)> f1_;
  std::function<double(double, double)> f2_;
};

struct MinorantReport {
  bool pass = false;
  double worst_violation_rel = 0.0;  // most negative (M(lu) - phi M(u)) / M(u)
  double worst_lambda = 0.0;
  double worst_u = 0.0;
  bool monotone_lambda_ok = true;  // arity-2 grid checks
  bool monotone_u_ok = true;
};

/// Grid check of M(lambda u) >= phi(lambda[, u]) M(u); pass tolerates a
/// 1e-12 relative violation pointwise. Two-argument minorants additionally
/// get their monotonicity invariants grid-checked.
MinorantReport verify_minorant(const NFunction& M, const PhiMinorant& phi,
                               const std::vector<double>& lambda_grid,
                               const std::vector<double>& u_grid);

struct BoundReport {
  bool applicable = false;  // precondition on ||x|| held
  bool pass = false;
  double bound_value = 0.0;
  double actual = 0.0;  // modular of x
  double slack = 0.0;   // actual - bound
  double norm_x = 0.0;
  double h = 0.0;                  // truncation level (theorems 2 and 4)
  double witness_norm = 0.0;       // ||x_h||
  bool witness_chain_ok = true;    // ||x_h|| >= the proof's lower bound
  GridFunction witness;            // the truncated x_h (theorems 2 and 4)
};

/// modular(x) >= phi(||x||) for ||x|| >= 1 (one-argument phi, large domain).
BoundReport theorem1_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi);

/// modular(x) >= phi(||x||/R, (R-1)/(R ||1||)) for ||x|| >= R > 1
/// (two-argument phi, large domain). Also exposes the truncation witness.
BoundReport theorem2_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi, double R);

/// modular(x) >= phi(||x||) for 0 < ||x|| <= 1 (one-argument phi, small domain).
BoundReport theorem3_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi);

/// modular(x) >= phi((1 - h||1||) ||x||, h) for 0 != ||x|| <= 1 and
/// 0 < h < 1/||1|| (two-argument phi, small domain).
BoundReport theorem4_bound(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const PhiMinorant& phi, double h);

enum class SandwichCase { M1, M2, M3 };

struct SandwichReport {
  bool pass = false;
  double worst_lower_slack_rel = 0.0;  // most negative relative margin, lower side
  double worst_upper_slack_rel = 0.0;  // most negative relative margin, upper side
  double worst_lambda = 0.0;
  double worst_u = 0.0;
};

/// Pointwise two-sided bounds with 1e-12 relative slack:
///   M1: lambda^2 M1(u)     <= M1(lambda u) <= lambda   M1(u)
///   M2: lambda^{p+1} M2(u) <= M2(lambda u) <= lambda^p M2(u)
///   M3: lambda^{p+1} M3(u) <= M3(lambda u) <= lambda   M3(u)
/// where M1 = (1+u)ln(1+u)-u, M2 = u^p ln(1+u), M3 = M1 + M2; 0 < lambda < 1.
SandwichReport sandwich_check(SandwichCase which, double p,
                              const std::vector<double>& lambda_grid,
                              const std::vector<double>& u_grid);

struct DegeneracyReport {
  std::vector<double> mu_d;      // shrinking witness measures
  std::vector<double> modulars;  // modular of the norm-R indicator witness
  double infimum_estimate = 0.0;
  bool dropped_below_threshold = false;
  int refinements_used = 0;  // first refinement where the threshold was crossed
};

/// Witness sequence for inf{modular(x) : ||x|| >= R} in the small-norm
/// regime: characteristic functions scaled to Luxemburg norm exactly R on
/// cells of measure 2^{-k}, evaluated in closed form via the characteristic
/// norm formulas. Requires 0 < R < 1.
DegeneracyReport small_norm_degeneracy_probe(const NFunction& M, double R,
                                             int max_refinements = 20, double threshold = 1e-3);

}  // namespace orlicz

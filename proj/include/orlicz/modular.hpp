// The modular functional and both Orlicz-space norms, plus the classical
// modular/norm inter-relations as checkable reports.
#pragma once

#include <cstdint>
#include <vector>

#include "orlicz/measure.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

/// Modular of x: sum_i M(|x_i|) mu_i. Returns +inf when some M(|x_i|)
/// overflows (x numerically outside the Orlicz class).
double modular(const NFunction& M, const MeasureSpace& space, const GridFunction& x);

/// Luxemburg norm inf{lambda > 0 : modular(x/lambda) <= 1} by bisection on
/// lambda; returns 0 for x identically zero. The returned lambda satisfies
/// modular(x/lambda) <= 1.
double luxemburg_norm(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                      double tol = 1e-10);

/// Orlicz norm inf_{lambda>0} (1 + modular(lambda x))/lambda via bracketed
/// golden-section minimization; returns 0 for x identically zero.
double orlicz_norm(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                   double tol = 1e-10);

struct CharNorms {
  double luxemburg;  // 1 / M^{-1}(1/mu(D))
  double orlicz;     // mu(D) (M*)^{-1}(1/mu(D))
};

/// Closed-form norms of a characteristic function of measure muD > 0.
CharNorms char_norms(const NFunction& M, double muD);

struct NormReport {
  double modular_value = 0.0;
  double luxemburg = 0.0;
  double orlicz = 0.0;
  // ||x||_L <= ||x||_A <= 2 ||x||_L
  bool equivalence_pass = false;
  double equivalence_slack = 0.0;
  // modular vs Luxemburg norm implications at the unit threshold
  bool relation1_pass = false;
  double relation1_slack = 0.0;
  // modular(lambda x) >= lambda ||x||_A - 1 over the supplied samples
  bool eq2_pass = false;
  double eq2_worst_slack = 0.0;
  // modular == ||x||_L^p for the power catalog entry
  bool lp_identity_applicable = false;
  bool lp_identity_pass = true;
  double lp_identity_slack = 0.0;
  // Hoelder-type couplings against a supplied y (conjugate-space side)
  bool holder_applicable = false;
  bool holder_pass = true;
  double holder_worst_slack = 0.0;
};

/// Evaluates the modular/norm relations for one x (and optionally a partner
/// y measured in the conjugate space). Slacks are signed margins; a pass
/// tolerates -1e-9.
NormReport check_relations(const NFunction& M, const MeasureSpace& space, const GridFunction& x,
                           const std::vector<double>& lambda_samples,
                           const GridFunction* y = nullptr);

/// Empirical lower estimate of gamma = sup ||x||_2 / ||x||_L over single-cell
/// indicators, the constant function, and n_random seeded Gaussian samples.
/// The estimate is a running supremum: more samples never decrease it.
double embedding_constant(const NFunction& M, const MeasureSpace& space, int n_random = 10000,
                          std::uint64_t seed = 20250809);

}  // namespace orlicz

// Discretized Hammerstein equation x = S f(x) + g with the Minty/Rothe
// existence machinery: certificates (sigma, delta, coercivity), the Rothe
// radius estimate, and a damped fixed-point solver with a Newton fallback.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orlicz/estimates.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

/// Pointwise superposition rule f(cell, u) with its monotonicity constant
/// delta ((f(u1)-f(u2))(u1-u2) <= delta (u1-u2)^2) and an optional coercivity
/// certificate -u f(cell, u) >= a M(b|u|) - c(cell).
struct NonlinearitySpec {
  std::function<double(std::size_t, double)> f;
  std::function<double(std::size_t, double)> dfdu;  // optional analytic derivative
  double delta = 0.0;
  bool has_coercivity = false;
  double coercivity_a = 0.0;
  double coercivity_b = 0.0;
  GridFunction coercivity_c;

  double deriv(std::size_t cell, double u) const;  // central difference fallback

  /// Grid-tests both certificate inequalities on sampled arguments; returns
  /// the worst signed margins (negative = violated).
  struct CertCheck {
    double monotonicity_margin;
    double coercivity_margin;
  };
  CertCheck grid_check(const NFunction& M, const std::vector<double>& u_samples) const;
};

struct HammersteinProblem {
  MeasureSpace space;
  NFunction M;
  Eigen::MatrixXd S;
  Eigen::MatrixXd T;  // left inverse of S on grid functions
  NonlinearitySpec f;
  GridFunction g;
  double sigma = 0.0;  // <Tx, x> >= sigma ||x||_2^2
};

struct SolveCertificates {
  double st_residual = 0.0;  // max-entry |ST - I|
  double sigma = 0.0;
  double delta = 0.0;
  bool uniqueness = false;  // sigma - delta > 0
};

struct SolveResult {
  GridFunction x;
  double residual_L = 0.0;  // Luxemburg norm of x - S f(x) - g
  int iterations = 0;
  bool converged = false;
  bool used_newton = false;
  std::vector<double> residual_history;
  SolveCertificates certificates;
};

/// max |(S T - I)_{ij}|
double check_left_inverse(const Eigen::MatrixXd& S, const Eigen::MatrixXd& T);

/// Smallest eigenvalue of the mu-weighted symmetrization of T, i.e. the best
/// sigma with <Tx, x> >= sigma ||x||_2^2. Certified against n_rayleigh random
/// Rayleigh quotients (throws std::logic_error if certification fails).
double sigma_estimate(const Eigen::MatrixXd& T, const MeasureSpace& space, int n_rayleigh = 1000,
                      std::uint64_t seed = 20250809);

/// Minimum of <Phi x1 - Phi x2, x1 - x2> over sampled pairs, where
/// Phi x = T x - f(x) - T g. Nonnegative when sigma >= delta.
double verify_minty(const HammersteinProblem& problem, int pair_samples = 200,
                    std::uint64_t seed = 20250809);

/// Smallest R >= max(1, 1/b) making the Rothe lower-bound expression
/// nonnegative: [sigma >= 0 ? 0 : sigma gamma^2 R] + a phi(bR)/R
/// - 2 ||Tg||_{M*} - cbar/R. Returns nullopt when no R <= R_max works.
std::optional<double> rothe_radius(const HammersteinProblem& problem, const PhiMinorant& phi,
                                   double gamma, double R_max = 1e6);

/// Minimum of <Phi x, x> over random x with ||x||_L = R.
double verify_rothe(const HammersteinProblem& problem, double R, int sphere_samples = 200,
                    std::uint64_t seed = 20250809);

/// sigma - delta > 0: the uniqueness certificate of the T/f pair.
bool uniqueness_certificate(double sigma, double delta);

/// Damped fixed-point iteration on x <- (1-tau) x + tau (S f(x) + g) with
/// residual-monotone tau adaptation; on stagnation switches to Newton on
/// Phi x = T x - f(x) - T g with Jacobian T - diag(f') and an Armijo line
/// search on the squared weighted-L2 residual. Success means the Luxemburg
/// residual of the defining equation is at most tol.
SolveResult solve(const HammersteinProblem& problem, double tol = 1e-10, int max_iter = 500,
                  const GridFunction* x0 = nullptr);

}  // namespace orlicz

#include "orlicz/hammerstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orlicz/modular.hpp"
#include "orlicz/random.hpp"
#include "orlicz/rootfind.hpp"

namespace orlicz {

namespace {

Eigen::VectorXd to_eigen(const GridFunction& x) {
  return Eigen::Map<const Eigen::VectorXd>(x.values.data(), static_cast<Eigen::Index>(x.size()));
}

GridFunction from_eigen(const Eigen::VectorXd& v) {
  return GridFunction(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd apply_f(const NonlinearitySpec& f, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    y(i) = f.f(static_cast<std::size_t>(i), x(i));
  return y;
}

double weighted_dot(const MeasureSpace& space, const Eigen::VectorXd& a,
                    const Eigen::VectorXd& b) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    s += a(i) * b(i) * space.weight(static_cast<std::size_t>(i));
  return s;
}

void require_problem_shape(const HammersteinProblem& p) {
  const auto n = static_cast<Eigen::Index>(p.space.size());
  if (p.S.rows() != n || p.S.cols() != n || p.T.rows() != n || p.T.cols() != n)
    throw std::invalid_argument("operator dimensions do not match the space");
  if (p.g.size() != p.space.size())
    throw std::invalid_argument("g length does not match the space");
  if (!p.f.f) throw std::invalid_argument("nonlinearity rule is missing");
}

}  // namespace

double NonlinearitySpec::deriv(std::size_t cell, double u) const {
  if (dfdu) return dfdu(cell, u);
  const double h = std::max(1e-6, 1e-8 * std::abs(u));
  return (f(cell, u + h) - f(cell, u - h)) / (2.0 * h);
}

NonlinearitySpec::CertCheck NonlinearitySpec::grid_check(
    const NFunction& M, const std::vector<double>& u_samples) const {
  CertCheck check{kInf, kInf};
  const std::size_t cells = has_coercivity ? coercivity_c.size() : 1;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    for (double u1 : u_samples) {
      for (double u2 : u_samples) {
        if (u1 == u2) continue;
        const double d = u1 - u2;
        const double margin = delta * d * d - (f(cell, u1) - f(cell, u2)) * d;
        check.monotonicity_margin = std::min(check.monotonicity_margin, margin);
      }
      if (has_coercivity) {
        const double margin = -u1 * f(cell, u1) -
                              (coercivity_a * M(coercivity_b * std::abs(u1)) - coercivity_c[cell]);
        check.coercivity_margin = std::min(check.coercivity_margin, margin);
      }
    }
  }
  return check;
}

double check_left_inverse(const Eigen::MatrixXd& S, const Eigen::MatrixXd& T) {
  if (S.rows() != S.cols() || T.rows() != T.cols() || S.rows() != T.rows())
    throw std::invalid_argument("check_left_inverse needs square matrices of equal size");
  const Eigen::MatrixXd R =
      S * T - Eigen::MatrixXd::Identity(S.rows(), S.cols());
  return R.cwiseAbs().maxCoeff();
}

double sigma_estimate(const Eigen::MatrixXd& T, const MeasureSpace& space, int n_rayleigh,
                      std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(space.size());
  if (T.rows() != n || T.cols() != n)
    throw std::invalid_argument("operator dimensions do not match the space");

  // <Tx, x> = x^T W T x with W = diag(mu); <Tx,x> >= sigma x^T W x is
  // equivalent to W^{-1/2} sym(W T) W^{-1/2} >= sigma I.
  Eigen::VectorXd sqrt_w(n), inv_sqrt_w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sqrt_w(i) = std::sqrt(space.weight(static_cast<std::size_t>(i)));
    inv_sqrt_w(i) = 1.0 / sqrt_w(i);
  }
  const Eigen::MatrixXd A = sqrt_w.asDiagonal() * T * inv_sqrt_w.asDiagonal();
  const Eigen::MatrixXd B = 0.5 * (A + A.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(B, Eigen::EigenvaluesOnly);
  const double estimate = eig.eigenvalues().minCoeff();

  SampleRng rng(seed);
  for (int s = 0; s < n_rayleigh; ++s) {
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = rng.gaussian();
    const double denom = weighted_dot(space, x, x);
    if (denom == 0.0) continue;
    const double quotient = weighted_dot(space, Eigen::VectorXd(T * x), x) / denom;
    if (quotient < estimate - 1e-9)
      throw std::logic_error("sigma_estimate failed its Rayleigh certification");
  }
  return estimate;
}

double verify_minty(const HammersteinProblem& problem, int pair_samples, std::uint64_t seed) {
  require_problem_shape(problem);
  const auto n = static_cast<Eigen::Index>(problem.space.size());
  SampleRng rng(seed);
  double min_val = kInf;
  for (int s = 0; s < pair_samples; ++s) {
    const double scale = std::pow(10.0, rng.uniform(-1.0, 1.0));
    Eigen::VectorXd x1(n), x2(n);
    for (Eigen::Index i = 0; i < n; ++i) x1(i) = scale * rng.gaussian();
    for (Eigen::Index i = 0; i < n; ++i) x2(i) = scale * rng.gaussian();
    const Eigen::VectorXd d = x1 - x2;
    // Phi x1 - Phi x2 = T d - (f(x1) - f(x2)); the Tg part cancels.
    const Eigen::VectorXd phi_diff =
        problem.T * d - (apply_f(problem.f, x1) - apply_f(problem.f, x2));
    min_val = std::min(min_val, weighted_dot(problem.space, phi_diff, d));
  }
  return min_val;
}

std::optional<double> rothe_radius(const HammersteinProblem& problem, const PhiMinorant& phi,
                                   double gamma, double R_max) {
  require_problem_shape(problem);
  if (phi.arity() != 1 || phi.domain() != PhiDomain::large)
    throw std::invalid_argument("rothe_radius needs a one-argument large-domain minorant");
  if (!problem.f.has_coercivity)
    throw std::invalid_argument("rothe_radius needs a coercivity certificate (a, b, c)");
  const double a = problem.f.coercivity_a;
  const double b = problem.f.coercivity_b;
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("coercivity constants a, b must be positive");

  double cbar = 0.0;
  for (std::size_t i = 0; i < problem.space.size(); ++i)
    cbar += problem.f.coercivity_c[i] * problem.space.weight(i);

  const Eigen::VectorXd tg = problem.T * to_eigen(problem.g);
  const double tg_norm = luxemburg_norm(problem.M.conjugate(), problem.space, from_eigen(tg));

  const double sigma = problem.sigma;
  auto expr = [&](double R) {
    const double sigma_term = sigma >= 0.0 ? 0.0 : sigma * gamma * gamma * R;
    return sigma_term + a * phi(b * R) / R - 2.0 * tg_norm - cbar / R;
  };

  // The minorant is only valid for arguments >= 1, so the scan starts where
  // b R >= 1.
  const double R_lo = std::max(1.0, 1.0 / b);
  if (R_lo > R_max) return std::nullopt;
  if (expr(R_lo) >= 0.0) return R_lo;

  const auto grid = log_grid(R_lo, R_max, 400);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (expr(grid[i]) >= 0.0) {
      double lo = grid[i - 1], hi = grid[i];
      for (int it = 0; it < 200 && (hi - lo) > 1e-10 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (expr(mid) >= 0.0 ? hi : lo) = mid;
      }
      return hi;
    }
  }
  return std::nullopt;
}

double verify_rothe(const HammersteinProblem& problem, double R, int sphere_samples,
                    std::uint64_t seed) {
  require_problem_shape(problem);
  if (!(R > 0.0)) throw std::invalid_argument("verify_rothe requires R > 0");
  const auto n = static_cast<Eigen::Index>(problem.space.size());
  const Eigen::VectorXd tg = problem.T * to_eigen(problem.g);
  SampleRng rng(seed);
  double min_val = kInf;
  for (int s = 0; s < sphere_samples; ++s) {
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = rng.gaussian();
    GridFunction dir = from_eigen(d);
    const double norm = luxemburg_norm(problem.M, problem.space, dir);
    if (norm == 0.0) continue;
    const Eigen::VectorXd x = (R / norm) * d;
    const Eigen::VectorXd phi_x = problem.T * x - apply_f(problem.f, x) - tg;
    min_val = std::min(min_val, weighted_dot(problem.space, phi_x, x));
  }
  return min_val;
}

bool uniqueness_certificate(double sigma, double delta) {
  if (!std::isfinite(sigma) || !std::isfinite(delta))
    throw std::invalid_argument("sigma and delta must be finite");
  return sigma - delta > 0.0;
}

SolveResult solve(const HammersteinProblem& problem, double tol, int max_iter,
                  const GridFunction* x0) {
  require_problem_shape(problem);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(problem.space.size());

  const Eigen::VectorXd g = to_eigen(problem.g);
  auto fixed_point_map = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return problem.S * apply_f(problem.f, x) + g;
  };
  auto residual_norm = [&](const Eigen::VectorXd& x) {
    return luxemburg_norm(problem.M, problem.space, from_eigen(x - fixed_point_map(x)));
  };

  SolveResult result;
  result.certificates.st_residual = check_left_inverse(problem.S, problem.T);
  result.certificates.sigma = problem.sigma;
  result.certificates.delta = problem.f.delta;
  result.certificates.uniqueness = uniqueness_certificate(problem.sigma, problem.f.delta);

  Eigen::VectorXd x = x0 ? to_eigen(*x0) : g;
  double res = residual_norm(x);
  result.residual_history.push_back(res);
  Eigen::VectorXd best_x = x;
  double best_res = res;

  int iter = 0;
  double tau = 1.0;
  bool stagnated = false;
  while (iter < max_iter && res > tol && !stagnated) {
    const Eigen::VectorXd candidate = (1.0 - tau) * x + tau * fixed_point_map(x);
    ++iter;
    const double cand_res = residual_norm(candidate);
    if (cand_res < res) {
      x = candidate;
      res = cand_res;
      result.residual_history.push_back(res);
      if (res < best_res) {
        best_res = res;
        best_x = x;
      }
      tau = std::min(1.0, tau * 1.25);
    } else {
      tau *= 0.5;
      if (tau < 1e-6) stagnated = true;
    }
    // Plateau check: less than 0.1% progress over the last ten accepted steps.
    const auto& hist = result.residual_history;
    if (hist.size() >= 11 && res > 0.999 * hist[hist.size() - 11]) stagnated = true;
  }

  if (res > tol && iter < max_iter) {
    // Newton on Phi x = T x - f(x) - T g with an Armijo line search on the
    // squared weighted-L2 norm of Phi.
    result.used_newton = true;
    const Eigen::VectorXd tg = problem.T * g;
    auto phi_of = [&](const Eigen::VectorXd& z) -> Eigen::VectorXd {
      return problem.T * z - apply_f(problem.f, z) - tg;
    };
    auto merit = [&](const Eigen::VectorXd& z) {
      const Eigen::VectorXd p = phi_of(z);
      return weighted_dot(problem.space, p, p);
    };
    while (iter < max_iter && res > tol) {
      const Eigen::VectorXd phi_x = phi_of(x);
      Eigen::MatrixXd J = problem.T;
      for (Eigen::Index i = 0; i < n; ++i)
        J(i, i) -= problem.f.deriv(static_cast<std::size_t>(i), x(i));
      const Eigen::VectorXd step = J.partialPivLu().solve(-phi_x);
      if (!step.allFinite()) break;
      const double m0 = merit(x);
      double t = 1.0;
      while (t > 1e-12 && !(merit(x + t * step) <= (1.0 - 1e-4 * t) * m0)) t *= 0.5;
      ++iter;
      if (t <= 1e-12) break;  // no descent: stationary point of the merit
      x += t * step;
      res = residual_norm(x);
      result.residual_history.push_back(res);
      if (res < best_res) {
        best_res = res;
        best_x = x;
      }
    }
  }

  result.converged = best_res <= tol;
  result.x = from_eigen(best_x);
  result.residual_L = best_res;
  result.iterations = iter;
  return result;
}

}  // namespace orlicz

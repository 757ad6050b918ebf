// N-functions (convex Young functions): a small analytic catalog with
// evaluation, derivative, inverse, Legendre-Fenchel conjugation, and
// finite-grid structural probes (Delta_2, Delta_3, the M(ku)/(u (M*)^{-1}(u))
// growth condition).
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orlicz {

enum class NFunctionKind { power, exp_minus_linear, exp_square, entropy_like, power_log, sum };

/// Serializable description of a catalog N-function.
struct NFunctionSpec {
  NFunctionKind kind = NFunctionKind::power;
  double p = 2.0;                     // exponent for power / power_log
  std::vector<NFunctionSpec> members; // sum kind only

  /// Throws std::invalid_argument on violated invariants (p <= 1, sum with
  /// fewer than two members, ...).
  void validate() const;
};

/// An N-function M with M(0) = 0, M convex and strictly increasing,
/// M(u)/u -> 0 at 0 and -> infinity at infinity. Immutable and cheap to copy.
///
/// Evaluation returns +inf past the overflow edge of the double range;
/// callers treat that as "outside the Orlicz class numerically".
class NFunction {
 public:
  /// M(u). Throws std::domain_error for negative or non-finite u.
  double operator()(double u) const;
  /// M'(u), analytic per catalog entry.
  double deriv(double u) const;
  /// Smallest u with M(u) = y, |M(u) - y| <= 1e-12 max(y, 1).
  /// Throws std::domain_error for negative or non-finite y.
  double inverse(double y) const;
  /// Legendre-Fenchel conjugate M*(v) = sup_u {uv - M(u)}. Analytic for the
  /// known pairs (power <-> scaled power, exp_minus_linear <-> entropy_like),
  /// numeric stationary-point solve otherwise.
  NFunction conjugate() const;

  std::string name() const;
  /// Exponent p when this is exactly the power catalog entry u^p.
  std::optional<double> power_exponent() const;

  static NFunction power(double p);  // u^p; p > 0 accepted so that degenerate
                                     // (non-N-function) cases can be probed
  static NFunction exp_minus_linear();        // e^u - u - 1
  static NFunction exp_square();              // e^{u^2} - 1
  static NFunction entropy_like();            // (1+u) ln(1+u) - u
  static NFunction power_log(double p);       // u^p ln(1+u)
  static NFunction sum(std::vector<NFunction> members);
  static NFunction from_spec(const NFunctionSpec& spec);  // validates

  struct Impl;

 private:
  explicit NFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Largest u (approximately) with M(u) still finite in double precision.
double finite_range_max(const NFunction& M);

struct NFunctionReport {
  double worst_convexity_violation = 0.0;  // relative midpoint-convexity excess
  double ratio_at_min = 0.0;               // M(u)/u at the small grid end
  double ratio_at_max = 0.0;               // M(u)/u at the large (finite) end
  bool convex_ok = false;
  bool zero_limit_ok = false;
  bool infinity_limit_ok = false;
  bool pass = false;
};

/// Finite-grid evidence that M is an N-function: midpoint convexity over all
/// grid pairs (slack 1e-12 relative), M(u)/u < 1e-3 at the small end, and a
/// growth test at the large end (see implementation notes).
NFunctionReport verify_nfunction(const NFunction& M, const std::vector<double>& grid);

struct Delta2Report {
  double sup_ratio = 0.0;  // sup of M(2u)/M(u) over the scanned grid
  bool verdict = false;
  std::optional<double> overflow_u;  // smallest u where M(2u) left the double range
};

/// Delta_2 probe: sup M(2u)/M(u) over a log grid in [1, u_max]; verdict true
/// iff the ratio stays bounded (ratio at u_max <= 2x ratio at u_max/10).
/// Overflow of M(2u) yields verdict false with the diverging u recorded.
Delta2Report delta2_probe(const NFunction& M, double u_max);

struct Delta3Report {
  bool verdict = false;
  double u0 = 0.0;                        // onset of validity when verdict holds
  std::optional<double> finite_range_end;  // set when overflow truncated the scan
};

/// Delta_3 probe: u M(u) <= M(ku) for all grid u in [u0, u_max], for the
/// smallest such u0 found by scanning. Requires k > 1.
Delta3Report delta3_probe(const NFunction& M, double k, double u_max);

struct Condition4Report {
  double growth_factor = 0.0;  // r(u_hi) / r(u_hi/10) on the finite range
  bool increasing_trend = false;
  bool verdict = false;
  std::optional<double> overflow_u;
};

/// Growth-condition probe for r(u) = M(ku)/(u (M*)^{-1}(u)) -> infinity:
/// verdict true iff r increases over the top (finite) decade and grows by at
/// least a factor 2 across it. Requires k > 1.
Condition4Report growth_condition4_probe(const NFunction& M, double k, double u_max);

}  // namespace orlicz

#pragma once

// Numerical kernel: double-exponential quadrature for integrands with
// algebraic endpoint singularities, log-gamma/beta/AGM used as closed-form
// oracles, and a safeguarded Newton/bisection solver for increasing functions.

#include <cstdint>
#include <functional>
#include <optional>

namespace gtrig::numerics {

inline constexpr double kDefaultQuadTol = 1e-13;
inline constexpr double kDefaultRootTol = 1e-13;
inline constexpr std::int64_t kDefaultMaxEvaluations = std::int64_t{1} << 20;
inline constexpr int kDefaultMaxIter = 200;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

// Integrand receiving the abscissa x together with (upper - x) computed
// without cancellation; integrands singular at the upper end should build
// their singular factor from the second argument.
using ComplementIntegrand = std::function<double(double x, double dist_to_upper)>;

/// Tanh-sinh quadrature of `f` over [lower, upper].
///
/// Refines by halving the step until two successive levels agree to `tol`
/// (absolute) or the difference reaches the rounding floor of the sum.
/// Nodes lie strictly inside the interval, so integrable endpoint
/// singularities are never evaluated.
///
/// Throws DomainError for an empty interval or tol <= 0, NonConvergence when
/// `max_evaluations` is exhausted and NonFiniteIntegrand when `f` returns a
/// non-finite value.
QuadratureResult integrate_endpoint_singular(const ComplementIntegrand& f, double lower, double upper,
                                             double tol = kDefaultQuadTol,
                                             std::int64_t max_evaluations = kDefaultMaxEvaluations);

// Plain integrand; nodes whose abscissa rounds onto an endpoint are skipped.
QuadratureResult integrate_endpoint_singular(const std::function<double(double)>& f, double lower, double upper,
                                             double tol = kDefaultQuadTol,
                                             std::int64_t max_evaluations = kDefaultMaxEvaluations);

struct ExtendedQuadratureResult {
  long double value = 0;
  long double error_estimate = 0;
  std::int64_t evaluations = 0;
};

using ExtendedIntegrand = std::function<long double(long double x, long double dist_to_upper)>;

// The same rule in long double, with nodes and weights computed in long double,
// for polishing double results to the last bit. Intended for bounded
// integrands: nodes within eps^2 (of long double) of an endpoint, relative to
// the half-width, are omitted. Where long double is no wider than double this
// matches the double version up to that cutoff.
ExtendedQuadratureResult integrate_endpoint_singular_extended(const ExtendedIntegrand& f, long double lower,
                                                              long double upper, long double tol,
                                                              std::int64_t max_evaluations = kDefaultMaxEvaluations);

// ln(Gamma(x)) for x > 0.
double log_gamma(double x);

// Euler beta function B(a, b) for a, b > 0.
double beta(double a, double b);

// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b);

struct SolveOptions {
  double tol = kDefaultRootTol;
  int max_iter = kDefaultMaxIter;
};

/// Finds s in [lo, hi] with f(s) = target for f strictly increasing.
///
/// Convergence is judged on the residual |f(s) - target|, scaled down by
/// |target| when it is below one. When `deriv` is given Newton steps are
/// taken and any step leaving the current bracket is replaced by bisection.
/// If the bracket shrinks to adjacent doubles before the residual test
/// passes, the endpoint with the smaller residual is returned: no
/// representable s does better.
double solve_increasing(const std::function<double(double)>& f, double lo, double hi, double target,
                        const std::optional<std::function<double(double)>>& deriv = std::nullopt,
                        const SolveOptions& opts = {});

}  // namespace gtrig::numerics

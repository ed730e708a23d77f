#pragma once

// Generalized trigonometric functions sin_{p,q}, cos_{p,q}, arcsin_{p,q} and
// the half-period pi_{p,q}.
//
// arcsin_{p,q}(s) = integral_0^s (1 - t^q)^(-1/p) dt on [0, 1]; sin_{p,q} is its
// inverse on [0, pi_{p,q}/2], continued by x -> pi_{p,q} - x to [0, pi_{p,q}]
// and then oddly and 2 pi_{p,q}-periodically to the real line. cos_{p,q} is
// the derivative of sin_{p,q} and satisfies |cos|^p + |sin|^q = 1.

#include <cstdint>

#include "gtrig/numerics.hpp"

namespace gtrig {

// Exponent pair (p, q) with 1 < p, q <= 1000.
class ParamPair {
 public:
  static constexpr double kMaxExponent = 1000.0;

  // Throws DomainError with "p must exceed 1" style messages.
  ParamPair(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }
  // Conjugate exponents p/(p-1) and q/(q-1).
  double p_star() const { return p_ / (p_ - 1); }
  double q_star() const { return q_ / (q_ - 1); }

  // The pair (q*, p*) appearing in the duality relations.
  ParamPair dual() const { return ParamPair(q_star(), p_star()); }

  friend bool operator==(const ParamPair&, const ParamPair&) = default;

 private:
  double p_;
  double q_;
};

struct EvalConfig {
  double quad_tol = numerics::kDefaultQuadTol;
  double root_tol = numerics::kDefaultRootTol;
  double identity_tol = 1e-9;
  int max_iter = numerics::kDefaultMaxIter;
  double fd_step = 1e-5;
  std::int64_t max_evaluations = numerics::kDefaultMaxEvaluations;

  // Throws DomainError unless all tolerances are positive and max_iter >= 1.
  void validate() const;
};

struct FunctionValue {
  double value = 0.0;
  // Quarter period of x mod 2 pi_{p,q} in [0, 2 pi_{p,q}); quarters are left-closed.
  int quadrant = 0;
  // |x| reduced into [0, pi_{p,q}/2].
  double reduced_x = 0.0;
};

struct SinCos {
  FunctionValue sin;
  FunctionValue cos;
  // 1 - |sin| and 1 - |cos| to full relative precision, for expressions that
  // would otherwise cancel near the quarter period or near zero.
  double one_minus_abs_sin = 1.0;
  double one_minus_abs_cos = 0.0;
  // pi_{p,q}/2 - reduced_x, taken before rounding either term to double.
  double quarter_distance = 0.0;
};

// pi_{p,q} = 2 arcsin_{p,q}(1), cached per (pair, quad_tol).
double pi_pq(const ParamPair& pp, const EvalConfig& cfg = {});

// Throws DomainError unless 0 <= s <= 1.
double arcsin_pq(const ParamPair& pp, double s, const EvalConfig& cfg = {});

// arcsin_{p,q}(1 - gap) for 0 <= gap <= 1, exact in gap. Near s = 1 a double s
// cannot resolve the argument (sin_{p,q} rounds to 1 on a window of width about
// eps^(1 - 1/p)); pairing this with SinCos::one_minus_abs_sin inverts there too.
double arcsin_pq_from_gap(const ParamPair& pp, double gap, const EvalConfig& cfg = {});

FunctionValue sin_pq(const ParamPair& pp, double x, const EvalConfig& cfg = {});

// Magnitude (1 - |sin|^q)^(1/p), positive in quadrants 0 and 3, negative in 1
// and 2; a zero magnitude is returned as +0.
FunctionValue cos_pq(const ParamPair& pp, double x, const EvalConfig& cfg = {});

// Both functions from a single inversion.
SinCos sincos_pq(const ParamPair& pp, double x, const EvalConfig& cfg = {});

/// Residual of the p-Laplacian equation
///   (|u'|^(p-2) u')' + ((p-1) q / p) |u|^(q-2) u = 0
/// for u = sin_{p,q}, u' = cos_{p,q}, with the outer derivative taken by a
/// central difference of step h. Requires 10h < x < pi_{p,q}/2 - 10h.
double ode_residual(const ParamPair& pp, double x, double h, const EvalConfig& cfg = {});

// base^exponent for base >= 0. Bases in [-1e-15, 0) are rounding noise and
// are treated as zero; anything more negative throws DomainError.
double nonneg_pow(double base, double exponent);

}  // namespace gtrig

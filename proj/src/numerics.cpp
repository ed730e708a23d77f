#include "gtrig/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gtrig/error.hpp"

namespace gtrig::numerics {

namespace {

// One abscissa of the tanh-sinh rule on [-1, 1] for t > 0 (or t = 0).
// `gap` is 1 - x(t), equal to 1 + x(-t); `weight` is x'(t).
template <class Real>
struct Node {
  Real gap;
  Real weight;
};

// Nodes closer to an endpoint than this (relative to the half-width) are not
// generated. Double keeps every representable node so that integrable
// singularities are resolved; the extended rule serves bounded integrands, for
// which anything below eps^2 cannot change the sum.
template <class Real>
constexpr Real kMinGap = std::numeric_limits<Real>::min();
template <>
constexpr long double kMinGap<long double> =
    std::numeric_limits<long double>::epsilon() * std::numeric_limits<long double>::epsilon();

constexpr int kCachedLevels = 12;
constexpr int kMaxLevels = 24;

// Nodes added at `level`: t = k * 2^-level for odd k (all k >= 0 on level 0).
template <class Real>
std::vector<Node<Real>> make_level(int level) {
  constexpr Real kHalfPi = std::numbers::pi_v<Real> / 2;
  std::vector<Node<Real>> nodes;
  const Real h = std::ldexp(Real(1), -level);
  const int stride = level == 0 ? 1 : 2;
  for (long k = level == 0 ? 0 : 1;; k += stride) {
    const Real t = static_cast<Real>(k) * h;
    const Real u = kHalfPi * std::sinh(t);
    const Real e = std::exp(-2 * u);
    const Real gap = 2 * e / (1 + e);
    if (gap < kMinGap<Real>) break;
    const Real weight = kHalfPi * std::cosh(t) * 4 * e / ((1 + e) * (1 + e));
    nodes.push_back({gap, weight});
  }
  return nodes;
}

template <class Real>
const std::vector<std::vector<Node<Real>>>& cached_levels() {
  static const std::vector<std::vector<Node<Real>>> table = [] {
    std::vector<std::vector<Node<Real>>> levels;
    for (int l = 0; l <= kCachedLevels; ++l) levels.push_back(make_level<Real>(l));
    return levels;
  }();
  return table;
}

template <class Real>
std::int64_t nodes_in_level(const std::vector<Node<Real>>& nodes, int level) {
  auto n = static_cast<std::int64_t>(2 * nodes.size());
  // t = 0 is a single node.
  return level == 0 ? n - 1 : n;
}

// Neumaier-compensated running sum.
template <class Real>
struct CompensatedSum {
  Real sum = 0;
  Real carry = 0;

  void add(Real v) {
    const Real t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  Real value() const { return sum + carry; }
};

template <class Real>
struct LevelSum {
  CompensatedSum<Real> sum;
  Real abs_sum = 0;
};

template <class Real, class F>
LevelSum<Real> sum_level(const F& f, const std::vector<Node<Real>>& nodes, int level, Real lower, Real upper) {
  const Real half = (upper - lower) / 2;
  const Real width = upper - lower;
  LevelSum<Real> acc;
  auto add = [&](Real x, Real xc, Real w) {
    const Real y = f(x, xc);
    if (!std::isfinite(y)) {
      throw NonFiniteIntegrand("integrand is not finite at x = " + std::to_string(x));
    }
    acc.sum.add(w * y);
    acc.abs_sum += w * std::abs(y);
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& [gap, weight] = nodes[i];
    const Real offset = half * gap;
    if (level == 0 && i == 0) {
      add(lower + half, half, weight);
      continue;
    }
    if (offset > 0) {
      add(upper - offset, offset, weight);
      add(lower + offset, width - offset, weight);
    }
  }
  return acc;
}

template <class Real>
struct Estimate {
  Real value = 0;
  Real error_estimate = 0;
  std::int64_t evaluations = 0;
};

template <class Real, class F>
Estimate<Real> tanh_sinh(const F& f, Real lower, Real upper, Real tol, std::int64_t max_evaluations) {
  if (!(std::isfinite(lower) && std::isfinite(upper) && lower < upper)) {
    throw DomainError("integration interval must be finite with lower < upper");
  }
  if (!(tol > 0)) throw DomainError("quadrature tolerance must be positive");

  constexpr Real kEps = std::numeric_limits<Real>::epsilon();
  const auto& cache = cached_levels<Real>();
  const Real half = (upper - lower) / 2;
  Estimate<Real> result;
  // Weighted sum over every node so far; level l's estimate is h_l * half * total.
  CompensatedSum<Real> total;
  Real estimate = 0;
  Real l1 = 0;
  std::vector<Node<Real>> scratch;
  for (int level = 0; level <= kMaxLevels; ++level) {
    const std::vector<Node<Real>>* nodes = nullptr;
    if (level <= kCachedLevels) {
      nodes = &cache[static_cast<std::size_t>(level)];
    } else {
      scratch = make_level<Real>(level);
      nodes = &scratch;
    }
    const std::int64_t cost = nodes_in_level(*nodes, level);
    if (result.evaluations + cost > max_evaluations) break;
    result.evaluations += cost;

    const Real h = std::ldexp(Real(1), -level);
    const LevelSum<Real> s = sum_level(f, *nodes, level, lower, upper);
    total.add(s.sum.sum);
    total.add(s.sum.carry);
    const Real previous = estimate;
    estimate = h * half * total.value();
    l1 = level == 0 ? h * half * s.abs_sum : l1 / 2 + h * half * s.abs_sum;
    if (level == 0) continue;
    const Real err = std::abs(estimate - previous);
    result.value = estimate;
    result.error_estimate = err;
    if (level >= 3 && (err <= tol || err <= 16 * kEps * l1)) return result;
  }
  throw NonConvergence("tanh-sinh quadrature did not reach tolerance " + std::to_string(tol) + " within " +
                       std::to_string(max_evaluations) + " evaluations (last error estimate " +
                       std::to_string(result.error_estimate) + ")");
}

}  // namespace

QuadratureResult integrate_endpoint_singular(const ComplementIntegrand& f, double lower, double upper, double tol,
                                             std::int64_t max_evaluations) {
  const Estimate<double> e = tanh_sinh(f, lower, upper, tol, max_evaluations);
  return {e.value, e.error_estimate, e.evaluations};
}

ExtendedQuadratureResult integrate_endpoint_singular_extended(const ExtendedIntegrand& f, long double lower,
                                                              long double upper, long double tol,
                                                              std::int64_t max_evaluations) {
  const Estimate<long double> e = tanh_sinh(f, lower, upper, tol, max_evaluations);
  return {e.value, e.error_estimate, e.evaluations};
}

QuadratureResult integrate_endpoint_singular(const std::function<double(double)>& f, double lower, double upper,
                                             double tol, std::int64_t max_evaluations) {
  const ComplementIntegrand guarded = [&](double x, double) {
    if (x <= lower || x >= upper) return 0.0;
    return f(x);
  };
  return integrate_endpoint_singular(guarded, lower, upper, tol, max_evaluations);
}

namespace {

// Godfrey's Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

// zeta(k) for k = 2..40.
constexpr std::array<double, 39> kZeta = {
    1.644934066848226436472415, 1.202056903159594285399738, 1.082323233711138191516004,
    1.036927755143369926331365, 1.017343061984449139714518, 1.008349277381922826839798,
    1.004077356197944339378685, 1.002008392826082214417853, 1.000994575127818085337146,
    1.000494188604119464558702, 1.000246086553308048298638, 1.000122713347578489146752,
    1.000061248135058704829259, 1.000030588236307020493552, 1.000015282259408651871733,
    1.000007637197637899762274, 1.000003817293264999839856, 1.000001908212716553938926,
    1.000000953962033872796113, 1.000000476932986787806463, 1.00000023845050272773299,
    1.000000119219925965311073, 1.00000005960818905125948,  1.00000002980350351465228,
    1.000000014901554828365041, 1.000000007450711789835429, 1.000000003725334024788457,
    1.000000001862659723513049, 1.000000000931327432419668, 1.000000000465662906503378,
    1.000000000232831183367651, 1.000000000116415501727005, 1.000000000058207720879027,
    1.000000000029103850444971, 1.000000000014551921891042, 1.000000000007275959835057,
    1.000000000003637979547379, 1.000000000001818989650307, 1.000000000000909494784026};

constexpr double kEulerGamma = 0.5772156649015328606065120900824024310422;

// ln Gamma(1 + z) = -gamma z + sum_k zeta(k) (-z)^k / k for |z| <= 0.25.
double log_gamma_1p_series(double z) {
  double sum = 0.0;
  double power = -z;
  for (std::size_t i = 0; i < kZeta.size(); ++i) {
    power *= -z;
    const auto k = static_cast<double>(i + 2);
    sum += kZeta[i] * power / k;
  }
  return -kEulerGamma * z + sum;
}

double log_gamma_lanczos(double x) {
  const double z = x - 1;
  double series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (z + static_cast<double>(k));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0)) throw DomainError("log_gamma requires x > 0");
  if (std::isinf(x)) return x;
  if (std::abs(x - 1) <= 0.25) return log_gamma_1p_series(x - 1);
  if (std::abs(x - 2) <= 0.25) return log_gamma_1p_series(x - 2) + std::log1p(x - 2);
  if (x < 0.75) return log_gamma(x + 1) - std::log(x);
  return log_gamma_lanczos(x);
}

double beta(double a, double b) {
  if (!(a > 0 && b > 0)) throw DomainError("beta requires a > 0 and b > 0");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double agm(double a, double b) {
  if (!(a > 0 && b > 0)) throw DomainError("agm requires a > 0 and b > 0");
  if (!(std::isfinite(a) && std::isfinite(b))) throw DomainError("agm requires finite arguments");
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 2 * std::numeric_limits<double>::epsilon() * std::max(a, b)) break;
    const double mean = (a + b) / 2;
    b = std::sqrt(a * b);
    a = mean;
  }
  return (a + b) / 2;
}

double solve_increasing(const std::function<double(double)>& f, double lo, double hi, double target,
                        const std::optional<std::function<double(double)>>& deriv, const SolveOptions& opts) {
  if (!(lo <= hi)) throw DomainError("solve_increasing requires lo <= hi");
  if (!std::isfinite(target)) throw DomainError("solve_increasing requires a finite target");
  if (!(opts.tol > 0)) throw DomainError("root tolerance must be positive");
  const double tol = opts.tol * std::min(1.0, std::abs(target));

  double r_lo = f(lo) - target;
  double r_hi = f(hi) - target;
  if (r_lo > tol || r_hi < -tol) {
    throw BracketError("target " + std::to_string(target) + " is outside [f(lo), f(hi)] = [" +
                       std::to_string(r_lo + target) + ", " + std::to_string(r_hi + target) + "]");
  }
  if (std::abs(r_lo) <= tol) return lo;
  if (std::abs(r_hi) <= tol) return hi;

  double x = lo + (-r_lo) / (r_hi - r_lo) * (hi - lo);
  if (!(x > lo && x < hi)) x = lo + (hi - lo) / 2;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const double r = f(x) - target;
    if (std::abs(r) <= tol) {
      // One unverified Newton correction from an accepted point only sharpens it.
      if (deriv && r != 0) {
        const double d = (*deriv)(x);
        if (std::isfinite(d) && d > 0) {
          const double polished = x - r / d;
          if (polished >= lo && polished <= hi) return polished;
        }
      }
      return x;
    }
    if (r < 0) {
      lo = x;
      r_lo = r;
    } else {
      hi = x;
      r_hi = r;
    }
    if (std::nextafter(lo, hi) >= hi) return std::abs(r_lo) <= std::abs(r_hi) ? lo : hi;

    const double mid = lo + (hi - lo) / 2;
    double next = mid;
    if (deriv) {
      const double d = (*deriv)(x);
      if (std::isfinite(d) && d > 0) {
        const double newton = x - r / d;
        if (newton > lo && newton < hi && newton != x) next = newton;
      }
    }
    x = next;
  }
  throw NonConvergence("solve_increasing did not converge in " + std::to_string(opts.max_iter) + " iterations");
}

}  // namespace gtrig::numerics

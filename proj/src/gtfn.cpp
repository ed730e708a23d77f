#include "gtrig/gtfn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "gtrig/error.hpp"

namespace gtrig {

namespace {

void check_exponent(const char* name, double v) {
  const std::string n(name);
  if (std::isnan(v)) throw DomainError(n + " must be a number");
  if (!(v > 1)) throw DomainError(n + " must exceed 1");
  if (!(v <= ParamPair::kMaxExponent)) throw DomainError(n + " must not exceed 1000");
}

using Ext = long double;

// Extended-precision evaluations stop here rather than at max_evaluations; when
// they do not converge the double result is kept.
constexpr std::int64_t kExtMaxEvaluations = std::int64_t{1} << 13;

// Below this gap the double tail integral already fixes 1 - c to well under half
// an ulp, and the remainder integrand is too small relative to its rounding
// noise for the extended rule to converge.
constexpr double kPolishMinGap = 1.0 / 64;

// (1 - t^q)^(-1/p) from t.
template <class R>
R integrand_from_t(const ParamPair& pp, R t) {
  return std::pow(-std::expm1(R(pp.q()) * std::log(t)), -1 / R(pp.p()));
}

// (1 - t^q)^(-1/p) from the distance c = 1 - t, accurate as t -> 1.
double integrand_from_gap(const ParamPair& pp, double c) {
  return std::pow(-std::expm1(pp.q() * std::log1p(-c)), -1 / pp.p());
}

// integral_0^c (q w)^(-1/p) dw, the leading singular part of the tail integrand.
Ext tail_leading(const ParamPair& pp, Ext c) {
  const Ext p = pp.p();
  const Ext expo = 1 - 1 / p;
  return std::pow(Ext(pp.q()), -1 / p) * std::pow(c, expo) / expo;
}

// (1 - (1 - w)^q)^(-1/p) - (q w)^(-1/p) >= 0, without cancellation; it vanishes
// like w^(1 - 1/p) at w = 0.
template <class R>
R tail_remainder(const ParamPair& pp, R w) {
  if (w <= 0) return 0;
  const R p = pp.p();
  const R q = pp.q();
  const R ratio = -std::expm1(q * std::log1p(-w)) / (q * w);
  return std::pow(q * w, -1 / p) * std::expm1(-std::log(ratio) / p);
}

// integral_{1-c}^{1} (1 - t^q)^(-1/p) dt in the gap w = 1 - t over [0, c]. The
// (q w)^(-1/p) part is integrated in closed form: for p near 1 most of its mass
// lies below any node the quadrature can place. The quadrature's upper-end
// offset c - w' is the gap itself. The closed part is added in long double so
// the sum rounds once.
double tail_integral(const ParamPair& pp, double c, const EvalConfig& cfg) {
  if (c <= 0) return 0.0;
  const auto f = [&pp](double, double gap) { return tail_remainder(pp, gap); };
  const double rest = numerics::integrate_endpoint_singular(f, 0.0, c, cfg.quad_tol, cfg.max_evaluations).value;
  return static_cast<double>(tail_leading(pp, c) + rest);
}

// integral_0^s (1 - t^q)^(-1/p) dt for s <= 1/2.
double head_integral(const ParamPair& pp, double s, const EvalConfig& cfg) {
  if (s <= 0) return 0.0;
  const auto f = [&pp](double t, double) { return integrand_from_t(pp, t); };
  return numerics::integrate_endpoint_singular(f, 0.0, s, cfg.quad_tol, cfg.max_evaluations).value;
}

std::optional<Ext> extended(const numerics::ExtendedIntegrand& f, Ext upper, const EvalConfig& cfg) {
  try {
    const std::int64_t cap = std::min(cfg.max_evaluations, kExtMaxEvaluations);
    return numerics::integrate_endpoint_singular_extended(f, 0, upper, std::numeric_limits<Ext>::min(), cap).value;
  } catch (const NonConvergence&) {
    return std::nullopt;
  }
}

std::optional<Ext> tail_integral_ext(const ParamPair& pp, Ext c, const EvalConfig& cfg) {
  if (c <= 0) return Ext(0);
  const auto rest = extended([&pp](Ext, Ext gap) { return tail_remainder(pp, gap); }, c, cfg);
  if (!rest) return std::nullopt;
  return tail_leading(pp, c) + *rest;
}

std::optional<Ext> head_integral_ext(const ParamPair& pp, Ext s, const EvalConfig& cfg) {
  if (s <= 0) return Ext(0);
  return extended([&pp](Ext t, Ext) { return integrand_from_t(pp, t); }, s, cfg);
}

double arcsin_with_pi(const ParamPair& pp, double s, double half_pi, const EvalConfig& cfg) {
  if (s <= 0.5) return head_integral(pp, s, cfg);
  if (s >= 1) return half_pi;
  return half_pi - tail_integral(pp, 1 - s, cfg);
}

// F(s) in extended precision, split at s = 1/2 like arcsin_with_pi.
std::optional<Ext> arcsin_ext(const ParamPair& pp, double s, Ext half_pi, const EvalConfig& cfg) {
  if (s <= 0.5) return head_integral_ext(pp, s, cfg);
  if (s >= 1) return half_pi;
  const double gap = 1 - s;
  if (gap < kPolishMinGap) return half_pi - tail_integral(pp, gap, cfg);
  const auto tail = tail_integral_ext(pp, gap, cfg);
  if (!tail) return std::nullopt;
  return half_pi - *tail;
}

struct CacheKey {
  std::uint64_t p, q, tol;
  std::int64_t max_evaluations;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    std::uint64_t h = k.p;
    for (std::uint64_t v : {k.q, k.tol, static_cast<std::uint64_t>(k.max_evaluations)}) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class PiCache {
 public:
  Ext get(const ParamPair& pp, const EvalConfig& cfg) {
    const CacheKey key{std::bit_cast<std::uint64_t>(pp.p()), std::bit_cast<std::uint64_t>(pp.q()),
                       std::bit_cast<std::uint64_t>(cfg.quad_tol), cfg.max_evaluations};
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    // Concurrent first computations of one key produce the same value.
    const double plain = 2 * tail_integral(pp, 1.0, cfg);
    const auto ext = tail_integral_ext(pp, 1, cfg);
    // The extended value refines the double one; it is only trusted when they agree.
    const Ext value = ext && std::abs(2 * *ext - plain) <= 1e-12 * plain ? 2 * *ext : Ext(plain);
    std::unique_lock lock(mutex_);
    return values_.try_emplace(key, value).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<CacheKey, Ext, CacheKeyHash> values_;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

Ext pi_ext(const ParamPair& pp, const EvalConfig& cfg) { return pi_cache().get(pp, cfg); }

int quadrant_of(Ext r, Ext pi) {
  const Ext half = pi / 2;
  if (r < half) return 0;
  if (r < pi) return 1;
  if (r < pi + half) return 2;
  return 3;
}

// One Newton step on F(x) = target in extended precision; x is returned as is
// when the extended integral did not converge.
Ext newton_ext(Ext x, std::optional<Ext> value, Ext target, double slope) {
  if (!value || !std::isfinite(slope) || slope <= 0) return x;
  return x - (*value - target) / slope;
}

}  // namespace

ParamPair::ParamPair(double p, double q) : p_(p), q_(q) {
  check_exponent("p", p);
  check_exponent("q", q);
}

void EvalConfig::validate() const {
  if (!(quad_tol > 0 && root_tol > 0 && identity_tol > 0 && fd_step > 0)) {
    throw DomainError("tolerances and finite-difference step must be positive");
  }
  if (max_iter < 1 || max_evaluations < 1) throw DomainError("iteration caps must be at least 1");
}

double nonneg_pow(double base, double exponent) {
  if (base < 0) {
    if (base < -1e-15) throw DomainError("negative base " + std::to_string(base) + " for a fractional power");
    base = 0.0;
  }
  return std::pow(base, exponent);
}

double pi_pq(const ParamPair& pp, const EvalConfig& cfg) { return static_cast<double>(pi_ext(pp, cfg)); }

double arcsin_pq(const ParamPair& pp, double s, const EvalConfig& cfg) {
  if (!(s >= 0 && s <= 1)) throw DomainError("arcsin argument must lie in [0, 1]");
  const Ext half = pi_ext(pp, cfg) / 2;
  const double plain = arcsin_with_pi(pp, s, static_cast<double>(half), cfg);
  const auto ext = arcsin_ext(pp, s, half, cfg);
  return ext ? static_cast<double>(*ext) : plain;
}

double arcsin_pq_from_gap(const ParamPair& pp, double gap, const EvalConfig& cfg) {
  if (!(gap >= 0 && gap <= 1)) throw DomainError("gap must lie in [0, 1]");
  const Ext half = pi_ext(pp, cfg) / 2;
  if (gap >= 0.5) return arcsin_pq(pp, 1 - gap, cfg);
  if (gap >= kPolishMinGap) {
    if (const auto tail = tail_integral_ext(pp, gap, cfg)) return static_cast<double>(half - *tail);
  }
  return static_cast<double>(half - tail_integral(pp, gap, cfg));
}

SinCos sincos_pq(const ParamPair& pp, double x, const EvalConfig& cfg) {
  if (!std::isfinite(x)) throw DomainError("argument must be finite");
  // Reduction in long double against a long double period, so that e.g. the
  // (2, 2) sine of the double nearest pi is the tiny positive difference.
  const Ext pi = pi_ext(pp, cfg);
  const Ext half_ext = pi / 2;
  const Ext period = 2 * pi;

  Ext signed_r = std::fmod(Ext(x), period);
  if (signed_r < 0) signed_r += period;
  if (signed_r >= period) signed_r = 0;
  const int quadrant = quadrant_of(signed_r, pi);

  // Work with |x| so that oddness holds bit for bit.
  Ext r = std::fmod(std::abs(Ext(x)), period);
  const int abs_quadrant = quadrant_of(r, pi);
  double sign = std::signbit(x) ? -1.0 : 1.0;
  if (r >= pi) {
    r -= pi;
    sign = -sign;
  }
  if (r > half_ext) r = pi - r;
  const double half = static_cast<double>(half_ext);

  const numerics::SolveOptions opts{cfg.root_tol, cfg.max_iter};
  Ext s = 0;
  Ext s_gap = 1;
  // 1 - s^q, kept to full relative precision near the quarter period.
  Ext base = 1;
  if (r >= half_ext) {
    s = 1;
    s_gap = 0;
    base = 0;
  } else if (r <= half_ext / 2) {
    if (r > 0) {
      const auto f = [&](double t) { return arcsin_with_pi(pp, t, half, cfg); };
      const auto df = [&](double t) { return integrand_from_t(pp, t); };
      const double s0 = numerics::solve_increasing(f, 0.0, 1.0, static_cast<double>(r), df, opts);
      s = std::clamp(newton_ext(s0, arcsin_ext(pp, s0, half_ext, cfg), r, df(s0)), Ext(0), Ext(1));
      s_gap = 1 - s;
      base = -std::expm1(pp.q() * std::log(s));
    }
  } else {
    // Solve for the gap c = 1 - s from the tail integral.
    const auto g = [&](double c) { return tail_integral(pp, c, cfg); };
    const auto dg = [&](double c) { return integrand_from_gap(pp, c); };
    // 1 - (1 - c)^q <= qc, so G(c) >= A(c) = q^(-1/p) c^(1 - 1/p) / (1 - 1/p), and
    // A^{-1} bounds the root from above. For p near 1 the gap can be far below
    // any fixed bracket, so shrink toward it geometrically.
    const Ext target_ext = half_ext - r;
    const double target = static_cast<double>(target_ext);
    const double expo = 1 - 1 / pp.p();
    double hi = std::min(1.0, std::pow(target * expo * std::pow(pp.q(), 1 / pp.p()), 1 / expo));
    if (hi > 0) {
      while (hi < 1 && g(hi) < target) hi = std::min(1.0, 2 * hi);
      double lo = hi / 2;
      while (lo > 0 && g(lo) > target) {
        hi = lo;
        lo /= 16;
      }
      const double c0 = numerics::solve_increasing(g, lo, hi, target, dg, opts);
      s_gap = c0 >= kPolishMinGap
                  ? std::clamp(newton_ext(c0, tail_integral_ext(pp, c0, cfg), target_ext, dg(c0)), Ext(0), Ext(1))
                  : Ext(c0);
    } else {
      // The gap underflows: sin is 1 and cos is 0 to double precision.
      s_gap = 0;
    }
    s = 1 - s_gap;
    base = -std::expm1(pp.q() * std::log1p(-s_gap));
  }

  SinCos out;
  const double reduced = static_cast<double>(r);
  out.sin = {sign * static_cast<double>(s), quadrant, reduced};
  const Ext magnitude = base > 0 ? std::pow(base, 1 / Ext(pp.p())) : Ext(0);
  const bool negative = abs_quadrant == 1 || abs_quadrant == 2;
  const double cos_value = static_cast<double>(magnitude);
  out.cos = {cos_value == 0 ? 0.0 : (negative ? -cos_value : cos_value), quadrant, reduced};
  out.one_minus_abs_sin = static_cast<double>(s_gap);
  out.quarter_distance = static_cast<double>(half_ext - r);
  // 1 - base^(1/p) with log(base) taken from s^q directly while it is small.
  const Ext sq = std::pow(s, Ext(pp.q()));
  const Ext log_base = sq < 0.5 ? std::log1p(-sq) : std::log(base);
  out.one_minus_abs_cos = static_cast<double>(-std::expm1(log_base / pp.p()));
  return out;
}

FunctionValue sin_pq(const ParamPair& pp, double x, const EvalConfig& cfg) { return sincos_pq(pp, x, cfg).sin; }

FunctionValue cos_pq(const ParamPair& pp, double x, const EvalConfig& cfg) { return sincos_pq(pp, x, cfg).cos; }

double ode_residual(const ParamPair& pp, double x, double h, const EvalConfig& cfg) {
  if (!(h > 0)) throw DomainError("finite-difference step must be positive");
  const double margin = 10 * h;
  const double half = pi_pq(pp, cfg) / 2;
  if (!(x > margin && x < half - margin)) {
    throw DomainError("ode_residual requires 10h < x < pi_pq/2 - 10h");
  }
  const double p = pp.p();
  const double q = pp.q();
  const auto flux = [&](double y) {
    const double c = cos_pq(pp, y, cfg).value;
    return std::copysign(std::pow(std::abs(c), p - 1), c);
  };
  const double dflux = (flux(x + h) - flux(x - h)) / (2 * h);
  const double u = sin_pq(pp, x, cfg).value;
  const double source = (p - 1) * q / p * std::copysign(std::pow(std::abs(u), q - 1), u);
  return dflux + source;
}

}  // namespace gtrig

#include "gtrig/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "gtrig/error.hpp"

namespace gtrig::identities {

namespace {

using Expressions = std::vector<double>;

const std::vector<CatalogEntry> kCatalog = {
    {"pythagorean", ParamKind::pair, 1, "|cos_{p,q} x|^p + |sin_{p,q} x|^q = 1"},
    {"dbl-2-2", ParamKind::none, 1, "sin 2x = 2 sin x cos x"},
    {"dbl-2-4", ParamKind::none, 1, "sin_{2,4} 2x = 2 s c / (1 + s^4)"},
    {"dbl-3:2-3", ParamKind::none, 1, "sin_{3/2,3} 2x = s (1 + c^{3/2}) / (c^{1/2} (1 + s^3))"},
    {"dbl-4:3-4", ParamKind::none, 1, "sin_{4/3,4} 2x = 2 s c^{1/3} / (1 + 4 s^4 c^{4/3})^{1/2}"},
    {"dbl-2-3", ParamKind::none, 1, "sin_{2,3} 2x = 4 s c (3 + c)^3 / ((1 + c) (8 + s^3)^2)"},
    {"dbl-4:3-2", ParamKind::none, 1, "sin_{4/3,2} 2x = 4 s c^{1/3} (1 + c^{4/3}) / (2 c^{2/3} + s^2)^2"},
    {"maf-sin", ParamKind::exponent, 1, "sin_{2,p}(2^{2/p} x) = 2^{2/p} sin_{p*,p} x cos_{p*,p}^{p*-1} x"},
    {"maf-cos", ParamKind::exponent, 1,
     "cos_{2,p}(2^{2/p} x) = cos^{p*} - sin^p = 1 - 2 sin^p = 2 cos^{p*} - 1  (functions of (p*,p))"},
    {"half-sin", ParamKind::exponent, 1, "sin_{p*,p} x = ((1 - cos_{2,p}(2^{2/p} x)) / 2)^{1/p}"},
    {"half-cos", ParamKind::exponent, 1, "cos_{p*,p} x = ((1 + cos_{2,p}(2^{2/p} x)) / 2)^{1/p*}"},
    {"duality-pi", ParamKind::pair, 0, "q pi_{p,q} = p* pi_{q*,p*}"},
    {"duality-sin", ParamKind::pair, 1, "sin_{p,q}(pi_{p,q} x / 2) = cos_{q*,p*}^{q*-1}(pi_{q*,p*} (1 - x) / 2)"},
    {"lemniscate-add", ParamKind::none, 2,
     "sin_{2,4}(u + v) = (s(u) c(v) + c(u) s(v)) / (1 + s(u)^2 s(v)^2)"},
    {"proof-xtoy", ParamKind::none, 1, "sin_{2,3}(2^{2/3} 2y) = 2^{2/3} sin_{3/2,3}(2y) cos_{3/2,3}^{1/2}(2y)"},
    {"proof-sin2x", ParamKind::none, 1, "sin_{4/3,2} 2x = (1 - sin_{2,4}^4(pi_{2,4}/2 - x))^{1/2}"},
    {"proof-f2x", ParamKind::none, 1, "f(2x) = 2 g(x) / (1 + g(x)^2), f = sin_{4/3,2}, g = sin_{2,4}"},
    {"proof-gx", ParamKind::none, 1, "g(x) = 2 g(x/2) (1 - g(x/2)^4)^{1/2} / (1 + g(x/2)^4)"},
    {"proof-sum-diff", ParamKind::none, 1,
     "1/g^2 + g^2 = 4/f(2x)^2 - 2 and 1/g^2 - g^2 = (4/f(2x)) (1/f(2x)^2 - 1)^{1/2}"},
};

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string pair_label(double p, double q) { return "p=" + format_number(p) + ",q=" + format_number(q); }

// Evaluates sin and cos of one parameter pair.
struct Trig {
  ParamPair pp;
  EvalConfig cfg;

  SinCos operator()(double x) const { return sincos_pq(pp, x, cfg); }
  double sin(double x) const { return sin_pq(pp, x, cfg).value; }
  double cos(double x) const { return cos_pq(pp, x, cfg).value; }
  double pi() const { return pi_pq(pp, cfg); }
  // Largest double still in the first quarter; pi() / 2 can round past it.
  double quarter() const {
    double x = pi() / 2;
    while (sin_pq(pp, x, cfg).quadrant != 0) x = std::nextafter(x, 0.0);
    return x;
  }
};

// 1 - sign * cos without cancellation.
double one_minus(const SinCos& sc, double sign) {
  const double c = sign * sc.cos.value;
  return c > 0 ? sc.one_minus_abs_cos : 1 - c;
}

IdentitySpec fixed(std::string_view id, double p, double q, Interval domain,
                   std::function<Expressions(double, double)> sides) {
  IdentitySpec spec;
  spec.id = std::string(id);
  spec.kind = ParamKind::none;
  spec.params = {p, q};
  spec.domain = domain;
  spec.sides = std::move(sides);
  spec.label = pair_label(p, q);
  return spec;
}

// Double-angle identity for a fixed pair: sin(2x) against rhs(s, c).
IdentitySpec double_angle(std::string_view id, const Trig& t, Interval domain,
                          std::function<double(double s, double c)> rhs) {
  return fixed(id, t.pp.p(), t.pp.q(), domain, [t, rhs = std::move(rhs)](double x, double) {
    const SinCos sc = t(x);
    return Expressions{t.sin(2 * x), rhs(sc.sin.value, sc.cos.value)};
  });
}

IdentitySpec build(std::string_view id, const IdentityParams& params, const EvalConfig& cfg) {
  if (id == "pythagorean") {
    const Trig t{ParamPair(params.p, params.q), cfg};
    IdentitySpec spec = fixed(id, params.p, params.q, {-3 * t.pi(), 3 * t.pi()}, [t](double x, double) {
      const SinCos sc = t(x);
      return Expressions{std::pow(std::abs(sc.cos.value), t.pp.p()) + std::pow(std::abs(sc.sin.value), t.pp.q()),
                         1.0};
    });
    spec.kind = ParamKind::pair;
    return spec;
  }
  if (id == "dbl-2-2") {
    const Trig t{ParamPair(2, 2), cfg};
    return double_angle(id, t, {-10, 10}, [](double s, double c) { return 2 * s * c; });
  }
  if (id == "dbl-2-4") {
    const Trig t{ParamPair(2, 4), cfg};
    return double_angle(id, t, {-2 * t.pi(), 2 * t.pi()},
                        [](double s, double c) { return 2 * s * c / (1 + std::pow(s, 4)); });
  }
  if (id == "dbl-3:2-3") {
    const Trig t{ParamPair(1.5, 3), cfg};
    return double_angle(id, t, {0, t.pi() / 4}, [](double s, double c) {
      return s * (1 + nonneg_pow(c, 1.5)) / (nonneg_pow(c, 0.5) * (1 + s * s * s));
    });
  }
  if (id == "dbl-4:3-4") {
    const Trig t{ParamPair(4.0 / 3, 4), cfg};
    return double_angle(id, t, {0, t.pi() / 4}, [](double s, double c) {
      return 2 * s * nonneg_pow(c, 1.0 / 3) / std::sqrt(1 + 4 * std::pow(s, 4) * nonneg_pow(c, 4.0 / 3));
    });
  }
  if (id == "dbl-2-3") {
    const Trig t{ParamPair(2, 3), cfg};
    return double_angle(id, t, {0, t.quarter()}, dbl_2_3_rhs);
  }
  if (id == "dbl-4:3-2") {
    const Trig t{ParamPair(4.0 / 3, 2), cfg};
    return double_angle(id, t, {0, t.quarter()}, dbl_4_3_2_rhs);
  }
  if (id == "maf-sin" || id == "maf-cos" || id == "half-sin" || id == "half-cos") {
    const double p = params.p;
    const Trig two_p{ParamPair(2, p), cfg};
    const Trig conj{ParamPair(ParamPair(p, 2).p_star(), p), cfg};
    const double p_star = conj.pp.p();
    // 2^{2/p} x written as 2 pi_{2,p} x / pi_{p*,p} (equal by the lemma's domain identity),
    // so both sides share one phase: at the quarter period both behave like a root of
    // the distance to it and a one-ulp mismatch would show up as about sqrt(eps).
    const double ratio = 2 * two_p.pi();
    const double conj_pi = conj.pi();
    const auto scaled = [ratio, conj_pi](double x) { return ratio * (x / conj_pi); };
    const double scale = std::pow(2.0, 2 / p);
    std::function<Expressions(double, double)> sides;
    if (id == "maf-sin") {
      sides = [=](double x, double) {
        const SinCos sc = conj(x);
        return Expressions{two_p.sin(scaled(x)),
                           scale * sc.sin.value * nonneg_pow(sc.cos.value, p_star - 1)};
      };
    } else if (id == "maf-cos") {
      sides = [=](double x, double) {
        const SinCos sc = conj(x);
        const double sp = std::pow(sc.sin.value, p);
        const double cp = nonneg_pow(sc.cos.value, p_star);
        return Expressions{two_p.cos(scaled(x)), cp - sp, 1 - 2 * sp, 2 * cp - 1};
      };
    } else if (id == "half-sin") {
      sides = [=](double x, double) {
        return Expressions{conj.sin(x), nonneg_pow(one_minus(two_p(scaled(x)), 1) / 2, 1 / p)};
      };
    } else {
      // cos_{p*,p} x behaves like a root of its distance d to the quarter period,
      // so the right side takes d from the same reduction and uses
      // 1 + cos_{2,p}(pi_{2,p} - e) = 1 - cos_{2,p} e with e = 2^{2/p} d.
      sides = [=](double x, double) {
        const SinCos sc = conj(x);
        const double e = scale * sc.quarter_distance;
        return Expressions{sc.cos.value, nonneg_pow(one_minus(two_p(e), 1) / 2, 1 / p_star)};
      };
    }
    IdentitySpec spec = fixed(id, p_star, p, {0, conj.quarter()}, std::move(sides));
    spec.kind = ParamKind::exponent;
    spec.params = {p, p};
    spec.label = "p=" + format_number(p);
    return spec;
  }
  if (id == "duality-pi" || id == "duality-sin") {
    const Trig t{ParamPair(params.p, params.q), cfg};
    const Trig dual{t.pp.dual(), cfg};
    IdentitySpec spec;
    if (id == "duality-pi") {
      spec = fixed(id, params.p, params.q, {0, 0}, [t, dual](double, double) {
        return Expressions{t.pp.q() * t.pi(), t.pp.p_star() * dual.pi()};
      });
      spec.arity = 0;
    } else {
      const double exponent = dual.pp.p() - 1;
      const double t_quarter = t.quarter();
      const double dual_quarter = dual.quarter();
      spec = fixed(id, params.p, params.q, {0, 2}, [=](double x, double) {
        return Expressions{t.sin(t_quarter * x), nonneg_pow(dual.cos(dual_quarter * (1 - x)), exponent)};
      });
    }
    spec.kind = ParamKind::pair;
    return spec;
  }
  if (id == "lemniscate-add") {
    const Trig g{ParamPair(2, 4), cfg};
    IdentitySpec spec = fixed(id, 2, 4, {0, g.pi() / 2}, [g](double u, double v) {
      const SinCos a = g(u);
      const SinCos b = g(v);
      const double su = a.sin.value;
      const double sv = b.sin.value;
      return Expressions{g.sin(u + v),
                         (su * b.cos.value + a.cos.value * sv) / (1 + su * su * sv * sv)};
    });
    spec.arity = 2;
    return spec;
  }
  if (id == "proof-xtoy") {
    const Trig t23{ParamPair(2, 3), cfg};
    const Trig dixon{ParamPair(1.5, 3), cfg};
    const double scale = std::cbrt(4.0);
    return fixed(id, 2, 3, {0, dixon.quarter() / 2}, [=](double y, double) {
      const SinCos sc = dixon(2 * y);
      return Expressions{t23.sin(scale * 2 * y), scale * sc.sin.value * nonneg_pow(sc.cos.value, 0.5)};
    });
  }
  const Trig f{ParamPair(4.0 / 3, 2), cfg};
  const Trig g{ParamPair(2, 4), cfg};
  if (id == "proof-sin2x") {
    return fixed(id, 4.0 / 3, 2, {0, g.pi()}, [f, g](double x, double) {
      // 1 - s^4 = (1 - s)(1 + s)(1 + s^2) with 1 - s taken exactly from the inversion.
      const SinCos sc = g(g.pi() / 2 - x);
      const double s = std::abs(sc.sin.value);
      return Expressions{f.sin(2 * x), nonneg_pow(sc.one_minus_abs_sin * (1 + s) * (1 + s * s), 0.5)};
    });
  }
  if (id == "proof-f2x") {
    return fixed(id, 4.0 / 3, 2, {0, g.pi(), true, true}, [f, g](double x, double) {
      const double gx = g.sin(x);
      return Expressions{f.sin(2 * x), 2 * gx / (1 + gx * gx)};
    });
  }
  if (id == "proof-gx") {
    return fixed(id, 2, 4, {0, g.quarter()}, [g](double x, double) {
      const double h = g.sin(x / 2);
      const double h4 = std::pow(h, 4);
      return Expressions{g.sin(x), 2 * h * nonneg_pow(1 - h4, 0.5) / (1 + h4)};
    });
  }
  if (id == "proof-sum-diff") {
    IdentitySpec spec = fixed(id, 4.0 / 3, 2, {0, g.pi() / 2, true, false}, [f, g](double x, double) {
      const double gx = g.sin(x);
      const SinCos fc = f(2 * x);
      const double f2 = fc.sin.value;
      const double inv_g2 = 1 / (gx * gx);
      const double g2 = gx * gx;
      // 1/f^2 - 1 = (1 - f)(1 + f) / f^2.
      const double excess = fc.one_minus_abs_sin * (1 + f2) / (f2 * f2);
      return Expressions{inv_g2 + g2, 4 / (f2 * f2) - 2, inv_g2 - g2, 4 / f2 * nonneg_pow(excess, 0.5)};
    });
    spec.comparisons = {{0, 1}, {2, 3}};
    spec.metric = ErrorMetric::scaled;
    return spec;
  }
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

double discrepancy(const IdentitySpec& spec, const Expressions& e) {
  const auto diff = [&](int i, int j) {
    const double a = e[static_cast<std::size_t>(i)];
    const double b = e[static_cast<std::size_t>(j)];
    const double d = std::abs(a - b);
    if (spec.metric == ErrorMetric::scaled) return d / std::max({1.0, std::abs(a), std::abs(b)});
    return d;
  };
  double worst = 0.0;
  const auto consider = [&](int i, int j) {
    const double d = diff(i, j);
    if (std::isnan(d) || d > worst) worst = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
  };
  if (spec.comparisons.empty()) {
    const int n = static_cast<int>(e.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) consider(i, j);
  } else {
    for (const auto& [i, j] : spec.comparisons) consider(i, j);
  }
  return worst;
}

void check_domain(const IdentitySpec& spec, double x, std::optional<double> y) {
  const Interval& d = spec.domain;
  const auto inside = [&](double v) {
    if (!std::isfinite(v)) return false;
    if (d.lo_open ? v <= d.lo : v < d.lo) return false;
    if (d.hi_open ? v >= d.hi : v > d.hi) return false;
    return true;
  };
  if (spec.arity == 0) return;
  if (!inside(x)) throw DomainError("x = " + format_number(x) + " is outside the domain of " + spec.id);
  if (spec.arity == 2) {
    if (!y) throw DomainError(spec.id + " takes two arguments");
    if (!inside(*y) || x + *y > d.hi) {
      throw DomainError("(u, v) = (" + format_number(x) + ", " + format_number(*y) + ") is outside the domain of " +
                        spec.id);
    }
  }
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Outcome {
  double err = 0.0;
  double rel = 0.0;
  bool finite = true;
};

std::vector<Point> sample_points(const IdentitySpec& spec, std::int64_t samples, std::uint64_t seed) {
  std::vector<Point> points;
  if (spec.arity == 0) {
    points.push_back({});
    return points;
  }
  const Interval& d = spec.domain;
  const double inset = 1e-12 * d.width();
  const double lo = d.lo_open ? d.lo + inset : d.lo;
  const double hi = d.hi_open ? d.hi - inset : d.hi;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(lo, hi);

  if (spec.arity == 1) {
    points.reserve(static_cast<std::size_t>(2 * samples));
    for (std::int64_t i = 0; i < samples; ++i) {
      const double x = i + 1 == samples ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
      points.push_back({x, 0.0});
    }
    for (std::int64_t i = 0; i < samples; ++i) points.push_back({uniform(rng), 0.0});
    return points;
  }

  constexpr int kGrid = 32;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double u = lo + (hi - lo) * i / (kGrid - 1);
      const double v = lo + (hi - lo) * j / (kGrid - 1);
      if (u + v <= d.hi) points.push_back({u, v});
    }
  }
  for (std::int64_t i = 0; i < samples; ++i) {
    Point pt{uniform(rng), uniform(rng)};
    while (pt.x + pt.y > d.hi) pt = {uniform(rng), uniform(rng)};
    points.push_back(pt);
  }
  return points;
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::array<std::uint64_t, 1> out{};
  seq.generate(reinterpret_cast<std::uint32_t*>(out.data()), reinterpret_cast<std::uint32_t*>(out.data() + 1));
  return out[0];
}

std::vector<IdentitySpec> panel_cases(std::string_view id, const ParameterPanel& panel, const EvalConfig& cfg) {
  const CatalogEntry& entry = catalog_entry(id);
  std::vector<IdentitySpec> cases;
  switch (entry.kind) {
    case ParamKind::none:
      cases.push_back(make_identity(id, {}, cfg));
      break;
    case ParamKind::exponent:
      for (double p : panel.exponents) cases.push_back(make_identity(id, {p, p}, cfg));
      break;
    case ParamKind::pair:
      for (const IdentityParams& pq : panel.pairs) cases.push_back(make_identity(id, pq, cfg));
      break;
  }
  return cases;
}

}  // namespace

double dbl_2_3_rhs(double s, double c) {
  const double denom = 8 + s * s * s;
  return 4 * s * c * std::pow(3 + c, 3) / ((1 + c) * denom * denom);
}

double dbl_4_3_2_rhs(double s, double c) {
  const double denom = 2 * nonneg_pow(c, 2.0 / 3) + s * s;
  return 4 * s * nonneg_pow(c, 1.0 / 3) * (1 + nonneg_pow(c, 4.0 / 3)) / (denom * denom);
}

Sides dbl_angle_2_3(double x, const EvalConfig& cfg) { return eval_identity("dbl-2-3", x, std::nullopt, {}, cfg); }

Sides dbl_angle_43_2(double x, const EvalConfig& cfg) { return eval_identity("dbl-4:3-2", x, std::nullopt, {}, cfg); }

const std::vector<CatalogEntry>& catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const CatalogEntry& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

IdentitySpec make_identity(std::string_view id, const IdentityParams& params, const EvalConfig& cfg) {
  catalog_entry(id);
  return build(id, params, cfg);
}

Sides eval_identity(const IdentitySpec& spec, double x, std::optional<double> y) {
  check_domain(spec, x, y);
  const Expressions e = spec.sides(x, y.value_or(0.0));
  return {e.at(0), e.at(1), discrepancy(spec, e)};
}

Sides eval_identity(std::string_view id, double x, std::optional<double> y, const IdentityParams& params,
                    const EvalConfig& cfg) {
  return eval_identity(make_identity(id, params, cfg), x, y);
}

IdentityReport verify(const IdentitySpec& spec, const VerifyOptions& opts) {
  if (opts.samples < 2) throw DomainError("verification needs at least 2 samples");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Point> points = sample_points(spec, opts.samples, opts.seed);
  std::vector<Outcome> outcomes(points.size());
  std::vector<std::exception_ptr> failures(points.size());

  const auto evaluate = [&](std::size_t i) {
    try {
      Expressions e = spec.sides(points[i].x, points[i].y);
      e.at(1) += opts.rhs_offset;
      Outcome& o = outcomes[i];
      o.finite = std::all_of(e.begin(), e.end(), [](double v) { return std::isfinite(v); });
      o.err = o.finite ? discrepancy(spec, e) : std::numeric_limits<double>::infinity();
      if (o.finite && std::abs(e[0]) > 1e-3) o.rel = std::abs(e[0] - e[1]) / std::abs(e[0]);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, (points.size() + 63) / 64));
  if (threads <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < points.size(); i += threads) evaluate(i);
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  IdentityReport report;
  report.id = spec.id;
  report.params = spec.label;
  report.samples = static_cast<std::int64_t>(points.size());
  report.tol = opts.tol;
  // Deterministic worst case: lexicographic max of (err, x, y).
  std::size_t worst = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto key = [&](std::size_t k) { return std::tuple(outcomes[k].err, points[k].x, points[k].y); };
    if (key(i) > key(worst)) worst = i;
    report.max_rel_err = std::max(report.max_rel_err, outcomes[i].rel);
    if (!outcomes[i].finite && report.diagnostic.empty()) {
      report.diagnostic = "non-finite value at x=" + format_number(points[i].x) +
                          (spec.arity == 2 ? ", y=" + format_number(points[i].y) : "");
    }
  }
  report.max_abs_err = outcomes[worst].err;
  report.argmax_x = points[worst].x;
  if (spec.arity == 2) report.argmax_y = points[worst].y;
  report.pass = report.max_abs_err <= report.tol;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

IdentityReport verify(std::string_view id, const VerifyOptions& opts, const ParameterPanel& panel,
                      const EvalConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<IdentitySpec> cases = panel_cases(id, panel, cfg);
  if (cases.empty()) throw DomainError("empty parameter panel for " + std::string(id));

  IdentityReport total;
  bool first = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    VerifyOptions case_opts = opts;
    case_opts.seed = cases.size() == 1 ? opts.seed : case_seed(opts.seed, i);
    IdentityReport r = verify(cases[i], case_opts);
    const std::int64_t samples = total.samples + r.samples;
    const double rel = std::max(total.max_rel_err, r.max_rel_err);
    std::string diagnostic = total.diagnostic;
    if (!r.diagnostic.empty()) {
      diagnostic += (diagnostic.empty() ? "" : "; ") + r.params + ": " + r.diagnostic;
    }
    if (first || r.max_abs_err > total.max_abs_err) total = r;
    first = false;
    total.samples = samples;
    total.max_rel_err = rel;
    total.diagnostic = std::move(diagnostic);
  }
  total.id = std::string(id);
  total.tol = opts.tol;
  total.pass = total.max_abs_err <= total.tol && std::isfinite(total.max_abs_err);
  total.elapsed = std::chrono::steady_clock::now() - start;
  return total;
}

std::vector<IdentityReport> verify_all(const VerifyOptions& opts, const ParameterPanel& panel,
                                       const EvalConfig& cfg) {
  std::vector<IdentityReport> reports;
  for (const CatalogEntry& e : kCatalog) reports.push_back(verify(e.id, opts, panel, cfg));
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return reports;
}

}  // namespace gtrig::identities

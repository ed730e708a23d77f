#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "golden.hpp"
#include "gtrig/error.hpp"
#include "gtrig/gtfn.hpp"
#include "gtrig/identities.hpp"

using namespace gtrig;
using namespace gtrig::identities;

namespace {

const double kPi23 = pi_pq({2, 3});
const double kPi43_2 = pi_pq({4.0 / 3, 2});
const double kPi24 = pi_pq({2, 4});

void check_same(const IdentityReport& a, const IdentityReport& b) {
  CHECK(a.id == b.id);
  CHECK(a.params == b.params);
  CHECK(a.samples == b.samples);
  CHECK(a.max_abs_err == b.max_abs_err);
  CHECK(a.argmax_x == b.argmax_x);
  CHECK(a.argmax_y == b.argmax_y);
  CHECK(a.max_rel_err == b.max_rel_err);
  CHECK(a.pass == b.pass);
  CHECK(a.diagnostic == b.diagnostic);
}

}  // namespace

TEST_CASE("catalog vocabulary") {
  const std::vector<std::string> expected = {
      "pythagorean", "dbl-2-2",     "dbl-2-4",     "dbl-3:2-3",   "dbl-4:3-4",      "dbl-2-3",   "dbl-4:3-2",
      "maf-sin",     "maf-cos",     "half-sin",    "half-cos",    "duality-pi",     "duality-sin",
      "lemniscate-add", "proof-xtoy", "proof-sin2x", "proof-f2x", "proof-gx", "proof-sum-diff"};
  std::vector<std::string> ids;
  for (const CatalogEntry& e : catalog()) ids.emplace_back(e.id);
  CHECK(ids == expected);
  CHECK(catalog_entry("lemniscate-add").arity == 2);
  CHECK(catalog_entry("duality-pi").arity == 0);
  CHECK(catalog_entry("maf-cos").kind == ParamKind::exponent);
  CHECK(catalog_entry("pythagorean").kind == ParamKind::pair);
  CHECK_THROWS_AS(catalog_entry("no-such-id"), UnknownIdentity);
  CHECK_THROWS_AS(make_identity("no-such-id"), UnknownIdentity);
  CHECK_THROWS_AS(eval_identity("no-such-id", 0.0), UnknownIdentity);
}

TEST_CASE("every spec has a finite nonempty domain") {
  for (const CatalogEntry& e : catalog()) {
    const IdentitySpec spec = make_identity(e.id, {2, 3});
    CAPTURE(spec.id);
    CHECK(std::isfinite(spec.domain.lo));
    CHECK(std::isfinite(spec.domain.hi));
    if (spec.arity > 0) CHECK(spec.domain.lo < spec.domain.hi);
    CHECK(spec.arity == e.arity);
  }
}

TEST_CASE("Theorem 1.1 at its special points") {
  const Sides zero = dbl_angle_2_3(0.0);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  const Sides end = dbl_angle_2_3(kPi23 / 2);
  CHECK(std::abs(end.lhs) <= 1e-15);
  CHECK(std::abs(end.rhs) <= 1e-15);
  const Sides quarter = dbl_angle_2_3(kPi23 / 4);
  CHECK(std::abs(quarter.lhs - 1) <= 1e-15);
  CHECK(std::abs(quarter.rhs - 1) <= 1e-10);
  CHECK_THROWS_AS(dbl_angle_2_3(-1e-3), DomainError);
  CHECK_THROWS_AS(dbl_angle_2_3(kPi23 / 2 + 1e-3), DomainError);
}

TEST_CASE("Theorem 1.2 at its special points") {
  const Sides zero = dbl_angle_43_2(0.0);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  const Sides end = dbl_angle_43_2(kPi43_2 / 2);
  CHECK(std::abs(end.lhs) <= 1e-15);
  CHECK(std::abs(end.rhs) <= 1e-15);
  const Sides quarter = dbl_angle_43_2(kPi43_2 / 4);
  CHECK(std::abs(quarter.lhs - 1) <= 1e-15);
  CHECK(std::abs(quarter.rhs - 1) <= 1e-10);
  CHECK_THROWS_AS(dbl_angle_43_2(-1e-3), DomainError);
  CHECK_THROWS_AS(dbl_angle_43_2(kPi43_2 / 2 + 1e-3), DomainError);
}

TEST_CASE("right-hand sides at closed-form arguments") {
  CHECK(dbl_2_3_rhs(0, 1) == 0);
  CHECK(dbl_2_3_rhs(1, 0) == 0);
  CHECK(dbl_4_3_2_rhs(0, 1) == 0);
  CHECK(dbl_4_3_2_rhs(1, 0) == 0);
}

TEST_CASE("eval_identity examples") {
  const Sides pyth = eval_identity("pythagorean", 2.7, std::nullopt, {5, 3});
  CHECK(std::abs(pyth.lhs - 1) <= 1e-10);
  CHECK(pyth.rhs == 1);

  const Sides dual = eval_identity("duality-pi", 0.0, std::nullopt, {2, 4});
  CHECK(std::abs(dual.lhs - 4 * golden::kPi24) <= 1e-10);
  CHECK(std::abs(dual.rhs - 2 * kPi43_2) <= 1e-15);
  CHECK(std::abs(dual.lhs - dual.rhs) <= 1e-10);

  const Sides maf = eval_identity("maf-sin", 0.0, std::nullopt, {3, 3});
  CHECK(maf.lhs == 0);
  CHECK(maf.rhs == 0);

  const Sides add = eval_identity("lemniscate-add", kPi24 / 4, kPi24 / 4);
  CHECK(std::abs(add.lhs - 1) <= 1e-15);
  CHECK(std::abs(add.rhs - 1) <= 1e-12);
}

TEST_CASE("eval_identity rejects points outside the domain") {
  CHECK_THROWS_AS(eval_identity("dbl-3:2-3", pi_pq({1.5, 3}) / 4 + 1e-6), DomainError);
  CHECK_THROWS_AS(eval_identity("proof-f2x", 0.0), DomainError);
  CHECK_THROWS_AS(eval_identity("proof-f2x", kPi24), DomainError);
  CHECK_THROWS_AS(eval_identity("lemniscate-add", 0.1), DomainError);
  CHECK_THROWS_AS(eval_identity("lemniscate-add", kPi24 / 3, kPi24 / 3), DomainError);
  CHECK_THROWS_AS(eval_identity("duality-sin", 2.5, std::nullopt, {2, 3}), DomainError);
  CHECK_THROWS_AS(eval_identity("dbl-2-2", std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(eval_identity("maf-sin", 0.1, std::nullopt, {1, 1}), DomainError);
}

TEST_CASE("verify examples") {
  const IdentityReport t11 = verify("dbl-2-3", {.samples = 1000, .tol = 1e-9, .seed = 42});
  CHECK(t11.pass);
  CHECK(t11.samples == 2000);
  CHECK(t11.max_abs_err <= 1e-9);
  CHECK(t11.tol == 1e-9);
  CHECK(t11.params == "p=2,q=3");

  const IdentityReport classical = verify("dbl-2-2", {.samples = 100, .tol = 1e-12, .seed = 1});
  CHECK(classical.pass);

  const IdentitySpec pyth = make_identity("pythagorean", {2, 3});
  const IdentityReport corrupted = verify(pyth, {.samples = 100, .tol = 1e-9, .seed = 1, .rhs_offset = 1e-6});
  CHECK_FALSE(corrupted.pass);
  CHECK(std::abs(corrupted.max_abs_err - 1e-6) <= 1e-12);
}

TEST_CASE("verify argument checks") {
  CHECK_THROWS_AS(verify("dbl-2-2", {.samples = 1}), DomainError);
  CHECK_THROWS_AS(verify("no-such-id", {.samples = 10}), UnknownIdentity);
  ParameterPanel empty;
  empty.exponents.clear();
  CHECK_THROWS_AS(verify("maf-sin", {.samples = 10}, empty), DomainError);
}

TEST_CASE("a NaN on the interior fails the report without throwing") {
  IdentitySpec spec;
  spec.id = "nan-probe";
  spec.domain = {0, 1};
  spec.sides = [](double x, double) {
    return std::vector<double>{x, x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x};
  };
  const IdentityReport r = verify(spec, {.samples = 11, .tol = 1e-9});
  CHECK_FALSE(r.pass);
  CHECK(std::isinf(r.max_abs_err));
  CHECK(r.diagnostic.find("non-finite") != std::string::npos);
  CHECK(r.argmax_x > 0.5);
}

TEST_CASE("open domain ends are sampled at an inset") {
  IdentitySpec spec;
  spec.id = "probe";
  spec.domain = {0, 2, true, true};
  double lowest = 10;
  double highest = -10;
  spec.sides = [&](double x, double) {
    lowest = std::min(lowest, x);
    highest = std::max(highest, x);
    return std::vector<double>{0.0, 0.0};
  };
  verify(spec, {.samples = 5, .threads = 1});
  CHECK(lowest == 2e-12);
  CHECK(highest == 2 - 2e-12);
}

TEST_CASE("reports are deterministic and independent of thread count") {
  for (const std::string id : {"dbl-4:3-2", "lemniscate-add", "half-cos"}) {
    CAPTURE(id);
    const IdentityReport a = verify(id, {.samples = 200, .seed = 5, .threads = 1});
    const IdentityReport b = verify(id, {.samples = 200, .seed = 5, .threads = 1});
    const IdentityReport c = verify(id, {.samples = 200, .seed = 5, .threads = 4});
    check_same(a, b);
    check_same(a, c);
    const IdentityReport d = verify(id, {.samples = 200, .seed = 6, .threads = 1});
    CHECK(d.pass);
  }
}

TEST_CASE("lemniscate-add samples stay inside the triangle") {
  const IdentityReport r = verify("lemniscate-add", {.samples = 300, .seed = 3});
  CHECK(r.pass);
  CHECK(r.argmax_y.has_value());
  CHECK(r.argmax_x + *r.argmax_y <= kPi24 / 2);
  CHECK(r.samples > 300);
  CHECK(r.samples <= 300 + 32 * 32);
}

TEST_CASE("every catalog identity passes at 1000 samples") {
  for (const IdentityReport& r : verify_all({.samples = 1000, .tol = 1e-9, .seed = 99})) {
    CAPTURE(r.id);
    CAPTURE(r.params);
    CAPTURE(r.max_abs_err);
    CHECK(r.pass);
    CHECK(r.diagnostic.empty());
  }
}

TEST_CASE("maf-cos expressions agree pairwise") {
  for (double p : ParameterPanel{}.exponents) {
    const IdentitySpec spec = make_identity("maf-cos", {p, p});
    CHECK(spec.comparisons.empty());
    for (int i = 0; i <= 50; ++i) {
      const std::vector<double> e = spec.sides(spec.domain.hi * i / 50, 0.0);
      REQUIRE(e.size() == 4);
      for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) CHECK(std::abs(e[a] - e[b]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("the proof of Theorem 1.1 composes") {
  const ParamPair t23(2, 3);
  const ParamPair dixon(1.5, 3);
  const double scale = std::cbrt(4.0);
  for (int i = 0; i < 100; ++i) {
    const double x = kPi23 / 2 * (i + 0.5) / 100;
    const double y = x / scale;
    CAPTURE(x);
    const SinCos at_x = sincos_pq(t23, x);
    const double C = at_x.cos.value;

    // half-sin / half-cos with p = 3 give the Dixon functions at y from C alone.
    const double sy = std::cbrt((1 - C) / 2);
    const double cy = std::pow((1 + C) / 2, 2.0 / 3);
    CHECK(std::abs(sy - sin_pq(dixon, y).value) <= 1e-12);
    CHECK(std::abs(cy - cos_pq(dixon, y).value) <= 1e-12);

    // Dixon's double-angle formula, then its closed form in C.
    const double s2y = sy * (1 + std::pow(cy, 1.5)) / (std::sqrt(cy) * (1 + sy * sy * sy));
    CHECK(std::abs(s2y - std::cbrt(1 - C) * (3 + C) / (std::cbrt(1 + C) * (3 - C))) <= 1e-12);
    CHECK(std::abs(s2y - sin_pq(dixon, 2 * y).value) <= 1e-12);
    const double c2y_half = std::cbrt(1 - s2y * s2y * s2y);
    CHECK(std::abs(c2y_half - std::cbrt(16.0) * C / (std::cbrt(1 + C) * (3 - C))) <= 1e-8);

    // Eq. (xtoy), then the statement of the theorem.
    const double composed = scale * s2y * c2y_half;
    CHECK(std::abs(composed - eval_identity("proof-xtoy", y).rhs) <= 1e-10);
    CHECK(std::abs(composed - dbl_2_3_rhs(at_x.sin.value, C)) <= 1e-8);
    CHECK(std::abs(composed - sin_pq(t23, 2 * x).value) <= 1e-8);
    CHECK(std::abs(1 - C * C - std::pow(at_x.sin.value, 3)) <= 1e-14);
  }
}

TEST_CASE("the proof of Theorem 1.2 composes") {
  const ParamPair f_pair(4.0 / 3, 2);
  const ParamPair g_pair(2, 4);
  const auto f = [&](double x) { return sin_pq(f_pair, x).value; };
  const auto g = [&](double x) { return sin_pq(g_pair, x).value; };
  for (int i = 0; i < 100; ++i) {
    // Theorem 1.2 domain is [0, pi_{2,4}]; the interior is what the proof treats.
    const double x = kPi24 * (i + 0.5) / 100;
    CAPTURE(x);
    const Sides sin2x = eval_identity("proof-sin2x", x);
    CHECK(std::abs(sin2x.lhs - sin2x.rhs) <= 1e-8);
    const Sides f2x = eval_identity("proof-f2x", x);
    CHECK(std::abs(f2x.lhs - f2x.rhs) <= 1e-8);
    if (x <= kPi24 / 2) CHECK(eval_identity("proof-gx", x).spread <= 1e-8);
    CHECK(eval_identity("proof-sum-diff", x / 2).spread <= 1e-8);

    // Substitute Eq. (g(x)) into Eq. (f(2x)) using g(x/2) only.
    const double h = g(x / 2);
    const double gx = 2 * h * std::sqrt(1 - std::pow(h, 4)) / (1 + std::pow(h, 4));
    CHECK(std::abs(gx - g(x)) <= 1e-12);
    const double a = 1 / (h * h) + h * h;
    const double b = 1 / (h * h) - h * h;
    const double via_g = 4 * a * std::sqrt(b) / (a * a + 4 * b);
    CHECK(std::abs(via_g - f(2 * x)) <= 1e-8);

    // Eqs. (+) and (-) at x/2 turn the expression into one in f(x).
    const double fx = f(x);
    const double a_f = 4 / (fx * fx) - 2;
    const double b_f = 4 / fx * std::sqrt(1 / (fx * fx) - 1);
    CHECK(std::abs(a - a_f) / std::max(1.0, a) <= 1e-8);
    CHECK(std::abs(b - b_f) / std::max(1.0, b) <= 1e-8);
    const double closed = 4 * fx * std::pow(1 - fx * fx, 0.25) * (2 - fx * fx) /
                          std::pow(fx * fx + 2 * std::sqrt(1 - fx * fx), 2);
    CHECK(std::abs(closed - via_g) <= 1e-8);
    CHECK(std::abs(closed - dbl_4_3_2_rhs(fx, cos_pq(f_pair, x).value)) <= 1e-8);
  }
}

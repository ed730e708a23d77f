#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "golden.hpp"
#include "gtrig/gtfn.hpp"
#include "gtrig/identities.hpp"
#include "gtrig/numerics.hpp"
#include "oracle.hpp"

using namespace gtrig;
using oracle::Real;

namespace {

double rel(double a, const Real& b) { return static_cast<double>(abs((Real(a) - b) / b)); }

// First-quarter sin and cos of the pair at x, both from the 50-digit oracle.
std::pair<Real, Real> oracle_sincos(const Real& p, const Real& q, const Real& x) {
  const Real s = oracle::sin_first_quarter(p, q, x);
  return {s, pow(1 - pow(s, q), 1 / p)};
}

}  // namespace

TEST_CASE("golden constants match the 50-digit oracle") {
  CHECK(rel(golden::kPi24, oracle::pi_closed_form(2, 4)) <= 1e-16);
  CHECK(rel(golden::kPi23, oracle::pi_closed_form(2, 3)) <= 1e-16);
  CHECK(rel(golden::kLogGammaThird, boost::math::lgamma(Real(1) / 3)) <= 1e-16);

  Real a = 1;
  Real b = sqrt(Real(2));
  for (int i = 0; i < 10; ++i) {
    const Real m = (a + b) / 2;
    b = sqrt(a * b);
    a = m;
  }
  CHECK(rel(golden::kAgm1Sqrt2, a) <= 1e-16);
  CHECK(rel(golden::kPi24, boost::math::constants::pi<Real>() / a) <= 1e-16);
}

TEST_CASE("a golden sine value is reproduced by the oracle") {
  const golden::SinSample& g = golden::kSin[0];
  const Real value = oracle::sin_first_quarter(g.p, g.q, g.x);
  CHECK(rel(g.value, value) <= 1e-16);
  CHECK(rel(sin_pq({g.p, g.q}, g.x).value, value) <= 1e-14);
}

TEST_CASE("pi_pq agrees with the 50-digit Beta form") {
  for (const auto& [p, q] : {std::pair{2.0, 2.0}, {2.0, 3.0}, {3.0, 2.0}, {4.0 / 3, 2.0}, {1.1, 7.5}, {9.0, 1.2}}) {
    CAPTURE(p);
    CAPTURE(q);
    CHECK(rel(pi_pq({p, q}), oracle::pi_closed_form(p, q)) <= 1e-14);
  }
}

TEST_CASE("double-angle right-hand sides equal 1 at the oracle quarter point") {
  {
    const Real x = oracle::pi_closed_form(2, 3) / 4;
    const auto [s, c] = oracle_sincos(2, 3, x);
    CHECK(std::abs(identities::dbl_2_3_rhs(static_cast<double>(s), static_cast<double>(c)) - 1) <= 1e-10);
  }
  {
    const Real p = Real(4) / 3;
    const Real x = oracle::pi_closed_form(p, 2) / 4;
    const auto [s, c] = oracle_sincos(p, 2, x);
    CHECK(std::abs(identities::dbl_4_3_2_rhs(static_cast<double>(s), static_cast<double>(c)) - 1) <= 1e-10);
  }
}

TEST_CASE("library beta agrees with the 50-digit Beta function") {
  for (const auto& [a, b] : {std::pair{0.5, 0.5}, {1.0 / 3, 0.5}, {0.25, 0.75}, {0.1, 0.9}, {0.9, 0.1}}) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel(numerics::beta(a, b), boost::math::beta(Real(a), Real(b))) <= 1e-13);
  }
}

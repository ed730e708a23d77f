#pragma once

// Catalog of generalized-trigonometric identities as evaluable expression
// lists, and a verification engine that sweeps each identity's domain.
//
// Parameter relationships covered by the double-angle entries:
//
//   p | (p*, 2)          | (2, p)           | (p*, p)
//   2 | (2, 2)  dbl-2-2  | (2, 2)  dbl-2-2  | (2, 2)   dbl-2-2
//   3 | (3/2, 2) none    | (2, 3)  dbl-2-3  | (3/2, 3) dbl-3:2-3
//   4 | (4/3, 2) dbl-4:3-2 | (2, 4) dbl-2-4 | (4/3, 4) dbl-4:3-4
//
// maf-* links (2, p) with (p*, p); duality-* links (p, q) with (q*, p*).

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtrig/gtfn.hpp"

namespace gtrig::identities {

// What an identity is parameterized by.
enum class ParamKind {
  none,      // fixed exponents
  exponent,  // a single p > 1 (pairs (2, p) and (p*, p))
  pair,      // an arbitrary (p, q)
};

struct IdentityParams {
  double p = 2.0;
  double q = 2.0;
};

// Closed interval [lo, hi]; an open end is sampled at an inset of 1e-12 of the width.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  double width() const { return hi - lo; }
};

enum class ErrorMetric {
  absolute,
  // |a - b| / max(1, |a|, |b|), for identities whose sides grow without bound.
  scaled,
};

// An identity with its parameters bound. `sides` returns at least two
// expressions (lhs, rhs, further equal forms); the identity holds when all of
// them agree.
struct IdentitySpec {
  std::string id;
  ParamKind kind = ParamKind::none;
  IdentityParams params;
  // Arity 0: no argument; arity 1: x; arity 2: (u, v) with u, v, u + v in domain.
  int arity = 1;
  Interval domain;
  ErrorMetric metric = ErrorMetric::absolute;
  std::function<std::vector<double>(double x, double y)> sides;
  // Index pairs of `sides` that must agree; empty means every pair.
  std::vector<std::pair<int, int>> comparisons;
  // Human-readable parameters, e.g. "p=2,q=3".
  std::string label;
};

struct CatalogEntry {
  std::string_view id;
  ParamKind kind;
  int arity;
  std::string_view summary;
};

// Stable public vocabulary, in catalog order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view id);  // throws UnknownIdentity

IdentitySpec make_identity(std::string_view id, const IdentityParams& params = {}, const EvalConfig& cfg = {});

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  // Largest pairwise disagreement among all expressions of the identity.
  double spread = 0.0;
};

// Evaluates an identity at x (and y for two-argument identities).
// Throws UnknownIdentity or DomainError.
Sides eval_identity(std::string_view id, double x, std::optional<double> y = std::nullopt,
                    const IdentityParams& params = {}, const EvalConfig& cfg = {});
Sides eval_identity(const IdentitySpec& spec, double x, std::optional<double> y = std::nullopt);

// Double-angle formula for (p, q) = (2, 3): sin(2x) = 4sc(3 + c)^3 / ((1 + c)(8 + s^3)^2) on [0, pi_{2,3}/2].
double dbl_2_3_rhs(double s, double c);
Sides dbl_angle_2_3(double x, const EvalConfig& cfg = {});

// Double-angle formula for (p, q) = (4/3, 2): sin(2x) = 4s c^(1/3)(1 + c^(4/3)) / (2c^(2/3) + s^2)^2 on [0, pi_{4/3,2}/2].
double dbl_4_3_2_rhs(double s, double c);
Sides dbl_angle_43_2(double x, const EvalConfig& cfg = {});

struct IdentityReport {
  std::string id;
  std::string params;  // parameters at the worst sample, e.g. "p=2,q=3"
  std::int64_t samples = 0;
  double max_abs_err = 0.0;
  double argmax_x = 0.0;
  std::optional<double> argmax_y;
  // Informational: max |lhs - rhs| / |lhs| over samples with |lhs| > 1e-3.
  double max_rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::chrono::duration<double> elapsed{};
  std::string diagnostic;
};

struct VerifyOptions {
  std::int64_t samples = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  // Added to the rhs before comparison; used to check that the engine detects errors.
  double rhs_offset = 0.0;
  // 0 = hardware concurrency.
  unsigned threads = 0;
};

struct ParameterPanel {
  std::vector<double> exponents{1.5, 2.0, 3.0, 4.0, 7.5};
  std::vector<IdentityParams> pairs{{2, 3}, {3, 2}, {4.0 / 3, 2}, {2, 4}, {1.5, 3}, {4.0 / 3, 4}, {5, 5}};
};

// Verifies one bound identity: `samples` grid points plus `samples` random
// points (a 32x32 grid plus `samples` random pairs for two-argument ones).
IdentityReport verify(const IdentitySpec& spec, const VerifyOptions& opts);

// Verifies an identity by id, sweeping the parameter panel for parameterized
// entries; the report describes the worst case over the panel.
IdentityReport verify(std::string_view id, const VerifyOptions& opts, const ParameterPanel& panel = {},
                      const EvalConfig& cfg = {});

// Verifies every catalog entry; reports are ordered by id.
std::vector<IdentityReport> verify_all(const VerifyOptions& opts, const ParameterPanel& panel = {},
                                       const EvalConfig& cfg = {});

}  // namespace gtrig::identities

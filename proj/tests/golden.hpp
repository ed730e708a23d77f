#pragma once

// Reference values frozen from the extended-precision oracle in oracle.hpp
// (50-digit tanh-sinh + bisection, 50-digit Beta closed form).
// oracle_test.cpp recomputes a subset to keep this table honest.

namespace golden {

inline constexpr double kPi24 = 2.62205755429211981046484;        // lemniscate constant
inline constexpr double kAgm1Sqrt2 = 1.198140234735592207439922;  // agm(1, sqrt 2)
inline constexpr double kPi23 = 2.804364210650908522350038;
inline constexpr double kLogGammaThird = 0.985420646927767069187174;

struct SinSample {
  double p, q, x, value;
};

// sin_{p,q}(x) on the first quarter period; p, q, x are the doubles nearest
// the written literals.
inline constexpr SinSample kSin[] = {
    {2, 3, 1.0, 0.8834010473417957934009353},
    {3, 2, 0.5, 0.4858657257197030089391793},
    {4.0 / 3, 2, 1.0, 0.7970019242194808461729266},
    {1.5, 3, 0.7, 0.6624453303254344254756677},
    {2, 4, 1.0, 0.9076832214049461679287393},
    {2, 3, 0.25, 0.2495122631750472248848567},
};

}  // namespace golden

#include "contspec/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace contspec {

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
  if (x < 0.0) {
    // erfcx(x) = 2 e^{x^2} - erfcx(-x); both terms positive, no cancellation.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x < 26.0) {
    // exp(x^2) stays below overflow and erfc(x) above underflow here.
    return std::exp(x * x) * std::erfc(x);
  }
  // Asymptotic tail: erfcx(x) ~ 1/(x sqrt(pi)) * sum_k (-1)^k (2k-1)!!/(2x^2)^k.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * inv2x2;
    sum += term;
  }
  constexpr double kInvSqrtPi = 0.5641895835477562869;
  return kInvSqrtPi * sum / x;
}

double gauss_m0(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("gauss_m0: requires finite a > 0");
  // M0(a,b) = (1/2) sqrt(pi/a) erfcx(-b/(2 sqrt(a))) since the erfcx
  // prefactor e^{x^2} equals e^{b^2/(4a)} exactly.
  const double sa = std::sqrt(a);
  constexpr double kSqrtPi = 1.7724538509055160273;
  return 0.5 * (kSqrtPi / sa) * erfcx(-b / (2.0 * sa));
}

double gauss_m1(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("gauss_m1: requires finite a > 0");
  return 1.0 / (2.0 * a) + (b / (2.0 * a)) * gauss_m0(a, b);
}

}  // namespace contspec

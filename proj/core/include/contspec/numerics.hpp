#pragma once

namespace contspec {

/// Gaussian error function, erf(x) = 2/sqrt(pi) * int_0^x e^{-t^2} dt.
double erf(double x);

/// Complementary error function, erfc(x) = 1 - erf(x), computed on a
/// path that stays accurate for large positive x.
double erfc(double x);

/// Scaled complement, erfcx(x) = e^{x^2} erfc(x). Finite for all x where
/// the result is representable; avoids the underflow of erfc itself when
/// a downstream formula divides by it.
double erfcx(double x);

/// Half-line Gaussian moment M0(a,b) = int_0^inf e^{-a E^2 + b E} dE
///   = (1/2) sqrt(pi/a) e^{b^2/(4a)} erfc(-b/(2 sqrt(a))), a > 0.
/// Throws std::invalid_argument for a <= 0.
double gauss_m0(double a, double b);

/// First moment M1(a,b) = int_0^inf E e^{-a E^2 + b E} dE
///   = 1/(2a) + (b/(2a)) M0(a,b), a > 0.
double gauss_m1(double a, double b);

}  // namespace contspec

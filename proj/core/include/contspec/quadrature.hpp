#pragma once

#include <complex>
#include <functional>

#include "contspec/errors.hpp"

namespace contspec {

/// Variable transform applied before adaptive subdivision.
enum class QuadTransform {
  none,               ///< integrate in the original variable
  log_substitution,   ///< u = ln E; turns log-normal integrands into Gaussians
  gaussian_centering  ///< locate the peak of |f| and grow windows around it
};

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
  QuadTransform transform = QuadTransform::none;

  /// Throws std::invalid_argument unless rel_tol > 0, abs_tol > 0 and
  /// max_subdivisions >= 1.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error bound
};

struct QuadResultC {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
};

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over (0, inf).
/// The transform in `spec` decides how the half line is explored:
/// gaussian_centering centers dyadic windows on the peak of |f| (the
/// integrand must have a single decaying envelope), log_substitution
/// integrates f(e^u) e^u over the real line, none sweeps dyadic shells
/// from the origin. Throws NonConvergence when the subdivision budget is
/// exhausted with the estimate above max(abs_tol, rel_tol * |value|).
QuadResult integrate_half_line(const RealIntegrand& f,
                               const QuadratureSpec& spec = {});
QuadResultC integrate_half_line_c(const ComplexIntegrand& f,
                                  const QuadratureSpec& spec = {});

/// Same contract on (-inf, inf). log_substitution is rejected here.
QuadResult integrate_real_line(const RealIntegrand& f,
                               const QuadratureSpec& spec = {});
QuadResultC integrate_real_line_c(const ComplexIntegrand& f,
                                  const QuadratureSpec& spec = {});

/// Adaptive integration over a finite interval [a, b]; the building block
/// the half-line and real-line drivers use, exposed for integrands with
/// known compact support.
QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              const QuadratureSpec& spec = {});
QuadResultC integrate_interval_c(const ComplexIntegrand& f, double a, double b,
                                 const QuadratureSpec& spec = {});

}  // namespace contspec

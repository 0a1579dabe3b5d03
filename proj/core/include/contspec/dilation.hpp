#pragma once

#include <complex>
#include <vector>

#include "contspec/kernel_state.hpp"
#include "contspec/ladder.hpp"
#include "contspec/quadrature.hpp"

namespace contspec::dilation {

/// Two published sign conventions for the lowering weight C(E, lambda).
/// `paper` is the displayed form e^{beta(ln E ln l - ln^2 l / 2)};
/// `kernel_consistent` is e^{-beta(ln E ln l + ln^2 l / 2)}, the unique
/// weight satisfying the lowering-class identity exactly with the kernel
/// below and vanishing at E -> 0.
enum class WeightConvention { paper, kernel_consistent };

/// Sign conventions for the measure density rho(s). `paper` is the
/// displayed (1/(s beta)) e^{-(4 ln s + 1)/(4 beta)}; `moment_solution`
/// carries + in the exponent, as solving the log-variable moment problem
/// requires.
enum class MeasureConvention { paper, moment_solution };

struct Params {
  double beta = 1.0;    ///< Gaussian shape in ln E, > 0
  double s = 1.0;       ///< radial label, > 0 for normalized states
  double gamma = 0.0;   ///< phase label
  double lambda = 0.5;  ///< lowering ratio, in (0, 1)
  double omega = 1.0;   ///< energy scale, > 0

  void validate() const;
};

double coefficient(double energy, const Params& p, WeightConvention conv);

LadderOp annihilator(const Params& p, WeightConvention conv);

/// N^2 = sqrt(beta/pi) e^{-(2 ln s + 1)^2 / (4 beta)} (closed form; the
/// defining integral inverts to the same value).
double normalization_sq(double s, double beta);
double normalization(double s, double beta);

std::complex<double> kernel_value(double energy, const Params& p);

/// Normalized kernel N(s) s^{ln E} e^{-beta ln^2 E / 2} e^{-i gamma E};
/// independent of lambda.
EnergyKernel kernel(const Params& p);

double measure_rho(double s, double beta, MeasureConvention conv);

/// Relative residual of int ds h(s) s^{2 ln E} = e^{beta ln^2 E} with
/// h = rho N^2, evaluated under the requested measure convention.
double moment_residual(double log_energy, double beta, MeasureConvention conv,
                       const QuadratureSpec& spec = {});

/// Closed-form action variable J(s) = e^{(ln s + 3/4)/beta}.
double action_variable(double s, double beta);

/// Mean energy omega N^2 int s^{2 ln E} e^{-beta ln^2 E} E dE by
/// quadrature; the oracle route for the closed form above.
double mean_energy_quadrature(double s, double beta, double omega = 1.0,
                              const QuadratureSpec& spec = {});

/// Closed-form inverse s(J) = e^{beta ln J - 3/4}; exact round trip.
double invert_action(double action, double beta);

/// Kernel labeled by the action, |J, gamma> = |s(J), gamma>.
EnergyKernel kernel_from_action(double action, const Params& p);

/// Relative residual of the continuum-limit product
/// prod_k C~(-k ln l) = e^{beta ln^2 E / 2} with ln l = -ln(E)/n, in log
/// space, under the requested weight convention.
double product_limit_residual(double log_energy_target, double beta, int n,
                              WeightConvention conv);

/// Sup over the energy grid of |(1/l) C(E/l) K(E/l; s, gamma)
///  - (1/l) s^{ln(1/l)} K(E; s, gamma/l)| / sup |K|, the lowering-class
/// identity residual under the requested weight convention.
double class_identity_residual(const Params& p, WeightConvention conv,
                               const std::vector<double>& energies);

}  // namespace contspec::dilation

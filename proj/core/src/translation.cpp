#include "contspec/translation.hpp"

#include <cmath>
#include <stdexcept>

#include "contspec/errors.hpp"
#include "contspec/numerics.hpp"

namespace contspec::translation {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kSqrtPi = 1.7724538509055160273;

// T(u) = e^{-u^2/a} / (sqrt(a pi) erfc(-u/sqrt(a))), the erfcx form of the
// mean-energy tail; finite for every u.
double tail_term(double u, double alpha) {
  return 1.0 / (std::sqrt(alpha * kPi) * erfcx(-u / std::sqrt(alpha)));
}

}  // namespace

void Params::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("translation: alpha must be > 0");
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("translation: s must be >= 0");
  if (!std::isfinite(gamma)) throw std::invalid_argument("translation: gamma must be finite");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("translation: epsilon must be > 0");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("translation: omega must be > 0");
}

double coefficient(double energy, const Params& p) {
  if (!(energy >= 0.0)) throw std::invalid_argument("coefficient: energy must be >= 0");
  if (energy > 0.0 && energy < p.epsilon) return 0.0;
  return std::exp(p.alpha * (energy * p.epsilon - 0.5 * p.epsilon * p.epsilon));
}

LadderOp annihilator(const Params& p) {
  p.validate();
  Params q = p;
  return LadderOp::translation(p.epsilon, [q](double e) -> std::complex<double> {
    return {coefficient(e, q), 0.0};
  });
}

double normalization_sq(double s, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("normalization: alpha must be > 0");
  if (!(s >= 0.0)) throw std::invalid_argument("normalization: s must be >= 0");
  if (s == 0.0)
    throw OutOfDomain("normalization diverges at s = 0 (degenerate state)");
  return 1.0 / gauss_m0(alpha, 2.0 * std::log(s));
}

double normalization(double s, double alpha) { return std::sqrt(normalization_sq(s, alpha)); }

double normalization_sq_abs_form(double s, double alpha) {
  if (!(s > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("normalization_sq_abs_form: need s > 0, alpha > 0");
  const double u = std::log(s);
  return 2.0 * std::sqrt(alpha / kPi) * std::exp(-u * u / alpha) /
         erfc(std::fabs(u) / std::sqrt(alpha));
}

std::complex<double> kernel_value(double energy, const Params& p) {
  const double n = normalization(p.s, p.alpha);
  const double amp = energy * std::log(p.s) - 0.5 * p.alpha * energy * energy;
  return n * std::exp(std::complex<double>(amp, -p.gamma * energy));
}

EnergyKernel kernel(const Params& p) {
  p.validate();
  const double n = normalization(p.s, p.alpha);
  const double logs = std::log(p.s);
  const double alpha = p.alpha;
  const double gamma = p.gamma;
  // |K| peaks at max(0, ln s / alpha) with width 1/sqrt(alpha).
  const double peak = std::max(0.0, logs / alpha);
  SupportHint hint{0.0, peak + 14.0 / std::sqrt(alpha)};
  return EnergyKernel(
      [n, logs, alpha, gamma](double e) {
        return n * std::exp(std::complex<double>(e * logs - 0.5 * alpha * e * e,
                                                 -gamma * e));
      },
      hint, "translation");
}

double measure_sigma(double s, double alpha) {
  if (!(s > 0.0)) throw std::invalid_argument("measure_sigma: s must be > 0");
  const double u = std::log(s);
  const double htilde = std::exp(-u * u / alpha) / std::sqrt(alpha * kPi);
  return htilde / (s * normalization_sq(s, alpha));
}

double moment_residual(double energy, double alpha, const QuadratureSpec& spec) {
  if (!(energy >= 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("moment_residual: need energy >= 0, alpha > 0");
  const double target = std::exp(alpha * energy * energy);
  auto f = [energy, alpha](double u) {
    return std::exp(-u * u / alpha + 2.0 * energy * u) / std::sqrt(alpha * kPi);
  };
  const double got = integrate_real_line(f, spec).value;
  return std::fabs(got - target) / target;
}

double mean_energy(double s, double alpha, double omega) {
  if (!(s > 0.0) || !(alpha > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("mean_energy: need s > 0, alpha > 0, omega > 0");
  const double u = std::log(s);
  // M1/M0 = ln(s)/alpha + N^2/(2 alpha) written through erfcx.
  return omega * (u / alpha + tail_term(u, alpha));
}

double mean_energy_abs_form(double s, double alpha, double omega) {
  if (!(s > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("mean_energy_abs_form: need s > 0, alpha > 0");
  const double u = std::log(s);
  const double ec = erfc(std::fabs(u) / std::sqrt(alpha));
  return omega * (kSqrtPi * ec * u + std::sqrt(alpha) * std::exp(-u * u / alpha)) /
         (kSqrtPi * std::pow(alpha, 1.5) * ec);
}

double mean_energy_quadrature(double s, double alpha, double omega,
                              const QuadratureSpec& spec) {
  const double n2 = normalization_sq(s, alpha);
  const double logs = std::log(s);
  auto f = [logs, alpha](double e) {
    return e * std::exp(2.0 * logs * e - alpha * e * e);
  };
  QuadratureSpec sp = spec;
  sp.transform = QuadTransform::gaussian_centering;
  return omega * n2 * integrate_half_line(f, sp).value;
}

double mean_energy_derivative(double s, double alpha, double omega) {
  if (!(s > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("mean_energy_derivative: need s > 0, alpha > 0");
  const double u = std::log(s);
  const double t = tail_term(u, alpha);
  return omega / (alpha * s) * (1.0 - 2.0 * u * t - 2.0 * alpha * t * t);
}

double mean_energy_derivative_display_form(double s, double alpha, double omega) {
  if (!(s > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("mean_energy_derivative_display_form: need s > 0, alpha > 0");
  const double u = std::log(s);
  const double ec = erfc(std::fabs(u) / std::sqrt(alpha));
  const double e1 = std::exp(-u * u / alpha);
  const double e2 = std::exp(-2.0 * u * u / alpha);
  return omega / (alpha * s) *
         (-2.0 * e1 * u / (std::sqrt(alpha * kPi) * ec) + 2.0 * e2 / (kPi * ec * ec) + 1.0);
}

double action_variable(double s, double alpha) { return mean_energy(s, alpha, 1.0); }

void certify_monotone(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("certify_monotone: alpha must be > 0");
  const int n = 200;
  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  for (int i = 0; i < n; ++i) {
    const double s = std::exp(lo + (hi - lo) * i / (n - 1));
    if (!(mean_energy_derivative(s, alpha) > 0.0))
      throw NotMonotone("action map derivative changes sign on the certificate grid");
  }
}

double invert_action(double action, double alpha) {
  if (!(action > 0.0)) throw OutOfRange("invert_action: J must be > 0");
  certify_monotone(alpha);
  // J is strictly increasing with range (0, inf); bracket in ln s.
  double ulo = -1.0, uhi = 1.0;
  while (action_variable(std::exp(ulo), alpha) > action && ulo > -700.0) ulo *= 2.0;
  while (action_variable(std::exp(uhi), alpha) < action && uhi < 700.0) uhi *= 2.0;
  if (!(action_variable(std::exp(ulo), alpha) <= action &&
        action_variable(std::exp(uhi), alpha) >= action))
    throw OutOfRange("invert_action: J outside the reachable range");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (ulo + uhi);
    const double jm = action_variable(std::exp(mid), alpha);
    if (jm < action)
      ulo = mid;
    else
      uhi = mid;
    if (uhi - ulo < 1e-15 * (1.0 + std::fabs(ulo))) break;
  }
  return std::exp(0.5 * (ulo + uhi));
}

double product_limit_residual(double energy_target, double alpha, int n) {
  if (!(energy_target >= 0.0) || !(alpha > 0.0) || n < 1)
    throw std::invalid_argument("product_limit_residual: bad arguments");
  if (energy_target == 0.0) return 0.0;  // empty product, value 1 = e^0
  const double eps = energy_target / n;
  // Kahan-summed log product of C(k eps, eps).
  double sum = 0.0, comp = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double term = alpha * (k * eps * eps - 0.5 * eps * eps);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double target_log = 0.5 * alpha * energy_target * energy_target;
  return std::fabs(std::expm1(sum - target_log));
}

}  // namespace contspec::translation

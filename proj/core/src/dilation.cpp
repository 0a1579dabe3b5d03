#include "contspec/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contspec/errors.hpp"

namespace contspec::dilation {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

void Params::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("dilation: beta must be > 0");
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("dilation: s must be >= 0");
  if (!std::isfinite(gamma)) throw std::invalid_argument("dilation: gamma must be finite");
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("dilation: lambda must lie in (0, 1)");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("dilation: omega must be > 0");
}

double coefficient(double energy, const Params& p, WeightConvention conv) {
  if (!(energy > 0.0)) throw std::invalid_argument("coefficient: energy must be > 0");
  const double le = std::log(energy);
  const double ll = std::log(p.lambda);
  if (conv == WeightConvention::paper)
    return std::exp(p.beta * (le * ll - 0.5 * ll * ll));
  return std::exp(-p.beta * (le * ll + 0.5 * ll * ll));
}

LadderOp annihilator(const Params& p, WeightConvention conv) {
  p.validate();
  Params q = p;
  return LadderOp::dilation(p.lambda, [q, conv](double e) -> std::complex<double> {
    if (!(e > 0.0)) return {0.0, 0.0};
    return {coefficient(e, q, conv), 0.0};
  });
}

double normalization_sq(double s, double beta) {
  if (!(s > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("normalization: need s > 0, beta > 0");
  const double c = 2.0 * std::log(s) + 1.0;
  return std::sqrt(beta / kPi) * std::exp(-c * c / (4.0 * beta));
}

double normalization(double s, double beta) { return std::sqrt(normalization_sq(s, beta)); }

std::complex<double> kernel_value(double energy, const Params& p) {
  if (!(energy > 0.0)) throw std::invalid_argument("kernel_value: energy must be > 0");
  const double n = normalization(p.s, p.beta);
  const double u = std::log(energy);
  const double amp = u * std::log(p.s) - 0.5 * p.beta * u * u;
  return n * std::exp(std::complex<double>(amp, -p.gamma * energy));
}

EnergyKernel kernel(const Params& p) {
  p.validate();
  if (!(p.s > 0.0))
    throw OutOfDomain("dilation kernel degenerates at s = 0 (N -> 0)");
  const double n = normalization(p.s, p.beta);
  const double logs = std::log(p.s);
  const double beta = p.beta;
  const double gamma = p.gamma;
  // |K| is log-normal: peak at u0 = ln s / beta, width 1/sqrt(beta) in u.
  const double u0 = logs / beta;
  const double w = 14.0 / std::sqrt(beta);
  SupportHint hint{std::exp(u0 - w - 2.0 / beta), std::exp(u0 + w + 2.0 / beta)};
  return EnergyKernel(
      [n, logs, beta, gamma](double e) -> std::complex<double> {
        if (!(e > 0.0)) return {0.0, 0.0};
        const double u = std::log(e);
        return n * std::exp(std::complex<double>(u * logs - 0.5 * beta * u * u,
                                                 -gamma * e));
      },
      hint, "dilation");
}

double measure_rho(double s, double beta, MeasureConvention conv) {
  if (!(s > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("measure_rho: need s > 0, beta > 0");
  const double c = (4.0 * std::log(s) + 1.0) / (4.0 * beta);
  if (conv == MeasureConvention::paper) return std::exp(-c) / (s * beta);
  return std::exp(c) / (s * beta);
}

double moment_residual(double log_energy, double beta, MeasureConvention conv,
                       const QuadratureSpec& spec) {
  if (!(beta > 0.0)) throw std::invalid_argument("moment_residual: beta must be > 0");
  const double target = std::exp(beta * log_energy * log_energy);
  // h(s) s^{2 ln E} integrated over s in the log variable u = ln s.
  auto integrand = [log_energy, beta, conv](double u) {
    const double s = std::exp(u);
    const double h = measure_rho(s, beta, conv) * normalization_sq(s, beta);
    return h * std::exp(2.0 * log_energy * u) * s;  // ds = s du
  };
  QuadratureSpec sp = spec;
  sp.transform = QuadTransform::none;
  const double got = integrate_real_line(integrand, sp).value;
  return std::fabs(got - target) / target;
}

double action_variable(double s, double beta) {
  if (!(s > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("action_variable: need s > 0, beta > 0");
  return std::exp((std::log(s) + 0.75) / beta);
}

double mean_energy_quadrature(double s, double beta, double omega,
                              const QuadratureSpec& spec) {
  const double n2 = normalization_sq(s, beta);
  const double logs = std::log(s);
  auto f = [logs, beta](double e) {
    const double u = std::log(e);
    return std::exp(2.0 * logs * u - beta * u * u) * e;
  };
  QuadratureSpec sp = spec;
  sp.transform = QuadTransform::log_substitution;
  return omega * n2 * integrate_half_line(f, sp).value;
}

double invert_action(double action, double beta) {
  if (!(action > 0.0)) throw OutOfRange("invert_action: J must be > 0");
  if (!(beta > 0.0)) throw std::invalid_argument("invert_action: beta must be > 0");
  return std::exp(beta * std::log(action) - 0.75);
}

EnergyKernel kernel_from_action(double action, const Params& p) {
  Params q = p;
  q.s = invert_action(action, p.beta);
  return kernel(q);
}

double product_limit_residual(double log_energy_target, double beta, int n,
                              WeightConvention conv) {
  if (!(log_energy_target >= 0.0) || !(beta > 0.0) || n < 1)
    throw std::invalid_argument("product_limit_residual: bad arguments");
  if (log_energy_target == 0.0) return 0.0;  // empty product
  const double ll = -log_energy_target / n;  // ln lambda
  double sum = 0.0, comp = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double x = -k * ll;  // ln E argument of C~
    const double term = (conv == WeightConvention::paper)
                            ? beta * (x * ll - 0.5 * ll * ll)
                            : -beta * (x * ll + 0.5 * ll * ll);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double target_log = 0.5 * beta * log_energy_target * log_energy_target;
  return std::fabs(std::expm1(sum - target_log));
}

double class_identity_residual(const Params& p, WeightConvention conv,
                               const std::vector<double>& energies) {
  p.validate();
  if (energies.empty())
    throw std::invalid_argument("class_identity_residual: empty grid");
  const double lam = p.lambda;
  const double mu = std::pow(p.s, std::log(1.0 / lam)) / lam;
  Params shifted = p;
  shifted.gamma = p.gamma / lam;

  double sup_k = 0.0;
  for (double e : energies) sup_k = std::max(sup_k, std::abs(kernel_value(e, p)));

  double worst = 0.0;
  for (double e : energies) {
    const std::complex<double> lhs =
        (1.0 / lam) * coefficient(e / lam, p, conv) * kernel_value(e / lam, p);
    const std::complex<double> rhs = mu * kernel_value(e, shifted);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst / sup_k;
}

}  // namespace contspec::dilation

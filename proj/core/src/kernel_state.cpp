#include "contspec/kernel_state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace contspec {

void HamiltonianSpec::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("HamiltonianSpec: omega must be > 0");
}

namespace {

void validate_hint(const SupportHint& hint) {
  if (!(hint.lo >= 0.0) || !(hint.hi > hint.lo) || !std::isfinite(hint.hi))
    throw std::invalid_argument("SupportHint: need 0 <= lo < hi < inf");
}

// Squared modulus integrated over the hint; also the construction check.
// Hints spanning many decades are integrated in u = ln E so the panel
// seeding resolves the envelope.
double norm_sq(const Amplitude& amplitude, const SupportHint& hint,
               const QuadratureSpec& spec) {
  QuadratureSpec s = spec;
  s.transform = QuadTransform::none;
  if (hint.lo > 0.0 && hint.hi > 1e4 * hint.lo) {
    auto g = [&amplitude](double u) {
      const double e = std::exp(u);
      return std::norm(amplitude(e)) * e;
    };
    return integrate_interval(g, std::log(hint.lo), std::log(hint.hi), s).value;
  }
  auto f = [&amplitude](double e) { return std::norm(amplitude(e)); };
  return integrate_interval(f, hint.lo, hint.hi, s).value;
}

}  // namespace

EnergyKernel::EnergyKernel(Amplitude amplitude, SupportHint hint, std::string label,
                           const QuadratureSpec& check_spec)
    : amplitude_(std::move(amplitude)), hint_(hint), label_(std::move(label)) {
  if (!amplitude_) throw std::invalid_argument("EnergyKernel: empty amplitude");
  validate_hint(hint_);
  const double n2 = norm_sq(amplitude_, hint_, check_spec);
  if (!std::isfinite(n2))
    throw std::domain_error("EnergyKernel: amplitude is not square-integrable");
}

std::complex<double> inner(const EnergyKernel& phi, const EnergyKernel& psi,
                           const QuadratureSpec& spec) {
  spec.validate();
  const double lo = std::max(phi.support_hint().lo, psi.support_hint().lo);
  const double hi = std::min(phi.support_hint().hi, psi.support_hint().hi);
  if (!(hi > lo)) return {0.0, 0.0};

  QuadratureSpec s = spec;
  s.transform = QuadTransform::none;
  if (spec.transform == QuadTransform::log_substitution) {
    const double ulo = std::log(std::max(lo, hi * 1e-290));
    const double uhi = std::log(hi);
    auto g = [&phi, &psi](double u) {
      const double e = std::exp(u);
      return std::conj(phi(e)) * psi(e) * e;
    };
    return integrate_interval_c(g, ulo, uhi, s).value;
  }
  auto f = [&phi, &psi](double e) { return std::conj(phi(e)) * psi(e); };
  return integrate_interval_c(f, lo, hi, s).value;
}

double norm(const EnergyKernel& psi, const QuadratureSpec& spec) {
  const double n2 = inner(psi, psi, spec).real();
  return std::sqrt(std::max(0.0, n2));
}

EnergyKernel apply_hamiltonian(const HamiltonianSpec& h, const EnergyKernel& psi) {
  h.validate();
  const double omega = h.omega;
  Amplitude base = [psi](double e) { return psi(e); };
  return EnergyKernel(
      [omega, base](double e) { return omega * e * base(e); },
      psi.support_hint(), psi.label());
}

EnergyKernel time_evolve(const HamiltonianSpec& h, double t, const EnergyKernel& psi) {
  h.validate();
  const double phase_rate = h.omega * t;
  Amplitude base = [psi](double e) { return psi(e); };
  return EnergyKernel(
      [phase_rate, base](double e) {
        return std::exp(std::complex<double>(0.0, -phase_rate * e)) * base(e);
      },
      psi.support_hint(), psi.label());
}

EnergyKernel scaled(std::complex<double> factor, const EnergyKernel& psi) {
  Amplitude base = [psi](double e) { return psi(e); };
  return EnergyKernel([factor, base](double e) { return factor * base(e); },
                      psi.support_hint(), psi.label());
}

EnergyKernel difference(const EnergyKernel& a, const EnergyKernel& b) {
  SupportHint hint{std::min(a.support_hint().lo, b.support_hint().lo),
                   std::max(a.support_hint().hi, b.support_hint().hi)};
  Amplitude fa = [a](double e) { return a(e); };
  Amplitude fb = [b](double e) { return b(e); };
  return EnergyKernel([fa, fb](double e) { return fa(e) - fb(e); }, hint);
}

std::vector<SampleRow> sample(const EnergyKernel& psi, const std::vector<double>& grid) {
  std::vector<SampleRow> rows;
  rows.reserve(grid.size());
  for (double e : grid) {
    const std::complex<double> v = psi(e);
    rows.push_back({e, v.real(), v.imag()});
  }
  return rows;
}

}  // namespace contspec

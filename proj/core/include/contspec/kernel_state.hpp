#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "contspec/quadrature.hpp"

namespace contspec {

using Amplitude = std::function<std::complex<double>(double)>;

/// Interval of (0, inf) outside which the amplitude is negligible;
/// bounds every quadrature over the kernel.
struct SupportHint {
  double lo = 0.0;
  double hi = 1.0;
};

struct HamiltonianSpec {
  double omega = 1.0;  ///< H|E> = omega E |E>, omega > 0

  void validate() const;
};

/// A state of the continuous Hilbert space, represented by its complex
/// kernel E -> psi(E) against the Dirac-normalized energy basis.
/// Immutable after construction; construction verifies square
/// integrability by quadrature over the support hint.
class EnergyKernel {
 public:
  EnergyKernel(Amplitude amplitude, SupportHint hint, std::string label = {},
               const QuadratureSpec& check_spec = {});

  std::complex<double> operator()(double energy) const { return amplitude_(energy); }
  const SupportHint& support_hint() const { return hint_; }
  const std::string& label() const { return label_; }

 private:
  Amplitude amplitude_;
  SupportHint hint_;
  std::string label_;
};

/// <phi|psi> = int conj(phi) psi dE over the intersection of the support
/// hints (exactly zero when they are disjoint). A log_substitution spec
/// evaluates the same integral in u = ln E.
std::complex<double> inner(const EnergyKernel& phi, const EnergyKernel& psi,
                           const QuadratureSpec& spec = {});

double norm(const EnergyKernel& psi, const QuadratureSpec& spec = {});

/// E -> omega E psi(E).
EnergyKernel apply_hamiltonian(const HamiltonianSpec& h, const EnergyKernel& psi);

/// E -> e^{-i omega t E} psi(E); unitary.
EnergyKernel time_evolve(const HamiltonianSpec& h, double t, const EnergyKernel& psi);

EnergyKernel scaled(std::complex<double> factor, const EnergyKernel& psi);
EnergyKernel difference(const EnergyKernel& a, const EnergyKernel& b);

struct SampleRow {
  double energy;
  double re;
  double im;
};

/// Pointwise samples for table export; rows are (E, Re psi, Im psi).
std::vector<SampleRow> sample(const EnergyKernel& psi, const std::vector<double>& grid);

}  // namespace contspec

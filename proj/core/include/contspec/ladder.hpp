#pragma once

#include <complex>
#include <functional>

#include "contspec/kernel_state.hpp"

namespace contspec {

using Weight = std::function<std::complex<double>(double)>;

enum class Family { translation, dilation };

/// Weighted affine shift on the energy half line: maps |E> to
/// w(E) |m(E)> with m(E) = scale * E + shift, scale > 0. The translation
/// family is (scale 1, shift -epsilon), the dilation family
/// (scale lambda, shift 0). Operators carry exact symbolic structure so
/// compositions and commutators stay in closed form at the kernel level.
class LadderOp {
 public:
  LadderOp(double scale, double shift, Weight weight);

  static LadderOp translation(double epsilon, Weight weight);
  static LadderOp dilation(double lambda, Weight weight);

  double scale() const { return scale_; }
  double shift() const { return shift_; }
  std::complex<double> weight(double energy) const { return weight_(energy); }

  double map(double energy) const { return scale_ * energy + shift_; }
  double inverse_map(double energy) const { return (energy - shift_) / scale_; }

 private:
  double scale_;
  double shift_;
  Weight weight_;
};

/// (op psi)(E) = (1/scale) w(m^{-1}(E)) psi(m^{-1}(E)), zero where
/// m^{-1}(E) leaves (0, inf).
EnergyKernel apply(const LadderOp& op, const EnergyKernel& psi);

/// (op^dag psi)(E) = conj(w(E)) psi(m(E)), zero where m(E) <= 0. Satisfies
/// inner(phi, apply(op, psi)) == inner(adjoint_apply(op, phi), psi).
EnergyKernel adjoint_apply(const LadderOp& op, const EnergyKernel& psi);

/// lhs applied after rhs; the affine maps compose and the weights multiply.
LadderOp compose(const LadderOp& lhs, const LadderOp& rhs);

enum class MultiplierProvenance { paper_formula, kernel_calculus };

/// A diagonal operator in the energy basis: psi(E) -> d(E) psi(E).
struct DiagonalMultiplier {
  std::function<double(double)> d;
  MultiplierProvenance provenance;
};

/// Diagonal multiplier of the q-weighted commutator
/// op op^dag - q op^dag op, derived by composing apply/adjoint_apply at
/// the kernel level:
///   d(E) = (1/scale) [ |w(m^{-1}(E))|^2 - q |w(E)|^2 ].
/// Rejects q <= 0.
DiagonalMultiplier q_commutator_multiplier(const LadderOp& op, double q);

/// Closed-form commutator multipliers as displayed for each family.
/// The translation form is e^{2 a E eps - a eps^2} (e^{2 a eps^2} - 1).
DiagonalMultiplier translation_commutator_paper(double alpha, double epsilon);

/// Verbatim displayed dilation form
///   e^{2 b ln(E) ln(l) - b ln(l)^2} (1 - e^{2 b ln(l)^2}) / l.
DiagonalMultiplier dilation_commutator_paper(double beta, double lambda);

/// Sign-corrected dilation form matching the kernel-calculus commutator of
/// the weight that satisfies the lowering-class identity exactly:
///   e^{-2 b ln(E) ln(l) - b ln(l)^2} (e^{2 b ln(l)^2} - 1) / l.
DiagonalMultiplier dilation_commutator_sign_corrected(double beta, double lambda);

/// Normalized deformation ratio built from the displayed closed forms:
/// translation d(E) / (2 alpha eps^2), dilation
/// lambda d(E) / (-2 beta ln(lambda)^2). Pointwise -> 1 as the
/// deformation parameter (alpha resp. beta) -> 0.
std::function<double(double)> commutator_limit_ratio(Family family, double deform_param,
                                                     double struct_param);

/// Same normalization applied to the q = 1 kernel-calculus multiplier of
/// the given operator; reported beside the closed-form ratio.
std::function<double(double)> commutator_limit_ratio_kernel(const LadderOp& op,
                                                            double deform_param,
                                                            double struct_param,
                                                            Family family);

}  // namespace contspec

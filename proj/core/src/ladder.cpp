#include "contspec/ladder.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace contspec {

LadderOp::LadderOp(double scale, double shift, Weight weight)
    : scale_(scale), shift_(shift), weight_(std::move(weight)) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_) || !std::isfinite(shift_))
    throw std::invalid_argument("LadderOp: requires finite scale > 0");
  if (!weight_) throw std::invalid_argument("LadderOp: empty weight");
}

LadderOp LadderOp::translation(double epsilon, Weight weight) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("translation: epsilon must be > 0");
  return LadderOp(1.0, -epsilon, std::move(weight));
}

LadderOp LadderOp::dilation(double lambda, Weight weight) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilation: lambda must be > 0");
  return LadderOp(lambda, 0.0, std::move(weight));
}

EnergyKernel apply(const LadderOp& op, const EnergyKernel& psi) {
  const SupportHint& h = psi.support_hint();
  SupportHint mapped{std::max(0.0, op.map(h.lo)), op.map(h.hi)};
  if (!(mapped.hi > mapped.lo)) mapped = {0.0, std::max(1e-6, mapped.hi)};

  LadderOp o = op;
  Amplitude base = [psi](double e) { return psi(e); };
  return EnergyKernel(
      [o, base](double e) -> std::complex<double> {
        const double pre = o.inverse_map(e);
        if (!(pre > 0.0)) return {0.0, 0.0};
        return (1.0 / o.scale()) * o.weight(pre) * base(pre);
      },
      mapped, psi.label());
}

EnergyKernel adjoint_apply(const LadderOp& op, const EnergyKernel& psi) {
  const SupportHint& h = psi.support_hint();
  SupportHint mapped{std::max(0.0, op.inverse_map(h.lo)), op.inverse_map(h.hi)};
  if (!(mapped.hi > mapped.lo)) mapped = {0.0, std::max(1e-6, mapped.hi)};

  LadderOp o = op;
  Amplitude base = [psi](double e) { return psi(e); };
  return EnergyKernel(
      [o, base](double e) -> std::complex<double> {
        const double post = o.map(e);
        if (!(post > 0.0)) return {0.0, 0.0};
        return std::conj(o.weight(e)) * base(post);
      },
      mapped, psi.label());
}

LadderOp compose(const LadderOp& lhs, const LadderOp& rhs) {
  LadderOp l = lhs;
  LadderOp r = rhs;
  Weight w = [l, r](double e) { return l.weight(r.map(e)) * r.weight(e); };
  return LadderOp(lhs.scale() * rhs.scale(),
                  lhs.scale() * rhs.shift() + lhs.shift(), std::move(w));
}

DiagonalMultiplier q_commutator_multiplier(const LadderOp& op, double q) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw std::invalid_argument("q_commutator_multiplier: q must be > 0");
  LadderOp o = op;
  // Weights own their cutoffs; only negative arguments are clamped here.
  return DiagonalMultiplier{
      [o, q](double e) {
        const double pre = o.inverse_map(e);
        const double up = pre >= 0.0 ? std::norm(o.weight(pre)) : 0.0;
        const double down = e >= 0.0 ? std::norm(o.weight(e)) : 0.0;
        return (up - q * down) / o.scale();
      },
      MultiplierProvenance::kernel_calculus};
}

DiagonalMultiplier translation_commutator_paper(double alpha, double epsilon) {
  return DiagonalMultiplier{
      [alpha, epsilon](double e) {
        return std::exp(2.0 * alpha * e * epsilon - alpha * epsilon * epsilon) *
               (std::exp(2.0 * alpha * epsilon * epsilon) - 1.0);
      },
      MultiplierProvenance::paper_formula};
}

DiagonalMultiplier dilation_commutator_paper(double beta, double lambda) {
  const double ll = std::log(lambda);
  return DiagonalMultiplier{
      [beta, lambda, ll](double e) {
        return std::exp(2.0 * beta * std::log(e) * ll - beta * ll * ll) *
               (1.0 - std::exp(2.0 * beta * ll * ll)) / lambda;
      },
      MultiplierProvenance::paper_formula};
}

DiagonalMultiplier dilation_commutator_sign_corrected(double beta, double lambda) {
  const double ll = std::log(lambda);
  return DiagonalMultiplier{
      [beta, lambda, ll](double e) {
        return std::exp(-2.0 * beta * std::log(e) * ll - beta * ll * ll) *
               (std::exp(2.0 * beta * ll * ll) - 1.0) / lambda;
      },
      MultiplierProvenance::paper_formula};
}

std::function<double(double)> commutator_limit_ratio(Family family, double deform_param,
                                                     double struct_param) {
  if (family == Family::translation) {
    const double alpha = deform_param;
    const double epsilon = struct_param;
    if (!(alpha > 0.0) || !(epsilon > 0.0))
      throw std::invalid_argument("commutator_limit_ratio: need alpha > 0, epsilon > 0");
    auto d = translation_commutator_paper(alpha, epsilon).d;
    const double scale = 2.0 * alpha * epsilon * epsilon;
    return [d, scale](double e) { return d(e) / scale; };
  }
  const double beta = deform_param;
  const double lambda = struct_param;
  if (!(beta > 0.0) || !(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("commutator_limit_ratio: need beta > 0, 0 < lambda < 1");
  auto d = dilation_commutator_paper(beta, lambda).d;
  const double ll = std::log(lambda);
  const double scale = -2.0 * beta * ll * ll;
  return [d, lambda, scale](double e) { return lambda * d(e) / scale; };
}

std::function<double(double)> commutator_limit_ratio_kernel(const LadderOp& op,
                                                            double deform_param,
                                                            double struct_param,
                                                            Family family) {
  auto d = q_commutator_multiplier(op, 1.0).d;
  if (family == Family::translation) {
    const double scale = 2.0 * deform_param * struct_param * struct_param;
    return [d, scale](double e) { return d(e) / scale; };
  }
  const double ll = std::log(struct_param);
  const double scale = -2.0 * deform_param * ll * ll;
  const double lambda = struct_param;
  return [d, lambda, scale](double e) { return lambda * d(e) / scale; };
}

}  // namespace contspec

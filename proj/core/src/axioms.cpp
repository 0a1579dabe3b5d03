#include "contspec/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contspec/dilation.hpp"
#include "contspec/translation.hpp"

namespace contspec::gk {

namespace {

QuadratureSpec family_spec(Family family) {
  QuadratureSpec spec;
  spec.transform = family == Family::dilation ? QuadTransform::log_substitution
                                              : QuadTransform::none;
  return spec;
}

EnergyKernel make_state(const SuiteConfig& config, double s, double gamma) {
  if (config.family == Family::translation) {
    translation::Params p{config.shape, s, gamma, config.epsilon, config.omega};
    return translation::kernel(p);
  }
  dilation::Params p{config.shape, s, gamma, config.lambda, config.omega};
  return dilation::kernel(p);
}

// Pointwise sample grid covering the support hint; log-spaced for the
// dilation family.
std::vector<double> sample_grid(Family family, const SupportHint& hint, int n) {
  std::vector<double> grid;
  grid.reserve(n);
  if (family == Family::dilation) {
    const double ulo = std::log(std::max(hint.lo, 1e-290));
    const double uhi = std::log(hint.hi);
    for (int i = 0; i < n; ++i)
      grid.push_back(std::exp(ulo + (uhi - ulo) * i / (n - 1)));
  } else {
    for (int i = 0; i < n; ++i)
      grid.push_back(hint.lo + (hint.hi - hint.lo) * i / (n - 1));
  }
  return grid;
}

std::vector<RatioResult> evaluate_ratio(const std::function<double(double)>& ratio,
                                        const std::vector<double>& energies) {
  std::vector<RatioResult> out;
  out.reserve(energies.size());
  for (double e : energies) out.push_back({e, ratio(e)});
  return out;
}

// Relative disagreement between the kernel-calculus commutator multiplier
// and the closed-form one on a grid that avoids the translation cutoff
// strip (0, eps), where the hard-zero weight makes the operator product
// differ from the closed form by construction.
double multiplier_agreement(const SuiteConfig& config,
                            dilation::WeightConvention weight_conv) {
  std::vector<double> grid;
  double worst = 0.0;
  if (config.family == Family::translation) {
    translation::Params p{config.shape, 1.0, 0.0, config.epsilon, config.omega};
    auto kernel_route = q_commutator_multiplier(translation::annihilator(p), 1.0).d;
    auto closed = translation_commutator_paper(config.shape, config.epsilon).d;
    grid.push_back(0.0);
    for (int i = 0; i <= 50; ++i)
      grid.push_back(config.epsilon + (10.0 - config.epsilon) * i / 50.0);
    for (double e : grid)
      worst = std::max(worst, std::fabs(kernel_route(e) / closed(e) - 1.0));
    return worst;
  }
  dilation::Params p{config.shape, 1.0, 0.0, config.lambda, config.omega};
  auto kernel_route =
      q_commutator_multiplier(dilation::annihilator(p, weight_conv), 1.0).d;
  auto closed = weight_conv == dilation::WeightConvention::kernel_consistent
                    ? dilation_commutator_sign_corrected(config.shape, config.lambda).d
                    : dilation_commutator_paper(config.shape, config.lambda).d;
  for (int i = 0; i <= 50; ++i) {
    const double e = 0.1 + (10.0 - 0.1) * i / 50.0;
    worst = std::max(worst, std::fabs(kernel_route(e) / closed(e) - 1.0));
  }
  return worst;
}

}  // namespace

void Thresholds::validate() const {
  for (double t : {continuity_final, temporal, moment, action, commutator_ratio,
                   multiplier_agreement})
    if (!(t > 0.0)) throw std::invalid_argument("Thresholds: all thresholds must be > 0");
}

SuiteConfig SuiteConfig::defaults(Family family) {
  SuiteConfig c;
  c.family = family;
  c.times = {0.7, 1.3};
  c.actions = {0.6, 1.0, 2.0, 5.0};
  if (family == Family::translation) {
    c.s = 1.0;
    c.probes = {0.0, 0.5, 1.0, 2.0, 5.0};
    c.continuity_deltas = {1e-1, 1e-2, 1e-3, 1e-4};
    for (int i = 0; i <= 20; ++i) c.commutator_energies.push_back(0.5 * i);
  } else {
    // Base label s(J = 1). The label metric of this family exceeds 1
    // everywhere, so the delta ladder descends one decade further to
    // bring the final distance below the common 1e-4 threshold.
    c.s = std::exp(-0.75);
    c.probes = {-1.0, 0.0, 1.0, 2.0};
    c.continuity_deltas = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    for (int i = 0; i <= 20; ++i) c.commutator_energies.push_back(0.1 + 0.495 * i);
  }
  return c;
}

void SuiteConfig::validate() const {
  thresholds.validate();
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw std::invalid_argument("SuiteConfig: shape parameter must be > 0");
  if (!(s > 0.0)) throw std::invalid_argument("SuiteConfig: s must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("SuiteConfig: omega must be > 0");
  if (family == Family::translation) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("SuiteConfig: epsilon must be > 0");
  } else if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("SuiteConfig: lambda must lie in (0, 1)");
  }
  if (!(commutator_deform > 0.0))
    throw std::invalid_argument("SuiteConfig: commutator_deform must be > 0");
  for (double d : continuity_deltas)
    if (!(d > 0.0)) throw std::invalid_argument("SuiteConfig: deltas must be > 0");
  for (size_t i = 1; i < continuity_deltas.size(); ++i)
    if (!(continuity_deltas[i] < continuity_deltas[i - 1]))
      throw std::invalid_argument("SuiteConfig: deltas must decrease");
}

std::vector<ContinuityResult> continuity_check(const SuiteConfig& config,
                                               const std::vector<double>& deltas) {
  const QuadratureSpec spec = family_spec(config.family);
  EnergyKernel base = make_state(config, config.s, config.gamma);
  std::vector<ContinuityResult> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    EnergyKernel shifted = make_state(config, config.s + d, config.gamma + d);
    out.push_back({d, norm(difference(shifted, base), spec)});
  }
  return out;
}

std::vector<double> temporal_stability_check(const SuiteConfig& config,
                                             const std::vector<double>& times) {
  HamiltonianSpec h{config.omega};
  EnergyKernel base = make_state(config, config.s, config.gamma);
  const auto grid = sample_grid(config.family, base.support_hint(), 201);
  double sup = 0.0;
  for (double e : grid) sup = std::max(sup, std::abs(base(e)));

  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    EnergyKernel evolved = time_evolve(h, t, base);
    EnergyKernel target = make_state(config, config.s, config.gamma + config.omega * t);
    double worst = 0.0;
    for (double e : grid) worst = std::max(worst, std::abs(evolved(e) - target(e)));
    out.push_back(worst / sup);
  }
  return out;
}

std::vector<MomentResult> resolution_check(Family family, double shape,
                                           const std::vector<double>& probes,
                                           dilation::MeasureConvention measure) {
  std::vector<MomentResult> out;
  out.reserve(probes.size());
  for (double p : probes) {
    const double r = family == Family::translation
                         ? translation::moment_residual(p, shape)
                         : dilation::moment_residual(p, shape, measure);
    out.push_back({p, r});
  }
  return out;
}

std::vector<ActionResult> action_identity_check(Family family,
                                                const std::vector<double>& actions,
                                                double shape, double omega) {
  std::vector<ActionResult> out;
  out.reserve(actions.size());
  const QuadratureSpec spec = family_spec(family);
  HamiltonianSpec h{omega};
  for (double j : actions) {
    double means[2];
    for (int gi = 0; gi < 2; ++gi) {
      const double gamma = gi == 0 ? 0.0 : 2.0;
      EnergyKernel psi = [&]() {
        if (family == Family::translation) {
          const double s = translation::invert_action(j, shape);
          return translation::kernel({shape, s, gamma, 1.0, omega});
        }
        dilation::Params p{shape, 1.0, gamma, 0.5, omega};
        return dilation::kernel_from_action(j, p);
      }();
      means[gi] = inner(psi, apply_hamiltonian(h, psi), spec).real();
    }
    out.push_back({j, std::fabs(means[0] / omega - j),
                   std::fabs(means[0] - means[1]) / omega});
  }
  return out;
}

std::string family_name(Family family) {
  return family == Family::translation ? "translation" : "dilation";
}

AxiomReport run_axiom_suite(const SuiteConfig& config) {
  config.validate();
  AxiomReport report;
  report.family = config.family;
  report.config = config;
  report.conventions = adjudicate_conventions();

  auto weight_conv = report.conventions.weight();
  auto measure_conv = report.conventions.measure();
  if (config.convention_mode == ConventionMode::force_paper) {
    weight_conv = dilation::WeightConvention::paper;
    measure_conv = dilation::MeasureConvention::paper;
  } else if (config.convention_mode == ConventionMode::force_kernel) {
    weight_conv = dilation::WeightConvention::kernel_consistent;
    measure_conv = dilation::MeasureConvention::moment_solution;
  }

  auto guard = [&report](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& ex) {
      report.failures.push_back(name + ": " + ex.what());
    }
  };

  guard("continuity", [&] {
    report.continuity_residuals = continuity_check(config, config.continuity_deltas);
  });
  guard("temporal_stability", [&] {
    report.temporal_residuals = temporal_stability_check(config, config.times);
  });
  guard("resolution_of_identity", [&] {
    report.moment_residuals =
        resolution_check(config.family, config.shape, config.probes, measure_conv);
  });
  guard("action_identity", [&] {
    report.action_residuals = action_identity_check(config.family, config.actions,
                                                    config.shape, config.omega);
  });
  guard("commutator_limit", [&] {
    const double sp = config.family == Family::translation ? config.epsilon
                                                           : config.lambda;
    auto closed = commutator_limit_ratio(config.family, config.commutator_deform, sp);
    report.commutator_ratios = evaluate_ratio(closed, config.commutator_energies);

    const auto op = config.family == Family::translation
                        ? translation::annihilator(
                              {config.commutator_deform, 1.0, 0.0, config.epsilon, 1.0})
                        : dilation::annihilator(
                              {config.commutator_deform, 1.0, 0.0, config.lambda, 1.0},
                              weight_conv);
    auto kernel_route = commutator_limit_ratio_kernel(op, config.commutator_deform, sp,
                                                      config.family);
    report.commutator_ratios_kernel =
        evaluate_ratio(kernel_route, config.commutator_energies);
    report.multiplier_agreement = multiplier_agreement(config, weight_conv);
  });

  const Thresholds& th = config.thresholds;
  auto& verdicts = report.axiom_pass;

  bool continuity_ok = !report.continuity_residuals.empty();
  for (size_t i = 0; i < report.continuity_residuals.size(); ++i) {
    if (i > 0 && !(report.continuity_residuals[i].distance <
                   report.continuity_residuals[i - 1].distance))
      continuity_ok = false;
  }
  if (continuity_ok)
    continuity_ok = report.continuity_residuals.back().distance < th.continuity_final;
  verdicts["continuity"] = continuity_ok;

  bool temporal_ok = !report.temporal_residuals.empty();
  for (double r : report.temporal_residuals) temporal_ok = temporal_ok && r < th.temporal;
  verdicts["temporal_stability"] = temporal_ok;

  bool moment_ok = !report.moment_residuals.empty();
  for (const auto& m : report.moment_residuals)
    moment_ok = moment_ok && m.residual < th.moment;
  verdicts["resolution_of_identity"] = moment_ok;

  bool action_ok = !report.action_residuals.empty();
  for (const auto& a : report.action_residuals)
    action_ok = action_ok && a.residual < th.action && a.gamma_spread < 10.0 * th.action;
  verdicts["action_identity"] = action_ok;

  // The closed-form route carries the commutator verdict; the kernel
  // route is recorded beside it (for the dilation family it approaches -1,
  // the displayed normalizer presupposing the displayed weight sign).
  bool commutator_ok = !report.commutator_ratios.empty();
  for (const auto& r : report.commutator_ratios)
    commutator_ok = commutator_ok && std::fabs(r.ratio - 1.0) < th.commutator_ratio;
  commutator_ok = commutator_ok && report.multiplier_agreement < th.multiplier_agreement;
  verdicts["commutator_limit"] = commutator_ok;

  verdicts["convention_adjudication"] = report.conventions.all_decisive();

  report.pass = report.failures.empty();
  for (const auto& [name, ok] : verdicts) report.pass = report.pass && ok;
  return report;
}

namespace {

nlohmann::json adjudication_json(const Adjudication& a) {
  return nlohmann::json{{"quantity", a.quantity},
                        {"selected", a.selected},
                        {"rejected", a.rejected},
                        {"residual_selected", a.residual_selected},
                        {"residual_rejected", a.residual_rejected},
                        {"tolerance", a.tolerance},
                        {"decisive", a.decisive},
                        {"criterion", a.criterion}};
}

template <class T>
nlohmann::json pairs_json(const std::vector<T>& rows, double T::*x, double T::*y) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back({r.*x, r.*y});
  return arr;
}

}  // namespace

nlohmann::json to_json(const AxiomReport& report) {
  const SuiteConfig& c = report.config;
  const char* mode = c.convention_mode == ConventionMode::automatic ? "auto"
                     : c.convention_mode == ConventionMode::force_paper ? "paper"
                                                                        : "kernel";
  nlohmann::json config{{"family", family_name(c.family)},
                        {"convention_mode", mode},
                        {"shape", c.shape},
                        {"s", c.s},
                        {"gamma", c.gamma},
                        {"epsilon", c.epsilon},
                        {"lambda", c.lambda},
                        {"omega", c.omega},
                        {"continuity_deltas", c.continuity_deltas},
                        {"times", c.times},
                        {"probes", c.probes},
                        {"actions", c.actions},
                        {"commutator_deform", c.commutator_deform},
                        {"commutator_energies", c.commutator_energies},
                        {"thresholds",
                         {{"continuity_final", c.thresholds.continuity_final},
                          {"temporal", c.thresholds.temporal},
                          {"moment", c.thresholds.moment},
                          {"action", c.thresholds.action},
                          {"commutator_ratio", c.thresholds.commutator_ratio},
                          {"multiplier_agreement", c.thresholds.multiplier_agreement}}}};

  nlohmann::json conventions{
      {"dilation_weight", adjudication_json(report.conventions.dilation_weight)},
      {"dilation_measure", adjudication_json(report.conventions.dilation_measure)},
      {"translation_normalization",
       adjudication_json(report.conventions.translation_normalization)},
      {"mean_energy_derivative",
       adjudication_json(report.conventions.mean_energy_derivative)},
      {"all_decisive", report.conventions.all_decisive()}};

  nlohmann::json actions = nlohmann::json::array();
  for (const auto& a : report.action_residuals)
    actions.push_back({a.action, a.residual, a.gamma_spread});

  nlohmann::json axioms{
      {"continuity",
       {{"residuals", pairs_json(report.continuity_residuals, &ContinuityResult::delta,
                                 &ContinuityResult::distance)},
        {"pass", report.axiom_pass.count("continuity")
                     ? report.axiom_pass.at("continuity")
                     : false}}},
      {"temporal_stability",
       {{"residuals", report.temporal_residuals},
        {"pass", report.axiom_pass.count("temporal_stability")
                     ? report.axiom_pass.at("temporal_stability")
                     : false}}},
      {"resolution_of_identity",
       {{"residuals", pairs_json(report.moment_residuals, &MomentResult::probe,
                                 &MomentResult::residual)},
        {"note",
         "phase-label integral performed analytically (Fourier orthogonality); "
         "the radial moment condition is what is checked"},
        {"pass", report.axiom_pass.count("resolution_of_identity")
                     ? report.axiom_pass.at("resolution_of_identity")
                     : false}}},
      {"action_identity",
       {{"residuals", actions},
        {"pass", report.axiom_pass.count("action_identity")
                     ? report.axiom_pass.at("action_identity")
                     : false}}}};

  nlohmann::json commutator{
      {"deform_param", c.commutator_deform},
      {"ratios", pairs_json(report.commutator_ratios, &RatioResult::energy,
                            &RatioResult::ratio)},
      {"ratios_kernel_route", pairs_json(report.commutator_ratios_kernel,
                                         &RatioResult::energy, &RatioResult::ratio)},
      {"multiplier_agreement", report.multiplier_agreement},
      {"pass", report.axiom_pass.count("commutator_limit")
                   ? report.axiom_pass.at("commutator_limit")
                   : false}};

  return nlohmann::json{{"schema_version", report.schema_version},
                        {"family", family_name(report.family)},
                        {"config", config},
                        {"conventions", conventions},
                        {"axioms", axioms},
                        {"commutator", commutator},
                        {"failures", report.failures},
                        {"pass", report.pass}};
}

}  // namespace contspec::gk

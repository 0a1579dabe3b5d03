#include "contspec/conventions.hpp"

#include <algorithm>
#include <cmath>

#include "contspec/numerics.hpp"
#include "contspec/quadrature.hpp"
#include "contspec/translation.hpp"

namespace contspec {

namespace {

Adjudication decide(std::string quantity, std::string name_a, double res_a,
                    std::string name_b, double res_b, double tol,
                    std::string criterion) {
  Adjudication adj;
  adj.quantity = std::move(quantity);
  adj.tolerance = tol;
  adj.criterion = std::move(criterion);
  const bool a_wins = res_a <= res_b;
  adj.selected = a_wins ? name_a : name_b;
  adj.rejected = a_wins ? name_b : name_a;
  adj.residual_selected = a_wins ? res_a : res_b;
  adj.residual_rejected = a_wins ? res_b : res_a;
  adj.decisive = adj.residual_selected < tol && adj.residual_rejected > 10.0 * tol;
  return adj;
}

// Lowering-class identity residual at 100 energies, plus the limit
// requirement C(E -> 0) = 0 folded in as a penalty when violated.
double weight_oracle(dilation::WeightConvention conv) {
  dilation::Params p;
  p.beta = 1.0;
  p.s = 2.0;
  p.gamma = 0.7;
  p.lambda = 0.5;
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(1e-3 + (20.0 - 1e-3) * i / 99.0);
  double res = dilation::class_identity_residual(p, conv, grid);
  // C(0, lambda) = 0: probe the limit four decades below the grid.
  const double limit = dilation::coefficient(1e-12, p, conv);
  if (!(limit < 1e-3)) res = std::max(res, limit);
  return res;
}

double measure_oracle(dilation::MeasureConvention conv) {
  double worst = 0.0;
  for (double log_e : {-1.0, 0.0, 1.0, 2.0})
    worst = std::max(worst, dilation::moment_residual(log_e, 1.0, conv));
  return worst;
}

// Defining normalization integral versus each closed form, on an s grid
// that includes s > 1 where the two forms part ways.
double normalization_oracle(bool abs_form) {
  QuadratureSpec spec;
  spec.transform = QuadTransform::gaussian_centering;
  double worst = 0.0;
  for (double s : {0.5, 1.0, 2.0, std::exp(1.0)}) {
    const double logs = std::log(s);
    auto f = [logs](double e) { return std::exp(2.0 * e * logs - e * e); };
    const double integral = integrate_half_line(f, spec).value;
    const double n2 = abs_form ? translation::normalization_sq_abs_form(s, 1.0)
                               : translation::normalization_sq(s, 1.0);
    worst = std::max(worst, std::fabs(n2 * integral - 1.0));
  }
  return worst;
}

// Central finite differences of the mean energy versus each analytic form.
double derivative_oracle(bool display_form) {
  const double h = 1e-5;
  double worst = 0.0;
  for (double s : {0.3, 1.0, 3.0}) {
    const double fd =
        (translation::mean_energy(s + h, 1.0) - translation::mean_energy(s - h, 1.0)) /
        (2.0 * h);
    const double an = display_form
                          ? translation::mean_energy_derivative_display_form(s, 1.0)
                          : translation::mean_energy_derivative(s, 1.0);
    worst = std::max(worst, std::fabs(an - fd) / std::fabs(fd));
  }
  return worst;
}

}  // namespace

dilation::WeightConvention ConventionRecord::weight() const {
  return dilation_weight.selected == "kernel_consistent"
             ? dilation::WeightConvention::kernel_consistent
             : dilation::WeightConvention::paper;
}

dilation::MeasureConvention ConventionRecord::measure() const {
  return dilation_measure.selected == "moment_solution"
             ? dilation::MeasureConvention::moment_solution
             : dilation::MeasureConvention::paper;
}

bool ConventionRecord::all_decisive() const {
  return dilation_weight.decisive && dilation_measure.decisive &&
         translation_normalization.decisive && mean_energy_derivative.decisive;
}

ConventionRecord adjudicate_conventions() {
  ConventionRecord rec;
  rec.dilation_weight = decide(
      "dilation_weight", "kernel_consistent",
      weight_oracle(dilation::WeightConvention::kernel_consistent), "paper",
      weight_oracle(dilation::WeightConvention::paper), 1e-10,
      "lowering-class identity at 100 energies in [1e-3, 20] and C(E->0) = 0");
  rec.dilation_measure = decide(
      "dilation_measure", "moment_solution",
      measure_oracle(dilation::MeasureConvention::moment_solution), "paper",
      measure_oracle(dilation::MeasureConvention::paper), 1e-8,
      "radial moment condition at ln E in {-1, 0, 1, 2}, beta = 1");
  rec.translation_normalization = decide(
      "translation_normalization", "defining_integral",
      normalization_oracle(/*abs_form=*/false), "abs_log_form",
      normalization_oracle(/*abs_form=*/true), 1e-8,
      "quadrature of the defining integral on s in {0.5, 1, 2, e}, alpha = 1");
  rec.mean_energy_derivative = decide(
      "mean_energy_derivative", "analytic", derivative_oracle(false), "display_form",
      derivative_oracle(true), 1e-6,
      "central finite differences (h = 1e-5) of the mean energy at s in {0.3, 1, 3}");
  return rec;
}

}  // namespace contspec

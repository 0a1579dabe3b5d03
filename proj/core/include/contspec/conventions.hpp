#pragma once

#include <string>
#include <vector>

#include "contspec/dilation.hpp"

namespace contspec {

/// Outcome of one residual-oracle adjudication between two published
/// variants of a formula. Residuals are reported for both sides; a clean
/// selection requires the winner below `tolerance` and the loser above
/// 10x that.
struct Adjudication {
  std::string quantity;
  std::string selected;
  std::string rejected;
  double residual_selected = 0.0;
  double residual_rejected = 0.0;
  double tolerance = 0.0;
  bool decisive = false;
  std::string criterion;
};

struct ConventionRecord {
  Adjudication dilation_weight;
  Adjudication dilation_measure;
  Adjudication translation_normalization;
  Adjudication mean_energy_derivative;

  dilation::WeightConvention weight() const;
  dilation::MeasureConvention measure() const;
  bool all_decisive() const;
};

/// Runs the four residual oracles and records both sides of each disputed
/// sign. Deterministic; suitable for embedding in every report.
ConventionRecord adjudicate_conventions();

}  // namespace contspec

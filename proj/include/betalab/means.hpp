#pragma once

// Reflexivity, pre-mean and mean predicates for bivariate functions, and the
// classification of beta-type functions against the harmonic mean.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betalab/function.hpp"
#include "betalab/generator.hpp"
#include "betalab/grid.hpp"

namespace betalab {

/// H(x, y) = 2xy / (x + y)
double harmonic_mean(double x, double y);
BivariateFunction harmonic_mean_function();
/// (x, y) ↦ B_f(x, y)
BivariateFunction beta_type_function(const Generator& f);

struct ReflexivityReport {
  double max_deviation = 0.0;  // max |M(x, x) − x|
  double witness = 0.0;        // probe attaining it
};

struct MeanViolation {
  double x;
  double y;
  double value;
};

struct PreMeanReport {
  bool is_pre_mean = false;
  ReflexivityReport reflexivity;
  std::vector<MeanViolation> range_violations;  // values outside (0, ∞)
};

/// Throws InvalidGrid on an empty probe set.
ReflexivityReport check_reflexive(const BivariateFunction& m,
                                  std::span<const double> probes);

/// Pairs where M(x, y) leaves [min, max], widened by rel_tol on each side.
std::vector<MeanViolation> check_mean_property(const BivariateFunction& m,
                                               std::span<const Pair> pairs,
                                               double rel_tol = 0.0);

/// Reflexive on the diagonal of `pairs` (within reflexive_tol) and every
/// sampled value in (0, ∞). A sample-based necessary condition only.
PreMeanReport check_pre_mean(const BivariateFunction& m,
                             std::span<const Pair> pairs,
                             double reflexive_tol = 1e-9);

struct Tolerances {
  double identity = 1e-9;
  double classify = 1e-6;
};

struct Classification {
  double degree_estimate = 0.0;
  double degree_residual = 0.0;
  bool is_homogeneous = false;
  bool is_reflexive = false;
  bool is_pre_mean = false;
  bool is_mean = false;
  bool is_harmonic = false;
  std::optional<CanonicalParams> canonical_params;
  std::vector<std::string> notes;
};

Classification classify_beta_type(const Generator& f, const AnalysisGrid& grid,
                                  const Tolerances& tol = {});

}  // namespace betalab

#pragma once

// Logarithmic homogeneity of Cauchy differences and the Heuvers
// characterization of logarithmic functions.

#include <span>

#include "betalab/function.hpp"
#include "betalab/grid.hpp"
#include "betalab/homogeneity.hpp"

namespace betalab {

struct CauchyDefectReport {
  double p_tested = 0.0;
  double max_defect = 0.0;  // max |C_g(tx,ty) − C_g(x,y) − p log t|
  Triple argmax{};
};

CauchyDefectReport log_homogeneity_defect(const RealFunction& g, double p,
                                          const AnalysisGrid& grid);

/// g(x) = c x + d − p log x together with C_g(x, y) = p log(xy / (x + y)) − d.
struct CauchyClosedForm {
  double c = 0.0;
  double d = 0.0;
  double p = 0.0;
  RealFunction g;

  double predicted_difference(double x, double y) const;
};

CauchyClosedForm cauchy_closed_form(double c, double d, double p);

struct DualityBridgeReport {
  double p = 0.0;
  double cauchy_defect = 0.0;    // C-side, log units, degree p
  double beta_log_defect = 0.0;  // B-side for exp ∘ g at degree −p, log units
  double beta_defect = 0.0;      // B-side, multiplicative
  bool cauchy_holds = false;
  bool beta_holds = false;
  bool agree = false;  // both sides measure the same defect
};

DualityBridgeReport duality_bridge(const RealFunction& g, double p,
                                   const AnalysisGrid& grid, double tol = 1e-10);

struct ResidualReport {
  double max_residual = 0.0;
  Pair witness{0.0, 0.0};
};

/// max |C_f(x, y) − f(1/x + 1/y)|
ResidualReport heuvers_residual(const RealFunction& f, std::span<const Pair> pairs);
/// Same residual through the literal form f(2 / H(x, y)).
ResidualReport heuvers_residual_via_harmonic(const RealFunction& f,
                                             std::span<const Pair> pairs);
/// max |f(xy) − f(x) − f(y)|
ResidualReport logarithmic_check(const RealFunction& f, std::span<const Pair> pairs);

}  // namespace betalab

#include "betalab/cauchy.hpp"

#include <cmath>
#include <vector>

#include "betalab/beta_type.hpp"
#include "betalab/error.hpp"
#include "betalab/kernels.hpp"
#include "betalab/means.hpp"

namespace betalab {
namespace {

template <class Residual>
ResidualReport max_residual(std::span<const Pair> pairs, Residual residual) {
  ResidualReport report;
  if (!pairs.empty()) report.witness = pairs.front();
  for (const auto& pair : pairs) {
    const double r = std::fabs(residual(pair.first, pair.second));
    if (r > report.max_residual || std::isnan(r)) {
      report.max_residual = r;
      report.witness = pair;
      if (std::isnan(r)) break;
    }
  }
  return report;
}

void require_pair(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw Error(ErrorKind::NonPositiveInput, "Cauchy checks need x, y > 0");
  }
}

}  // namespace

CauchyDefectReport log_homogeneity_defect(const RealFunction& g, double p,
                                          const AnalysisGrid& grid) {
  const auto& ts = grid.ts();
  std::vector<double> bx, by;
  for (double x : grid.xs()) {
    for (double y : grid.ys()) {
      bx.push_back(x);
      by.push_back(y);
    }
  }
  std::vector<double> base(bx.size());
  cauchy_difference_batch(g, bx, by, base);

  const std::size_t n = grid.triple_count();
  std::vector<Triple> triples;
  std::vector<double> tx, ty, log_t;
  triples.reserve(n);
  tx.reserve(n);
  ty.reserve(n);
  log_t.reserve(n);
  for (std::size_t j = 0; j < bx.size(); ++j) {
    for (double t : ts) {
      triples.push_back(Triple{bx[j], by[j], t});
      tx.push_back(t * bx[j]);
      ty.push_back(t * by[j]);
      log_t.push_back(std::log(t));
    }
  }
  std::vector<double> dilated(n);
  cauchy_difference_batch(g, tx, ty, dilated);
  std::vector<double> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = dilated[i] - base[i / ts.size()];

  const auto& k = kernels::active();
  std::vector<double> residual(n);
  k.sub_scaled(delta, p, log_t, residual);

  CauchyDefectReport report;
  report.p_tested = p;
  report.max_defect = k.max_abs(residual);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::fabs(residual[i]);
    if (r == report.max_defect || (std::isnan(r) && std::isnan(report.max_defect))) {
      report.argmax = triples[i];
      break;
    }
  }
  return report;
}

double CauchyClosedForm::predicted_difference(double x, double y) const {
  return p * std::log(x * y / (x + y)) - d;
}

CauchyClosedForm cauchy_closed_form(double c, double d, double p) {
  CauchyClosedForm form;
  form.c = c;
  form.d = d;
  form.p = p;
  form.g = RealFunction{"affine-log", [c, d, p](double x) {
                          return (c * x + d) - p * std::log(x);
                        }};
  return form;
}

DualityBridgeReport duality_bridge(const RealFunction& g, double p,
                                   const AnalysisGrid& grid, double tol) {
  DualityBridgeReport report;
  report.p = p;
  report.cauchy_defect = log_homogeneity_defect(g, p, grid).max_defect;
  // f = exp ∘ g, handled through its logarithm so exp(g) never materializes
  const auto f = Generator::from_log(g);
  const auto beta = homogeneity_defect(f, -p, grid);
  report.beta_log_defect = beta.max_log_defect;
  report.beta_defect = beta.max_defect;
  report.cauchy_holds = report.cauchy_defect <= tol;
  report.beta_holds = report.beta_defect <= tol;
  const double scale = std::max(1.0, std::fabs(report.cauchy_defect));
  report.agree = std::fabs(report.cauchy_defect - report.beta_log_defect) <= tol * scale &&
                 report.cauchy_holds == report.beta_holds;
  return report;
}

ResidualReport heuvers_residual(const RealFunction& f, std::span<const Pair> pairs) {
  return max_residual(pairs, [&f](double x, double y) {
    require_pair(x, y);
    return eval_cauchy_difference(f, x, y) - f(1.0 / x + 1.0 / y);
  });
}

ResidualReport heuvers_residual_via_harmonic(const RealFunction& f,
                                             std::span<const Pair> pairs) {
  return max_residual(pairs, [&f](double x, double y) {
    return eval_cauchy_difference(f, x, y) - f(2.0 / harmonic_mean(x, y));
  });
}

ResidualReport logarithmic_check(const RealFunction& f, std::span<const Pair> pairs) {
  return max_residual(pairs, [&f](double x, double y) {
    require_pair(x, y);
    return (f(x * y) - f(x)) - f(y);
  });
}

}  // namespace betalab

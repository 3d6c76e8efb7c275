#pragma once

// p-homogeneity of beta-type functions: defect measurement, degree
// estimation, and identification of canonical generators b · x^p · a^x.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "betalab/generator.hpp"
#include "betalab/grid.hpp"

namespace betalab {

struct Triple {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

/// Worst-case multiplicative violation of B_f(tx, ty) = t^p B_f(x, y).
struct DefectReport {
  double p_tested = 0.0;
  double max_defect = 0.0;      // max |B_f(tx,ty) / (t^p B_f(x,y)) − 1|
  double mean_defect = 0.0;
  double max_log_defect = 0.0;  // same quantity before expm1
  Triple argmax{};
};

struct DegreeEstimate {
  double p_hat = 0.0;
  double residual = 0.0;  // RMS of the log-ratio regression
  std::size_t triples_used = 0;
};

struct FitReport {
  double b_hat = 0.0;
  double p_hat = 0.0;
  double a_hat = 0.0;
  double residual_rms = 0.0;
  double residual_max = 0.0;
  double condition_estimate = 0.0;
  std::vector<Pair> per_point;  // (x, log f(x) − model)
};

struct LambdaReport {
  double c_hat = 0.0;
  double d_hat = 0.0;
  double max_deviation = 0.0;
  double reference_x = 1.0;
  double b_implied = 0.0;  // f(r) · r^(−p) · e^d
  std::vector<Pair> lambda;  // (x, λ(x))
};

/// Log-ratios log B_f(tx, ty) − log B_f(x, y) for every grid triple,
/// computed once and reused across tested degrees.
class HomogeneityProbe {
 public:
  HomogeneityProbe(const Generator& f, const AnalysisGrid& grid);

  /// Triples are ordered x outer, then y, then t.
  std::size_t size() const noexcept { return triples_.size(); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  const std::vector<double>& log_ratios() const noexcept { return delta_; }
  const std::vector<double>& log_ts() const noexcept { return log_t_; }

  DefectReport defect(double p) const;
  DegreeEstimate estimate_degree() const;

 private:
  std::vector<Triple> triples_;
  std::vector<double> delta_;
  std::vector<double> log_t_;
};

DefectReport homogeneity_defect(const Generator& f, double p,
                                const AnalysisGrid& grid);

/// Least-squares slope of the log-ratio against log t (no intercept) over
/// triples with t ≠ 1. Throws DegenerateGrid with fewer than 2 distinct t ≠ 1.
DegreeEstimate estimate_degree(const Generator& f, const AnalysisGrid& grid);

/// Fits log f(x) = log b + p log x + x log a by column-pivoted Householder QR.
FitReport fit_generator(const Generator& samples);
FitReport fit_generator(std::span<const Sample> samples);

/// λ(x) = log f(x) − log f(r) − p log(x / r) and its affine fit c x + d.
/// The reference r is `reference` if given (must be tabulated), else x = 1
/// when tabulated, else the lower median abscissa.
LambdaReport lambda_diagnostic(const Generator& samples, double p,
                               std::optional<double> reference = std::nullopt);

/// max over grid pairs of |φ_t(x+y) / (φ_t(x) φ_t(y)) − 1| with
/// φ_t(x) = f(tx) / (t^p f(x)).
double exponential_cauchy_check(const Generator& f, double t,
                                const AnalysisGrid& grid, double p);

}  // namespace betalab

#pragma once

// Beta-type functions B_f(x, y) = f(x) f(y) / f(x + y) and Cauchy differences
// C_g(x, y) = g(x + y) - g(x) - g(y), linked by B_f = exp(-C_{log f}).

#include <span>

#include "betalab/function.hpp"
#include "betalab/generator.hpp"
#include "betalab/grid.hpp"

namespace betalab {

/// log B_f(x, y). Canonical generators are evaluated per feature of the log
/// model (1, log x, x), so the a^x factor contributes an exact zero.
double log_beta_type(const Generator& f, double x, double y);

/// B_f(x, y); throws Overflow when the result leaves double range.
double eval_beta_type(const Generator& f, double x, double y);

/// Batched log_beta_type over (xs[i], ys[i]). Bit-identical to the scalar form.
void log_beta_type_batch(const Generator& f, std::span<const double> xs,
                         std::span<const double> ys, std::span<double> out);

/// b · (xy / (x + y))^p
double canonical_beta_value(double b, double p, double x, double y);

double eval_cauchy_difference(const RealFunction& g, double x, double y);
double eval_cauchy_difference(const LogGenerator& g, double x, double y);

/// Batched Cauchy difference over (xs[i], ys[i]).
void cauchy_difference_batch(const RealFunction& g, std::span<const double> xs,
                             std::span<const double> ys, std::span<double> out);

class BetaTypeEval {
 public:
  explicit BetaTypeEval(Generator f) : f_(std::move(f)) {}

  double operator()(double x, double y) const { return eval_beta_type(f_, x, y); }
  double log(double x, double y) const { return log_beta_type(f_, x, y); }
  const Generator& generator() const noexcept { return f_; }

 private:
  Generator f_;
};

class CauchyDifferenceEval {
 public:
  explicit CauchyDifferenceEval(RealFunction g) : g_(std::move(g)) {}

  double operator()(double x, double y) const {
    return eval_cauchy_difference(g_, x, y);
  }

 private:
  RealFunction g_;
};

/// max over pairs of |B_f(x, y) · exp(C_{log f}(x, y)) − 1|.
double duality_check(const Generator& f, std::span<const Pair> pairs);
double duality_check(const Generator& f, const AnalysisGrid& grid);

}  // namespace betalab

#include "betalab/beta_type.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "betalab/error.hpp"
#include "betalab/kernels.hpp"

namespace betalab {
namespace {

void require_positive_pair(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    std::ostringstream os;
    os << "beta-type arguments must be finite positive reals, got (" << x << ", "
       << y << ")";
    throw Error(ErrorKind::NonPositiveInput, os.str());
  }
}

}  // namespace

double log_beta_type(const Generator& f, double x, double y) {
  require_positive_pair(x, y);
  const double s = x + y;
  if (const auto params = f.canonical_params()) {
    const double feature_log = (std::log(x) + std::log(y)) - std::log(s);
    const double feature_lin = (x + y) - s;
    return (std::log(params->b) + params->p * feature_log) +
           std::log(params->a) * feature_lin;
  }
  return (f.log_eval(x) + f.log_eval(y)) - f.log_eval(s);
}

double eval_beta_type(const Generator& f, double x, double y) {
  const double lb = log_beta_type(f, x, y);
  const double value = std::exp(lb);
  if (!std::isfinite(value) || value == 0.0) {
    std::ostringstream os;
    os << "B_f(" << x << ", " << y << ") = exp(" << lb
       << ") is outside double range";
    throw Error(ErrorKind::Overflow, os.str());
  }
  return value;
}

void log_beta_type_batch(const Generator& f, std::span<const double> xs,
                         std::span<const double> ys, std::span<double> out) {
  const std::size_t n = out.size();
  if (xs.size() != n || ys.size() != n) {
    throw Error(ErrorKind::InvalidGrid, "log_beta_type_batch: length mismatch");
  }
  const auto& k = kernels::active();
  std::vector<double> sums(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_positive_pair(xs[i], ys[i]);
    sums[i] = xs[i] + ys[i];
  }
  std::vector<double> lx(n), ly(n), ls(n);
  if (const auto params = f.canonical_params()) {
    for (std::size_t i = 0; i < n; ++i) {
      lx[i] = std::log(xs[i]);
      ly[i] = std::log(ys[i]);
      ls[i] = std::log(sums[i]);
    }
    std::vector<double> feature_log(n), feature_lin(n);
    k.add_sub(lx, ly, ls, feature_log);
    k.add_sub(xs, ys, sums, feature_lin);
    k.affine2(std::log(params->b), params->p, feature_log, std::log(params->a),
              feature_lin, out);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = f.log_eval(xs[i]);
    ly[i] = f.log_eval(ys[i]);
    ls[i] = f.log_eval(sums[i]);
  }
  k.add_sub(lx, ly, ls, out);
}

double canonical_beta_value(double b, double p, double x, double y) {
  if (!(b > 0.0)) {
    throw Error(ErrorKind::InvalidGenerator, "canonical_beta_value needs b > 0");
  }
  require_positive_pair(x, y);
  return b * std::pow(x * y / (x + y), p);
}

double eval_cauchy_difference(const RealFunction& g, double x, double y) {
  require_positive_pair(x, y);
  return (g(x + y) - g(x)) - g(y);
}

double eval_cauchy_difference(const LogGenerator& g, double x, double y) {
  require_positive_pair(x, y);
  return (g(x + y) - g(x)) - g(y);
}

void cauchy_difference_batch(const RealFunction& g, std::span<const double> xs,
                             std::span<const double> ys, std::span<double> out) {
  const std::size_t n = out.size();
  if (xs.size() != n || ys.size() != n) {
    throw Error(ErrorKind::InvalidGrid, "cauchy_difference_batch: length mismatch");
  }
  std::vector<double> gx(n), gy(n), gs(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_positive_pair(xs[i], ys[i]);
    gs[i] = g(xs[i] + ys[i]);
    gx[i] = g(xs[i]);
    gy[i] = g(ys[i]);
  }
  kernels::active().sub_sub(gs, gx, gy, out);
}

double duality_check(const Generator& f, std::span<const Pair> pairs) {
  const LogGenerator g{f};
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const double b = eval_beta_type(f, x, y);
    const double c = eval_cauchy_difference(g, x, y);
    const double gap = std::fabs(b * std::exp(c) - 1.0);
    if (std::isnan(gap)) return gap;
    if (gap > worst) worst = gap;
  }
  return worst;
}

double duality_check(const Generator& f, const AnalysisGrid& grid) {
  const auto pairs = grid.pairs();
  return duality_check(f, pairs);
}

}  // namespace betalab

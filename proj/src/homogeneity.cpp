#include "betalab/homogeneity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "betalab/beta_type.hpp"
#include "betalab/error.hpp"
#include "betalab/kernels.hpp"

namespace betalab {
namespace {

// Designs worse than this are treated as collinear.
constexpr double kMaxCondition = 1e12;

std::vector<double> log_beta_pairs(const Generator& f, std::span<const double> xs,
                                   std::span<const double> ys) {
  std::vector<double> out(xs.size());
  try {
    log_beta_type_batch(f, xs, ys, out);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SampleMiss) {
      throw Error(ErrorKind::SampleMiss,
                  std::string(e.what()) +
                      "; dilated grids need an evaluable generator, fit "
                      "tabulated data with fit_generator instead");
    }
    throw;
  }
  return out;
}

}  // namespace

HomogeneityProbe::HomogeneityProbe(const Generator& f, const AnalysisGrid& grid) {
  const auto& xs = grid.xs();
  const auto& ys = grid.ys();
  const auto& ts = grid.ts();

  std::vector<double> base_x, base_y;
  base_x.reserve(xs.size() * ys.size());
  base_y.reserve(xs.size() * ys.size());
  for (double x : xs) {
    for (double y : ys) {
      base_x.push_back(x);
      base_y.push_back(y);
    }
  }
  const auto base = log_beta_pairs(f, base_x, base_y);

  const std::size_t n = grid.triple_count();
  triples_.reserve(n);
  std::vector<double> tx, ty;
  tx.reserve(n);
  ty.reserve(n);
  log_t_.reserve(n);
  for (std::size_t j = 0; j < base_x.size(); ++j) {
    for (double t : ts) {
      triples_.push_back(Triple{base_x[j], base_y[j], t});
      tx.push_back(t * base_x[j]);
      ty.push_back(t * base_y[j]);
      log_t_.push_back(std::log(t));
    }
  }
  const auto dilated = log_beta_pairs(f, tx, ty);

  delta_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    delta_[i] = dilated[i] - base[i / ts.size()];
  }
}

DefectReport HomogeneityProbe::defect(double p) const {
  const auto& k = kernels::active();
  std::vector<double> residual(delta_.size());
  k.sub_scaled(delta_, p, log_t_, residual);

  DefectReport report;
  report.p_tested = p;
  report.max_log_defect = k.max_abs(residual);
  double sum = 0.0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    const double d = std::fabs(std::expm1(residual[i]));
    if (std::isnan(d)) {
      report.max_defect = report.mean_defect = d;
      report.argmax = triples_[i];
      return report;
    }
    if (d > report.max_defect) {
      report.max_defect = d;
      argmax = i;
    }
    sum += d;
  }
  if (!residual.empty()) {
    report.mean_defect = sum / static_cast<double>(residual.size());
    report.argmax = triples_[argmax];
  }
  return report;
}

DegreeEstimate HomogeneityProbe::estimate_degree() const {
  std::set<double> distinct_t;
  for (const auto& tr : triples_) {
    if (tr.t != 1.0) distinct_t.insert(tr.t);
  }
  if (distinct_t.size() < 2) {
    throw Error(ErrorKind::DegenerateGrid,
                "degree estimation needs at least 2 distinct t != 1");
  }
  double num = 0.0;
  double den = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (log_t_[i] == 0.0) continue;
    num += delta_[i] * log_t_[i];
    den += log_t_[i] * log_t_[i];
    ++used;
  }
  DegreeEstimate est;
  est.p_hat = num / den;
  est.triples_used = used;
  std::vector<double> residual(delta_.size());
  kernels::active().sub_scaled(delta_, est.p_hat, log_t_, residual);
  double ss = 0.0;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (log_t_[i] == 0.0) continue;
    ss += residual[i] * residual[i];
  }
  est.residual = std::sqrt(ss / static_cast<double>(used));
  return est;
}

DefectReport homogeneity_defect(const Generator& f, double p,
                                const AnalysisGrid& grid) {
  return HomogeneityProbe(f, grid).defect(p);
}

DegreeEstimate estimate_degree(const Generator& f, const AnalysisGrid& grid) {
  return HomogeneityProbe(f, grid).estimate_degree();
}

FitReport fit_generator(const Generator& samples) {
  if (!samples.is_sampled()) {
    throw Error(ErrorKind::InvalidGenerator,
                "fit_generator expects a sampled generator, got " +
                    samples.describe());
  }
  return fit_generator(samples.samples());
}

FitReport fit_generator(std::span<const Sample> input) {
  std::vector<Sample> samples(input.begin(), input.end());
  for (const auto& s : samples) {
    if (!(s.x > 0.0) || !(s.fx > 0.0)) {
      std::ostringstream os;
      os << "fit needs positive samples, got (" << s.x << ", " << s.fx << ")";
      throw Error(ErrorKind::NonPositiveSample, os.str());
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& l, const Sample& r) { return l.x < r.x; });
  std::set<double> distinct;
  for (const auto& s : samples) distinct.insert(s.x);
  if (distinct.size() < 3) {
    throw Error(ErrorKind::RankDeficient,
                "fit needs at least 3 distinct abscissae, got " +
                    std::to_string(distinct.size()));
  }

  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd target(n);
  std::vector<double> xs(samples.size()), log_xs(samples.size()), log_fx(samples.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    xs[i] = s.x;
    log_xs[i] = std::log(s.x);
    log_fx[i] = std::log(s.fx);
    design(i, 0) = 1.0;
    design(i, 1) = log_xs[i];
    design(i, 2) = s.x;
    target(i) = log_fx[i];
  }

  // Equilibrate columns so the pivoting and the condition estimate are not
  // driven by the scale of x.
  const Eigen::VectorXd scale = design.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < 3; ++j) {
    if (!(scale(j) > 0.0)) {
      throw Error(ErrorKind::RankDeficient, "fit design has a zero column");
    }
  }
  const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
  const auto& sv = svd.singularValues();
  const double condition = sv(2) > 0.0 ? sv(0) / sv(2) : INFINITY;

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  if (qr.rank() < 3 || !(condition <= kMaxCondition)) {
    std::ostringstream os;
    os << "fit design (1, log x, x) is numerically rank deficient (rank "
       << qr.rank() << ", condition " << condition << ")";
    throw Error(ErrorKind::RankDeficient, os.str());
  }
  const Eigen::VectorXd theta = qr.solve(target).cwiseQuotient(scale);

  std::vector<double> model(samples.size()), residual(samples.size());
  kernels::active().affine2(theta(0), theta(1), log_xs, theta(2), xs, model);
  double ss = 0.0;
  FitReport report;
  report.per_point.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    residual[i] = log_fx[i] - model[i];
    ss += residual[i] * residual[i];
    report.per_point.emplace_back(xs[i], residual[i]);
  }
  report.b_hat = std::exp(theta(0));
  report.p_hat = theta(1);
  report.a_hat = std::exp(theta(2));
  report.residual_rms = std::sqrt(ss / static_cast<double>(samples.size()));
  report.residual_max = kernels::active().max_abs(residual);
  report.condition_estimate = condition;
  return report;
}

LambdaReport lambda_diagnostic(const Generator& f, double p,
                               std::optional<double> reference) {
  if (!f.is_sampled()) {
    throw Error(ErrorKind::InvalidGenerator,
                "lambda_diagnostic expects a sampled generator, got " +
                    f.describe());
  }
  const auto samples = f.samples();
  double ref = 0.0;
  const auto tabulated = [&](double x) {
    return std::any_of(samples.begin(), samples.end(),
                       [x](const Sample& s) { return s.x == x; });
  };
  if (reference) {
    if (!tabulated(*reference)) {
      std::ostringstream os;
      os << "reference abscissa " << *reference << " is not tabulated";
      throw Error(ErrorKind::MissingReference, os.str());
    }
    ref = *reference;
  } else if (tabulated(1.0)) {
    ref = 1.0;
  } else {
    ref = samples[(samples.size() - 1) / 2].x;
  }

  const double log_f_ref = f.log_eval(ref);
  const double log_ref = std::log(ref);
  LambdaReport report;
  report.reference_x = ref;
  report.lambda.reserve(samples.size());
  double mean_x = 0.0;
  double mean_l = 0.0;
  for (const auto& s : samples) {
    const double l = (std::log(s.fx) - log_f_ref) - p * (std::log(s.x) - log_ref);
    report.lambda.emplace_back(s.x, l);
    mean_x += s.x;
    mean_l += l;
  }
  const auto n = static_cast<double>(samples.size());
  mean_x /= n;
  mean_l /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [x, l] : report.lambda) {
    sxy += (x - mean_x) * (l - mean_l);
    sxx += (x - mean_x) * (x - mean_x);
  }
  report.c_hat = sxy / sxx;
  report.d_hat = mean_l - report.c_hat * mean_x;
  for (const auto& [x, l] : report.lambda) {
    report.max_deviation =
        std::max(report.max_deviation, std::fabs(l - (report.c_hat * x + report.d_hat)));
  }
  report.b_implied = std::exp((log_f_ref - p * log_ref) + report.d_hat);
  return report;
}

double exponential_cauchy_check(const Generator& f, double t,
                                const AnalysisGrid& grid, double p) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::NonPositiveInput, "dilation t must be positive");
  }
  const double p_log_t = p * std::log(t);
  const auto log_phi = [&](double z) {
    return (f.log_eval(t * z) - p_log_t) - f.log_eval(z);
  };
  double worst = 0.0;
  for (double x : grid.xs()) {
    for (double y : grid.ys()) {
      const double r = (log_phi(x + y) - log_phi(x)) - log_phi(y);
      const double d = std::fabs(std::expm1(r));
      if (std::isnan(d)) return d;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

}  // namespace betalab

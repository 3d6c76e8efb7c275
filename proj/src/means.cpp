#include "betalab/means.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "betalab/beta_type.hpp"
#include "betalab/error.hpp"
#include "betalab/homogeneity.hpp"

namespace betalab {

double harmonic_mean(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw Error(ErrorKind::NonPositiveInput, "harmonic_mean needs x, y > 0");
  }
  return 2.0 * x * y / (x + y);
}

BivariateFunction harmonic_mean_function() {
  return BivariateFunction{"harmonic", [](double x, double y) { return harmonic_mean(x, y); }};
}

BivariateFunction beta_type_function(const Generator& f) {
  return BivariateFunction{"B[" + f.describe() + "]",
                           [f](double x, double y) { return eval_beta_type(f, x, y); }};
}

ReflexivityReport check_reflexive(const BivariateFunction& m,
                                  std::span<const double> probes) {
  if (probes.empty()) {
    throw Error(ErrorKind::InvalidGrid, "check_reflexive needs at least one probe");
  }
  ReflexivityReport report{0.0, probes.front()};
  for (double x : probes) {
    double value = 0.0;
    try {
      value = m(x, x);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "reflexivity probe x=" << x << ": " << e.what();
      throw Error(e.kind(), os.str());
    }
    const double dev = std::fabs(value - x);
    if (dev > report.max_deviation || std::isnan(dev)) {
      report.max_deviation = dev;
      report.witness = x;
      if (std::isnan(dev)) break;
    }
  }
  return report;
}

std::vector<MeanViolation> check_mean_property(const BivariateFunction& m,
                                               std::span<const Pair> pairs,
                                               double rel_tol) {
  std::vector<MeanViolation> out;
  for (const auto& [x, y] : pairs) {
    const double value = m(x, y);
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    if (!(value >= lo * (1.0 - rel_tol) && value <= hi * (1.0 + rel_tol))) {
      out.push_back(MeanViolation{x, y, value});
    }
  }
  return out;
}

PreMeanReport check_pre_mean(const BivariateFunction& m,
                             std::span<const Pair> pairs, double reflexive_tol) {
  std::set<double> diagonal;
  for (const auto& [x, y] : pairs) {
    diagonal.insert(x);
    diagonal.insert(y);
  }
  const std::vector<double> probes(diagonal.begin(), diagonal.end());
  PreMeanReport report;
  if (probes.empty()) return report;
  report.reflexivity = check_reflexive(m, probes);
  for (const auto& [x, y] : pairs) {
    const double value = m(x, y);
    if (!(value > 0.0) || !std::isfinite(value)) {
      report.range_violations.push_back(MeanViolation{x, y, value});
    }
  }
  report.is_pre_mean = report.reflexivity.max_deviation <= reflexive_tol &&
                       report.range_violations.empty();
  return report;
}

namespace {

std::string format(const char* label, double value) {
  std::ostringstream os;
  os.precision(6);
  os << label << value;
  return os.str();
}

}  // namespace

Classification classify_beta_type(const Generator& f, const AnalysisGrid& grid,
                                  const Tolerances& tol) {
  Classification c;
  std::optional<Generator> target;

  if (f.is_sampled()) {
    try {
      const auto fit = fit_generator(f);
      c.degree_estimate = fit.p_hat;
      c.degree_residual = fit.residual_rms;
      if (fit.residual_rms > tol.identity) {
        c.notes.push_back(format(
            "samples are not of the form b*x^p*a^x; fit residual_rms=",
            fit.residual_rms));
        return c;
      }
      c.canonical_params = CanonicalParams{fit.b_hat, fit.p_hat, fit.a_hat};
      target = Generator::canonical(fit.b_hat, fit.p_hat, fit.a_hat);
      c.notes.push_back("classified through the fitted canonical generator");
    } catch (const Error& e) {
      c.notes.push_back(std::string("fit failed: ") + e.what());
      return c;
    }
  } else {
    target = f;
  }

  try {
    const HomogeneityProbe probe(*target, grid);
    const auto est = probe.estimate_degree();
    const auto defect = probe.defect(est.p_hat);
    if (!f.is_sampled()) {
      c.degree_estimate = est.p_hat;
      c.degree_residual = est.residual;
    }
    c.is_homogeneous = defect.max_defect <= tol.identity;
    if (!c.is_homogeneous) {
      c.notes.push_back(format("no consistent homogeneity degree; defect at p_hat=",
                               defect.max_defect));
    }
  } catch (const Error& e) {
    c.notes.push_back(std::string("homogeneity analysis failed: ") + e.what());
  }

  if (!c.canonical_params) {
    if (auto params = target->canonical_params()) {
      c.canonical_params = params;
    } else if (c.is_homogeneous) {
      try {
        std::vector<Sample> samples;
        for (double x : grid.xs()) samples.push_back(Sample{x, target->eval(x)});
        const auto fit = fit_generator(samples);
        if (fit.residual_rms <= tol.identity) {
          c.canonical_params = CanonicalParams{fit.b_hat, fit.p_hat, fit.a_hat};
        }
      } catch (const Error& e) {
        c.notes.push_back(std::string("parameter fit failed: ") + e.what());
      }
    }
  }

  try {
    const auto m = beta_type_function(*target);
    std::set<double> probe_set(grid.xs().begin(), grid.xs().end());
    probe_set.insert(grid.ys().begin(), grid.ys().end());
    probe_set.insert(1.0);
    probe_set.insert(2.0);
    const std::vector<double> probes(probe_set.begin(), probe_set.end());
    const auto refl = check_reflexive(m, probes);
    c.is_reflexive = refl.max_deviation <= tol.identity;
    if (!c.is_reflexive) {
      std::ostringstream os;
      os.precision(17);
      os << "not reflexive: B_f(" << refl.witness << ", " << refl.witness
         << ") deviates by " << refl.max_deviation;
      c.notes.push_back(os.str());
    }
    const auto pairs = grid.pairs();
    const auto pre = check_pre_mean(m, pairs, tol.identity);
    c.is_pre_mean = c.is_reflexive && pre.is_pre_mean;
    c.is_mean = c.is_pre_mean && check_mean_property(m, pairs, tol.identity).empty();
    if (c.is_pre_mean) {
      c.notes.push_back("range condition of the pre-mean checked on grid samples only");
    }
  } catch (const Error& e) {
    c.notes.push_back(std::string("mean predicates failed: ") + e.what());
  }

  if (c.is_homogeneous && c.canonical_params && c.is_mean &&
      std::fabs(c.canonical_params->p - 1.0) <= tol.classify &&
      std::fabs(c.canonical_params->b - 2.0) <= tol.classify) {
    c.is_harmonic = true;
    c.notes.push_back(
        "coincides with the harmonic mean 2xy/(x+y); among homogeneous "
        "beta-type functions it is also the only quasi-arithmetic mean");
  }
  if (c.is_reflexive && c.is_homogeneous &&
      std::fabs(c.degree_estimate - 1.0) > tol.classify) {
    c.notes.push_back(format(
        "inconsistent: reflexive and homogeneous but degree estimate is ",
        c.degree_estimate));
  }
  return c;
}

}  // namespace betalab

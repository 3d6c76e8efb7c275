#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "betalab/beta_type.hpp"
#include "betalab/cauchy.hpp"
#include "betalab/homogeneity.hpp"
#include "betalab/error.hpp"
#include "betalab/special.hpp"

using namespace betalab;

namespace {

const AnalysisGrid& default_grid() {
  static const AnalysisGrid grid = AnalysisGrid::default_grid();
  return grid;
}

RealFunction klog(double k) {
  return {"klog", [k](double x) { return k * std::log(x); }};
}

struct BatteryMember {
  RealFunction f;
  double p;  // degree for the Cauchy-side law
  bool logarithmic;
};

std::vector<BatteryMember> battery() {
  return {
      {klog(1.0), -1.0, true},
      {klog(2.0), -2.0, true},
      {{"x", [](double x) { return x; }}, 0.0, false},
      {{"x^2", [](double x) { return x * x; }}, 2.0, false},
      {{"exp", [](double x) { return std::exp(x); }}, 1.0, false},
      {{"lgamma", [](double x) { return special::log_gamma(x); }}, 1.0, false},
  };
}

}  // namespace

TEST_CASE("log_homogeneity_defect examples") {
  const auto form = cauchy_closed_form(1.5, -0.7, 2.0);
  CHECK(log_homogeneity_defect(form.g, 2.0, default_grid()).max_defect <= 1e-12);

  const RealFunction linear{"3x", [](double x) { return 3.0 * x; }};
  CHECK(log_homogeneity_defect(linear, 0.0, default_grid()).max_defect <= 1e-12);

  const RealFunction lg{"lgamma", [](double x) { return special::log_gamma(x); }};
  const auto grid = AnalysisGrid::make(default_grid().xs(), default_grid().ys(), {1.0, 2.0, 5.0});
  for (double p : {-2.0, 0.0, 1.0, 3.0}) {
    CHECK(log_homogeneity_defect(lg, p, grid).max_defect > 0.01);
  }
}

TEST_CASE("log_homogeneity_defect matches a direct evaluation") {
  const RealFunction g{"x^2", [](double x) { return x * x; }};
  const auto grid = AnalysisGrid::make({0.5, 1, 2}, {1, 3, 4}, {0.5, 1, 3});
  const auto r = log_homogeneity_defect(g, 1.0, grid);
  double expected = 0.0;
  for (double x : grid.xs())
    for (double y : grid.ys())
      for (double t : grid.ts()) {
        // C_g(x, y) = 2xy for g = x²
        const double d = std::fabs(2 * t * x * t * y - 2 * x * y - std::log(t));
        expected = std::max(expected, d);
      }
  CHECK(r.max_defect == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.p_tested == 1.0);
  const double at = std::fabs(2 * r.argmax.t * r.argmax.x * r.argmax.t * r.argmax.y -
                              2 * r.argmax.x * r.argmax.y - std::log(r.argmax.t));
  CHECK(at == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cauchy_closed_form examples") {
  const auto a = cauchy_closed_form(0, 0, 1);
  CHECK(a.predicted_difference(1, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  CHECK(eval_cauchy_difference(a.g, 1, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  // three-term evaluation of g(x) = −log x
  CHECK(eval_cauchy_difference(a.g, 1, 1) == (-std::log(2.0) + 0.0) + 0.0);

  const auto b = cauchy_closed_form(5, 3, 0);
  CHECK(b.g(2.0) == 13.0);
  for (const auto& [x, y] : default_grid().pairs()) {
    CHECK(b.predicted_difference(x, y) == -3.0);
    CHECK(eval_cauchy_difference(b.g, x, y) == doctest::Approx(-3.0).epsilon(1e-12));
  }

  const auto t1 = AnalysisGrid::make({1, 2, 3}, {1, 2, 3}, {1, 1.5, 2});
  const auto c = cauchy_closed_form(-2, 4, 3.5);
  std::vector<double> xs, ys, base, same;
  for (const auto& [x, y] : t1.pairs()) {
    xs.push_back(x);
    ys.push_back(y);
  }
  base.resize(xs.size());
  same.resize(xs.size());
  cauchy_difference_batch(c.g, xs, ys, base);
  cauchy_difference_batch(c.g, xs, ys, same);
  for (std::size_t i = 0; i < base.size(); ++i) CHECK(base[i] - same[i] - 3.5 * std::log(1.0) == 0.0);
}

TEST_CASE("closed form agrees with direct evaluation for random parameters") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double c = u(rng), d = u(rng), p = u(rng);
    const auto form = cauchy_closed_form(c, d, p);
    double worst = 0.0;
    for (const auto& [x, y] : default_grid().pairs()) {
      const double direct = eval_cauchy_difference(form.g, x, y);
      worst = std::max(worst, std::fabs(direct - form.predicted_difference(x, y)));
    }
    CHECK(worst <= 1e-11);
    CHECK(log_homogeneity_defect(form.g, p, default_grid()).max_defect <= 1e-11);
  }
}

TEST_CASE("opposite log sign breaks the law") {
  // g(x) = cx + d + p log x obeys the law at −p, not at p
  const RealFunction plus{"plus", [](double x) { return (2 * x + 1) + 1.5 * std::log(x); }};
  CHECK(log_homogeneity_defect(plus, 1.5, default_grid()).max_defect > 1.0);
  CHECK(log_homogeneity_defect(plus, -1.5, default_grid()).max_defect <= 1e-12);
}

TEST_CASE("duality_bridge examples") {
  SUBCASE("x - log x") {
    const RealFunction g{"x - log x", [](double x) { return x - std::log(x); }};
    const auto r = duality_bridge(g, 1.0, default_grid());
    CHECK(r.cauchy_defect <= 1e-10);
    CHECK(r.beta_defect <= 1e-10);
    CHECK(r.cauchy_holds);
    CHECK(r.beta_holds);
    CHECK(r.agree);
    CHECK(r.p == 1.0);
    CHECK(homogeneity_defect(Generator::from_log(g), -1.0, default_grid()).max_defect <= 1e-10);
  }
  SUBCASE("log of the harmonic generator") {
    const auto f = Generator::canonical(2, 1, 1);
    const RealFunction g{"log f", [f](double x) { return f.log_eval(x); }};
    const auto r = duality_bridge(g, -1.0, default_grid());
    CHECK(r.cauchy_holds);
    CHECK(r.beta_holds);
    CHECK(r.agree);
    CHECK(homogeneity_defect(f, 1.0, default_grid()).max_defect <= 1e-12);
  }
  SUBCASE("zero") {
    const RealFunction g{"0", [](double) { return 0.0; }};
    const auto r = duality_bridge(g, 0.0, default_grid());
    CHECK(r.cauchy_defect == 0.0);
    CHECK(r.beta_defect == 0.0);
    CHECK(r.beta_log_defect == 0.0);
    CHECK(r.agree);
  }
}

TEST_CASE("heuvers_residual examples") {
  const auto pairs = default_grid().pairs();
  CHECK(heuvers_residual(klog(1.0), pairs).max_residual <= 1e-12);
  for (double k : {-3.0, 0.5, 2.0, 7.0}) {
    CHECK(heuvers_residual(klog(k), pairs).max_residual <= 1e-12 * std::max(1.0, std::fabs(k)));
  }
  const RealFunction id{"x", [](double x) { return x; }};
  const std::vector<Pair> one{{1.0, 1.0}};
  const auto r = heuvers_residual(id, one);
  CHECK(r.max_residual == 2.0);
  CHECK(r.witness == Pair{1.0, 1.0});
  const std::vector<Pair> bad{{0.0, 1.0}};
  CHECK_THROWS_AS(heuvers_residual(id, bad), Error);
}

TEST_CASE("logarithmic_check examples") {
  const auto pairs = default_grid().pairs();
  CHECK(logarithmic_check(klog(1.0), pairs).max_residual <= 1e-13);
  CHECK(logarithmic_check(klog(3.0), pairs).max_residual <= 1e-12);
  const RealFunction id{"x", [](double x) { return x; }};
  const std::vector<Pair> p23{{2.0, 3.0}};
  CHECK(logarithmic_check(id, p23).max_residual == 1.0);
}

TEST_CASE("heuvers and logarithmic checks agree on the battery") {
  const auto pairs = default_grid().pairs();
  for (const auto& m : battery()) {
    INFO(m.f.name);
    const bool heuvers = heuvers_residual(m.f, pairs).max_residual <= 1e-10;
    const bool logarithmic = logarithmic_check(m.f, pairs).max_residual <= 1e-10;
    CHECK(heuvers == m.logarithmic);
    CHECK(logarithmic == m.logarithmic);
  }
}

TEST_CASE("duality bridge agrees on the battery") {
  for (const auto& m : battery()) {
    INFO(m.f.name);
    const auto r = duality_bridge(m.f, m.p, default_grid());
    CHECK(r.cauchy_holds == r.beta_holds);
    CHECK(r.agree);
  }
}

TEST_CASE("heuvers via 2/H matches the reciprocal form") {
  const auto pairs = default_grid().pairs();
  for (const auto& m : battery()) {
    if (m.f.name == "exp") continue;
    INFO(m.f.name);
    const double a = heuvers_residual(m.f, pairs).max_residual;
    const double b = heuvers_residual_via_harmonic(m.f, pairs).max_residual;
    CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
  }
}

TEST_CASE("constant shifts translate the difference and keep the defect") {
  const RealFunction g{"x^2", [](double x) { return x * x; }};
  const double k = 4.25;
  const RealFunction gk{"x^2+k", [k](double x) { return x * x + k; }};
  for (const auto& [x, y] : default_grid().pairs()) {
    CHECK(eval_cauchy_difference(gk, x, y) ==
          doctest::Approx(eval_cauchy_difference(g, x, y) - k).epsilon(1e-12));
  }
  for (double p : {-1.0, 0.0, 2.0}) {
    const double a = log_homogeneity_defect(g, p, default_grid()).max_defect;
    const double b = log_homogeneity_defect(gk, p, default_grid()).max_defect;
    CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, a));
  }
}

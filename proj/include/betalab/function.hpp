#pragma once

#include <functional>
#include <string>
#include <utility>

namespace betalab {

/// Named real-valued function on (0, ∞).
struct RealFunction {
  std::string name;
  std::function<double(double)> fn;

  double operator()(double x) const { return fn(x); }
};

/// Named function of two positive arguments.
struct BivariateFunction {
  std::string name;
  std::function<double(double, double)> fn;

  double operator()(double x, double y) const { return fn(x, y); }
};

using Pair = std::pair<double, double>;

}  // namespace betalab

#include "betalab/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "betalab/error.hpp"

namespace betalab::special {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << what << ": argument must be a finite positive real, got " << x;
    throw Error(ErrorKind::NonPositiveInput, os.str());
  }
}

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
  return lanczos_log_gamma(x);
}

double gamma(double x) {
  const double lg = log_gamma(x);
  const double value = std::exp(lg);
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "gamma(" << x << ") overflows double precision (log value " << lg
       << "); use log_gamma";
    throw Error(ErrorKind::Overflow, os.str());
  }
  return value;
}

double log_euler_beta(double x, double y) {
  require_positive(x, "euler_beta");
  require_positive(y, "euler_beta");
  return (log_gamma(x) + log_gamma(y)) - log_gamma(x + y);
}

double euler_beta(double x, double y) { return std::exp(log_euler_beta(x, y)); }

}  // namespace betalab::special

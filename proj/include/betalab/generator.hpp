#pragma once

// Generators f : (0, ∞) → (0, ∞) of beta-type functions.

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "betalab/function.hpp"

namespace betalab {

struct CanonicalParams {
  double b = 1.0;
  double p = 0.0;
  double a = 1.0;
};

struct Sample {
  double x;
  double fx;
};

class Generator {
 public:
  /// f(x) = b · x^p · a^x
  struct Canonical {
    double b;
    double p;
    double a;
  };
  /// f = Γ
  struct Gamma {};
  /// f(x) = 2x · a^x
  struct Harmonic {
    double a;
  };
  /// Tabulated values; evaluation only at the stored abscissae.
  struct Sampled {
    std::vector<Sample> samples;  // strictly increasing x
  };
  /// f = exp ∘ log_f for a caller-supplied log_f.
  struct Callable {
    RealFunction log_f;
  };

  using Variant = std::variant<Canonical, Gamma, Harmonic, Sampled, Callable>;

  static Generator canonical(double b, double p, double a);
  static Generator gamma();
  static Generator harmonic(double a);
  /// Sorts by x. Rejects x ≤ 0, fx ≤ 0, duplicate x, and fewer than 3 samples.
  static Generator sampled(std::vector<Sample> samples);
  static Generator from_log(RealFunction log_f);

  const Variant& variant() const noexcept { return v_; }
  bool is_sampled() const noexcept;
  std::span<const Sample> samples() const;

  /// (b, p, a) for Canonical and Harmonic generators.
  std::optional<CanonicalParams> canonical_params() const noexcept;

  double log_eval(double x) const;
  double eval(double x) const;

  std::string describe() const;

 private:
  explicit Generator(Variant v) : v_(std::move(v)) {}

  Variant v_;
};

/// f(x). Throws NonPositiveInput, SampleMiss, or Overflow (use the log form).
double eval_generator(const Generator& f, double x);

/// g = log ∘ f, evaluated without forming f.
class LogGenerator {
 public:
  explicit LogGenerator(Generator f) : f_(std::move(f)) {}

  double operator()(double x) const { return f_.log_eval(x); }
  const Generator& generator() const noexcept { return f_; }
  RealFunction as_function() const;

 private:
  Generator f_;
};

/// CSV with columns `x,fx`, optional header, any row order.
std::vector<Sample> parse_samples_csv(std::istream& in);
std::vector<Sample> load_samples_csv(const std::string& path);

}  // namespace betalab

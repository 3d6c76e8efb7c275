#pragma once

namespace betalab::special {

/// log Γ(x) for x > 0 (Lanczos, g = 7, 9 terms). Below 0.5 the argument is
/// shifted up with Γ(x) = Γ(x + 1) / x; no reflection formula is used.
double log_gamma(double x);

/// Γ(x) = exp(log_gamma(x)). Throws Overflow past x ≈ 171.6.
double gamma(double x);

/// log B(x, y) = log Γ(x) + log Γ(y) − log Γ(x + y).
double log_euler_beta(double x, double y);

/// Euler Beta function, evaluated in log domain.
double euler_beta(double x, double y);

}  // namespace betalab::special

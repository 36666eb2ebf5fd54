#pragma once

namespace cirng {

/// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
/// Series for x < a + 1, Lentz continued fraction otherwise.
double gamma_q(double a, double x);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi2_sf(double x, int dof);

/// Upper tail of the standard normal distribution.
double normal_sf(double z);

} // namespace cirng

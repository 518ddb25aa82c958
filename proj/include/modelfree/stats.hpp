#pragma once

namespace modelfree::stats {

// Standard normal CDF.
double norm_cdf(double x);

// Standard normal quantile (inverse CDF), p in (0, 1). Wichura's AS 241,
// accurate to ~1e-15 relative.
double norm_quantile(double p);

// Two-sided normal p-value for a z statistic, computed as erfc(|z|/sqrt(2))
// to avoid cancellation in the tails.
double norm_two_sided_p(double z);

// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Chi-squared CDF and survival function with df degrees of freedom.
double chi2_cdf(double x, double df);
double chi2_sf(double x, double df);

// Regularized incomplete beta I_x(a, b).
double inc_beta(double a, double b, double x);

// Student-t CDF, two-sided p-value, and quantile with df degrees of freedom.
double student_t_cdf(double t, double df);
double student_t_two_sided_p(double t, double df);
double student_t_quantile(double p, double df);

}  // namespace modelfree::stats

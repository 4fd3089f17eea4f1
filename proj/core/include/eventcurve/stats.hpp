#pragma once

namespace eventcurve {

// log of the Beta function B(a, b), a > 0, b > 0.
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b) for x in [0, 1], a > 0, b > 0.
// Continued-fraction evaluation, accurate to ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of a Student-t statistic with df degrees of freedom:
//   p = I_{df/(df+t^2)}(df/2, 1/2)
double student_t_two_sided_p(double t, double df);

// Inverse CDF of the Student-t distribution (e.g. p = 0.975 for 95% CIs).
// Bisection on the CDF; monotone-safe for any df > 0.
double student_t_quantile(double p, double df);

}  // namespace eventcurve

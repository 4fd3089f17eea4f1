#include "eventcurve/stats.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "eventcurve/errors.hpp"

namespace eventcurve {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        // even step
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        // odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw NoConvergence("incomplete beta continued fraction, a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " x=" + std::to_string(x));
}

}  // namespace

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(ErrorCode::Internal, "log_beta requires a > 0 and b > 0");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(ErrorCode::Internal, "regularized_incomplete_beta requires a > 0 and b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorCode::Internal, "regularized_incomplete_beta requires x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_front =
        a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double front = std::exp(log_front);
    // The continued fraction converges fast for x below the saddle point.
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (!(df > 0.0)) throw Error(ErrorCode::Internal, "student_t_two_sided_p requires df > 0");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0.0;
    const double x = df / (df + t * t);
    return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

double student_t_quantile(double p, double df) {
    if (!(df > 0.0)) throw Error(ErrorCode::Internal, "student_t_quantile requires df > 0");
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorCode::Internal, "student_t_quantile requires p in (0, 1)");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -student_t_quantile(1.0 - p, df);

    // For t >= 0, CDF(t) = 1 - p_two_sided(t) / 2, increasing in t.
    const double target = 2.0 * (1.0 - p);  // two-sided tail mass at the quantile
    double lo = 0.0, hi = 1.0;
    while (student_t_two_sided_p(hi, df) > target) {
        hi *= 2.0;
        if (hi > 1e12)
            throw NoConvergence("student_t_quantile bracket, p=" + std::to_string(p));
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_two_sided_p(mid, df) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace eventcurve

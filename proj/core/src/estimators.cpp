#include "eventcurve/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eventcurve/errors.hpp"
#include "eventcurve/stats.hpp"

namespace eventcurve {

namespace {

constexpr double kConditionLimit = 1e10;
constexpr double kLeverageTol = 1e-10;
constexpr double kLassoTol = 1e-8;
constexpr double kKktTol = 1e-6;
constexpr int kLassoMaxSweeps = 100000;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void require_intercept(const Eigen::MatrixXd& X) {
    if (X.cols() < 1) throw Error(ErrorCode::Internal, "design matrix has no columns");
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        if (X(i, 0) != 1.0)
            throw Error(ErrorCode::Internal, "design matrix column 0 must be an intercept");
}

// Population standardization (1/n variance) of the slope columns.
struct Standardized {
    Eigen::MatrixXd Z;       // n x (k-1), mean 0, variance 1 per column
    Eigen::VectorXd y_c;     // centered response
    Eigen::VectorXd mean;    // column means of the slope columns
    Eigen::VectorXd sd;      // population standard deviations
    double y_mean = 0.0;
};

Standardized standardize(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    require_intercept(X);
    const Eigen::Index n = X.rows();
    const Eigen::Index p = X.cols() - 1;
    if (y.size() != n) throw Error(ErrorCode::Internal, "design and response sizes differ");
    if (n < 1) throw InsufficientData("empty design");

    Standardized s;
    s.y_mean = y.mean();
    s.y_c = y.array() - s.y_mean;
    s.mean.resize(p);
    s.sd.resize(p);
    s.Z.resize(n, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        const auto col = X.col(j + 1);
        const double m = col.mean();
        const double var = (col.array() - m).square().sum() / static_cast<double>(n);
        const double sd = std::sqrt(var);
        if (sd == 0.0)
            throw SingularDesign("constant column " + std::to_string(j + 1) +
                                 " cannot be standardized");
        s.mean(j) = m;
        s.sd(j) = sd;
        s.Z.col(j) = (col.array() - m) / sd;
    }
    return s;
}

// Shared back-transformation for the penalized estimators.
// Standardized-scale coefficients back to the original scale, intercept first.
Eigen::VectorXd back_transform(Eigen::Index k, const Standardized& s,
                               const Eigen::VectorXd& b_z) {
    const Eigen::Index p = s.Z.cols();
    Eigen::VectorXd coef(k);
    double intercept = s.y_mean;
    for (Eigen::Index j = 0; j < p; ++j) {
        coef(j + 1) = b_z(j) / s.sd(j);
        intercept -= coef(j + 1) * s.mean(j);
    }
    coef(0) = intercept;
    return coef;
}

PenalizedFit finish_penalized(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                              const Standardized& s, const Eigen::VectorXd& b_z, double lambda) {
    PenalizedFit fit;
    fit.lambda = lambda;
    fit.n = static_cast<int>(X.rows());
    fit.k = static_cast<int>(X.cols());
    fit.coef = back_transform(X.cols(), s, b_z);
    fit.fitted = X * fit.coef;
    fit.metrics = compute_metrics(y, fit.fitted);
    return fit;
}

Eigen::VectorXd ridge_solve(const Standardized& s, double lambda) {
    const Eigen::Index p = s.Z.cols();
    if (p == 0) return Eigen::VectorXd(0);
    Eigen::MatrixXd A = s.Z.transpose() * s.Z;
    A.diagonal().array() += lambda;
    return A.ldlt().solve(s.Z.transpose() * s.y_c);
}

}  // namespace

FitMetrics compute_metrics(const Eigen::VectorXd& actual, const Eigen::VectorXd& fitted) {
    if (actual.size() != fitted.size() || actual.size() == 0)
        throw Error(ErrorCode::Internal, "compute_metrics: size mismatch or empty input");
    const double n = static_cast<double>(actual.size());
    const double mean = actual.mean();
    const double sst = (actual.array() - mean).square().sum();
    if (sst == 0.0) throw ZeroVariance("response is constant; R^2 undefined");
    const double sse = (actual - fitted).squaredNorm();

    FitMetrics m;
    m.r2 = 1.0 - sse / sst;
    m.rmse = std::sqrt(sse / n);
    int hits = 0;
    for (Eigen::Index i = 0; i < actual.size(); ++i)
        hits += sign_of(fitted(i)) == sign_of(actual(i));
    m.sign_accuracy_pct = 100.0 * hits / n;
    return m;
}

OlsFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const Eigen::Index n = X.rows();
    const Eigen::Index k = X.cols();
    if (y.size() != n) throw Error(ErrorCode::Internal, "design and response sizes differ");
    if (n <= k)
        throw InsufficientData("OLS needs n > k, got n=" + std::to_string(n) +
                               " k=" + std::to_string(k));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0 || smax / smin > kConditionLimit)
        throw SingularDesign("design condition number exceeds 1e10");

    OlsFit fit;
    fit.n = static_cast<int>(n);
    fit.k = static_cast<int>(k);
    fit.coef = svd.solve(y);
    fit.fitted = X * fit.coef;
    fit.residuals = y - fit.fitted;

    const Eigen::MatrixXd& U = svd.matrixU();
    fit.leverage = U.array().square().rowwise().sum();
    for (Eigen::Index i = 0; i < n; ++i)
        if (fit.leverage(i) >= 1.0 - kLeverageTol)
            throw LeverageOne("observation " + std::to_string(i) +
                              " has leverage 1; HC3 weights undefined");

    // (X'X)^-1 = V S^-2 V'
    const Eigen::MatrixXd V = svd.matrixV();
    const Eigen::VectorXd inv_s2 = sv.array().square().inverse();
    const Eigen::MatrixXd xtx_inv = V * inv_s2.asDiagonal() * V.transpose();

    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double denom = 1.0 - fit.leverage(i);
        w(i) = fit.residuals(i) * fit.residuals(i) / (denom * denom);
    }
    const Eigen::MatrixXd meat = X.transpose() * w.asDiagonal() * X;
    const Eigen::MatrixXd cov = xtx_inv * meat * xtx_inv;

    fit.hc3_se.resize(k);
    fit.t_stats.resize(k);
    fit.p_values.resize(k);
    const double df = static_cast<double>(n - k);
    for (Eigen::Index j = 0; j < k; ++j) {
        fit.hc3_se(j) = std::sqrt(std::max(cov(j, j), 0.0));
        if (fit.hc3_se(j) == 0.0) {
            fit.t_stats(j) = fit.coef(j) == 0.0 ? 0.0
                                                : std::copysign(
                                                      std::numeric_limits<double>::infinity(),
                                                      fit.coef(j));
            fit.p_values(j) = fit.coef(j) == 0.0 ? 1.0 : 0.0;
        } else {
            fit.t_stats(j) = fit.coef(j) / fit.hc3_se(j);
            fit.p_values(j) = student_t_two_sided_p(fit.t_stats(j), df);
        }
    }
    fit.metrics = compute_metrics(y, fit.fitted);
    return fit;
}

PenalizedFit fit_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda) {
    if (!(lambda >= 0.0)) throw Error(ErrorCode::Internal, "ridge lambda must be >= 0");
    const Standardized s = standardize(X, y);
    const Eigen::VectorXd b_z = ridge_solve(s, lambda);
    return finish_penalized(X, y, s, b_z, lambda);
}

PenalizedFit fit_lasso(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda) {
    if (!(lambda >= 0.0)) throw Error(ErrorCode::Internal, "lasso lambda must be >= 0");
    const Standardized s = standardize(X, y);
    const Eigen::Index n = X.rows();
    const Eigen::Index p = s.Z.cols();

    Eigen::VectorXd b = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd r = s.y_c;  // residual y_c - Z b
    bool converged = p == 0;
    for (int sweep = 0; sweep < kLassoMaxSweeps && !converged; ++sweep) {
        double max_delta = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            const double old = b(j);
            // With var(Z_j) = 1 under the 1/n convention, the coordinate
            // update is a plain soft-threshold of the partial residual.
            const double rho = s.Z.col(j).dot(r) / static_cast<double>(n) + old;
            const double next = sign_of(rho) * std::max(std::fabs(rho) - lambda, 0.0);
            if (next != old) {
                r -= s.Z.col(j) * (next - old);
                b(j) = next;
            }
            max_delta = std::max(max_delta, std::fabs(next - old));
        }
        converged = max_delta < kLassoTol;
    }

    // KKT stationarity on the exact gradient (residual recomputed fresh).
    r = s.y_c - s.Z * b;
    const Eigen::VectorXd g = s.Z.transpose() * r / static_cast<double>(n);
    bool kkt_ok = converged;
    for (Eigen::Index j = 0; j < p && kkt_ok; ++j) {
        if (b(j) == 0.0)
            kkt_ok = std::fabs(g(j)) <= lambda + kKktTol;
        else
            kkt_ok = std::fabs(g(j) - lambda * sign_of(b(j))) <= kKktTol;
    }
    if (!kkt_ok)
        throw NoConvergence("lasso coordinate descent failed KKT check at lambda=" +
                            std::to_string(lambda));

    return finish_penalized(X, y, s, b, lambda);
}

double lasso_null_lambda(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const Standardized s = standardize(X, y);
    // Per-column dot products, bitwise-matching the coordinate-descent
    // update from the all-zero start: at lambda >= this threshold the first
    // sweep provably leaves every coefficient at zero.
    double lmax = 0.0;
    for (Eigen::Index j = 0; j < s.Z.cols(); ++j)
        lmax = std::max(lmax,
                        std::fabs(s.Z.col(j).dot(s.y_c) / static_cast<double>(X.rows())));
    return lmax;
}

LooResult loo_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda) {
    if (!(lambda >= 0.0)) throw Error(ErrorCode::Internal, "ridge lambda must be >= 0");
    const Eigen::Index n = X.rows();
    const Eigen::Index k = X.cols();
    if (n < 3) throw InsufficientData("leave-one-out needs at least 3 rows");

    LooResult out;
    out.predictions.resize(n);
    Eigen::MatrixXd Xs(n - 1, k);
    Eigen::VectorXd ys(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index r = 0;
        for (Eigen::Index t = 0; t < n; ++t) {
            if (t == i) continue;
            Xs.row(r) = X.row(t);
            ys(r) = y(t);
            ++r;
        }
        // A direct solve rather than fit_ridge: fold metrics are never used,
        // and computing them would reject folds with a constant response,
        // which the SST == 0 convention below is specified to handle.
        const Standardized s = standardize(Xs, ys);
        const Eigen::VectorXd coef = back_transform(k, s, ridge_solve(s, lambda));
        out.predictions(i) = X.row(i).dot(coef);
    }

    out.sse = (y - out.predictions).squaredNorm();
    const double mean = y.mean();
    const double sst = (y.array() - mean).square().sum();
    if (sst == 0.0)
        out.r2 = out.sse == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    else
        out.r2 = 1.0 - out.sse / sst;

    out.metrics.r2 = out.r2;
    out.metrics.rmse = std::sqrt(out.sse / static_cast<double>(n));
    int hits = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        hits += sign_of(out.predictions(i)) == sign_of(y(i));
    out.metrics.sign_accuracy_pct = 100.0 * hits / static_cast<double>(n);
    return out;
}

double choose_lambda_by_loo(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                            const std::vector<double>& grid) {
    if (grid.empty()) throw ConfigError("lambda grid must not be empty");
    std::vector<double> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    double best_lambda = sorted.front();
    double best_sse = std::numeric_limits<double>::infinity();
    for (double lambda : sorted) {
        const double sse = loo_ridge(X, y, lambda).sse;
        if (sse < best_sse) {
            best_sse = sse;
            best_lambda = lambda;
        }
    }
    return best_lambda;
}

// ---------------------------------------------------------------------------
// Specifications
// ---------------------------------------------------------------------------

const std::vector<SpecConfig>& default_specs() {
    static const std::vector<SpecConfig> kSpecs = {
        {"di252_baseline", "d_di252_statement", "d_di252_shock", false},
        {"di252_fiscal_interaction", "d_di252_statement", "d_di252_shock", true},
        {"di504_baseline", "d_di504_statement", "d_di504_shock", false},
        {"slope_baseline", "d_slope_statement", "d_slope_shock", false},
    };
    return kSpecs;
}

SpecConfig spec_by_name(std::string_view name) {
    for (const auto& spec : default_specs())
        if (spec.name == name) return spec;
    throw ConfigError("unknown specification '" + std::string(name) + "'");
}

const std::vector<std::string>& default_controls() {
    static const std::vector<std::string> kControls = {"d_fx_shock", "d_vix_shock", "d_cds_shock"};
    return kControls;
}

BuiltDesign build_design(const std::vector<EventRow>& rows, const SpecConfig& spec,
                         const std::vector<std::string>& controls) {
    if (rows.empty()) throw EmptySample("cannot build a design from zero rows");

    BuiltDesign d;
    d.names = {"intercept", spec.initial_shock};
    for (const auto& c : controls) d.names.push_back(c);
    for (const char* t : {"tone", "guidance_score", "uncertainty_level", "uncertainty_change",
                          "selic_year_pre"})
        d.names.push_back(t);
    if (spec.fiscal_interaction) {
        d.names.push_back("fiscal");
        d.names.push_back("fiscal_x_initial_shock");
    }

    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index k = static_cast<Eigen::Index>(d.names.size());
    d.X.resize(n, k);
    d.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const EventRow& row = rows[i];
        auto yv = field_value(row, spec.response);
        if (!yv) throw ConfigError("unknown response field '" + spec.response + "'");
        d.y(i) = *yv;

        const double shock = [&] {
            auto v = field_value(row, spec.initial_shock);
            if (!v) throw ConfigError("unknown shock field '" + spec.initial_shock + "'");
            return *v;
        }();
        const double fiscal = row.shock_type == ShockType::Fiscal ? 1.0 : 0.0;

        Eigen::Index c = 0;
        d.X(i, c++) = 1.0;
        d.X(i, c++) = shock;
        for (const auto& name : controls) {
            auto v = field_value(row, name);
            if (!v) throw ConfigError("unknown control field '" + name + "'");
            d.X(i, c++) = *v;
        }
        d.X(i, c++) = row.tone;
        d.X(i, c++) = row.guidance_score;
        d.X(i, c++) = row.uncertainty_level;
        d.X(i, c++) = row.uncertainty_change;
        d.X(i, c++) = row.selic_year_pre;
        if (spec.fiscal_interaction) {
            d.X(i, c++) = fiscal;
            d.X(i, c++) = fiscal * shock;
        }
    }
    return d;
}

namespace {

EstimatorResult to_result(const std::string& name, const Eigen::VectorXd& coef,
                          const FitMetrics& metrics, int n, int k, double lambda = 0.0) {
    EstimatorResult r;
    r.estimator = name;
    r.coefficients.assign(coef.data(), coef.data() + coef.size());
    r.metrics = metrics;
    r.lambda = lambda;
    r.n = n;
    r.k = k;
    return r;
}

}  // namespace

SpecRunResult run_spec(const std::vector<EventRow>& rows, const SpecConfig& spec,
                       const FitOptions& options) {
    const BuiltDesign d = build_design(rows, spec, options.controls);
    const int n = static_cast<int>(d.X.rows());
    const int k = static_cast<int>(d.X.cols());
    if (n < k + 2)
        throw InsufficientSample("spec '" + spec.name + "': n=" + std::to_string(n) +
                                 " below k+2=" + std::to_string(k + 2));

    SpecRunResult out;
    out.spec = spec;
    out.column_names = d.names;

    const OlsFit ols = fit_ols(d.X, d.y);
    EstimatorResult ols_r = to_result("OLS-HC3", ols.coef, ols.metrics, ols.n, ols.k);
    ols_r.std_errors.assign(ols.hc3_se.data(), ols.hc3_se.data() + ols.hc3_se.size());
    ols_r.p_values.assign(ols.p_values.data(), ols.p_values.data() + ols.p_values.size());
    out.estimators.push_back(std::move(ols_r));

    const PenalizedFit ridge = fit_ridge(d.X, d.y, options.ridge_lambda);
    out.estimators.push_back(
        to_result("Ridge", ridge.coef, ridge.metrics, ridge.n, ridge.k, ridge.lambda));

    const double lasso_lambda = options.lasso_lambda_frac * lasso_null_lambda(d.X, d.y);
    const PenalizedFit lasso = fit_lasso(d.X, d.y, lasso_lambda);
    out.estimators.push_back(
        to_result("Lasso", lasso.coef, lasso.metrics, lasso.n, lasso.k, lasso.lambda));

    const double loo_lambda = options.loo_lambda_grid.empty()
                                  ? options.ridge_lambda
                                  : choose_lambda_by_loo(d.X, d.y, options.loo_lambda_grid);
    const LooResult loo = loo_ridge(d.X, d.y, loo_lambda);
    const PenalizedFit full = fit_ridge(d.X, d.y, loo_lambda);
    out.estimators.push_back(to_result("RidgeLOO", full.coef, loo.metrics, n, k, loo_lambda));

    return out;
}

SubgroupFits subgroup_fits(const std::vector<EventRow>& rows, const SpecConfig& spec,
                           const FitOptions& options) {
    SpecConfig base = spec;
    base.fiscal_interaction = false;  // within a type the indicator is constant

    SubgroupFits out;
    for (ShockType type : all_shock_types()) {
        std::vector<EventRow> subset;
        for (const auto& row : rows)
            if (row.shock_type == type) subset.push_back(row);
        const int n = static_cast<int>(subset.size());
        if (n == 0) continue;
        if (n < options.min_subgroup_n) {
            out.skipped.push_back({type, n, "below_min_n"});
            continue;
        }
        try {
            const BuiltDesign d = build_design(subset, base, options.controls);
            if (n < static_cast<int>(d.X.cols()) + 2) {
                out.skipped.push_back({type, n, "insufficient_sample"});
                continue;
            }
            const OlsFit ols = fit_ols(d.X, d.y);
            SubgroupResult r;
            r.type = type;
            r.n = n;
            r.column_names = d.names;
            r.ols = to_result("OLS-HC3", ols.coef, ols.metrics, ols.n, ols.k);
            r.ols.std_errors.assign(ols.hc3_se.data(), ols.hc3_se.data() + ols.hc3_se.size());
            r.ols.p_values.assign(ols.p_values.data(), ols.p_values.data() + ols.p_values.size());
            out.fitted.push_back(std::move(r));
        } catch (const SingularDesign&) {
            out.skipped.push_back({type, n, "singular_design"});
        } catch (const LeverageOne&) {
            out.skipped.push_back({type, n, "leverage_one"});
        } catch (const ZeroVariance&) {
            out.skipped.push_back({type, n, "zero_variance"});
        }
    }
    return out;
}

}  // namespace eventcurve

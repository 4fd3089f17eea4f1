#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "eventcurve/dataset.hpp"

namespace eventcurve {

// ---------------------------------------------------------------------------
// Fit-quality metrics
// ---------------------------------------------------------------------------

struct FitMetrics {
    double r2 = 0.0;                 // 1 - SSE/SST (can be negative out of sample)
    double rmse = 0.0;               // sqrt(SSE / n)
    double sign_accuracy_pct = 0.0;  // share of sign(fitted) == sign(actual), in percent
};

// Throws ZeroVariance when the actual values are all identical (SST == 0).
FitMetrics compute_metrics(const Eigen::VectorXd& actual, const Eigen::VectorXd& fitted);

// ---------------------------------------------------------------------------
// Core estimators. Design convention: column 0 of X is the intercept
// (all ones); remaining columns are regressors on their original scale.
// ---------------------------------------------------------------------------

struct OlsFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd hc3_se;    // heteroskedasticity-robust (HC3)
    Eigen::VectorXd t_stats;   // coef / hc3_se
    Eigen::VectorXd p_values;  // two-sided Student-t, df = n - k
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
    Eigen::VectorXd leverage;  // hat-matrix diagonal
    FitMetrics metrics;
    int n = 0;
    int k = 0;
};

// OLS with HC3 robust standard errors:
//   V = (X'X)^-1 X' diag(e_i^2 / (1 - h_ii)^2) X (X'X)^-1
// Throws SingularDesign when cond_2(X) > 1e10, LeverageOne when any
// h_ii >= 1 - 1e-10, InsufficientData when n <= k.
OlsFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

struct PenalizedFit {
    Eigen::VectorXd coef;  // original scale, intercept at position 0
    Eigen::VectorXd fitted;
    FitMetrics metrics;
    double lambda = 0.0;
    int n = 0;
    int k = 0;
};

// Ridge with the penalty applied on population-standardized columns
// (mean 0, variance 1 with the 1/n convention); the intercept is not
// penalized. lambda = 0 reproduces OLS exactly.
PenalizedFit fit_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda);

// Lasso by cyclic coordinate descent on standardized columns, objective
//   (1/(2n)) ||y_c - Z b||^2 + lambda ||b||_1.
// Converges when the largest coefficient update falls below 1e-8; the
// KKT stationarity conditions are verified on exit (tolerance 1e-6) and
// NoConvergence is thrown if they fail.
PenalizedFit fit_lasso(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda);

// Smallest lambda for which the lasso solution has all slopes equal to
// zero: max_j |Z_j' y_c| / n.
double lasso_null_lambda(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

struct LooResult {
    double r2 = 0.0;   // 1 - SSE_loo / SST, SST about the full-sample mean
    double sse = 0.0;  // sum of squared leave-one-out prediction errors
    Eigen::VectorXd predictions;
    FitMetrics metrics;  // computed on the leave-one-out predictions
};

// Leave-one-out evaluation of ridge at a fixed lambda: n refits, each
// standardizing on its own n-1 rows. When SST == 0 the convention is
// r2 = 0 for a perfect fit and -inf otherwise.
LooResult loo_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda);

// Smallest-LOO-SSE lambda from a candidate grid; ties resolve to the
// smaller lambda. Throws ConfigError on an empty grid.
double choose_lambda_by_loo(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                            const std::vector<double>& grid);

// ---------------------------------------------------------------------------
// Regression specifications over the event dataset
// ---------------------------------------------------------------------------

struct SpecConfig {
    std::string name;           // e.g. "di252_baseline"
    std::string response;       // statement-window repricing column
    std::string initial_shock;  // maturity-matched shock-window repricing column
    bool fiscal_interaction = false;
};

// di252_baseline, di252_fiscal_interaction, di504_baseline, slope_baseline.
const std::vector<SpecConfig>& default_specs();
SpecConfig spec_by_name(std::string_view name);  // throws ConfigError

struct BuiltDesign {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    std::vector<std::string> names;  // column names; names[0] == "intercept"
};

// Columns: intercept, initial shock, controls..., tone, guidance_score,
// uncertainty_level, uncertainty_change, selic_year_pre, and for
// fiscal-interaction specs: fiscal, fiscal_x_initial_shock.
BuiltDesign build_design(const std::vector<EventRow>& rows, const SpecConfig& spec,
                         const std::vector<std::string>& controls);

const std::vector<std::string>& default_controls();  // d_fx_shock, d_vix_shock, d_cds_shock

struct FitOptions {
    double ridge_lambda = 1.0;
    double lasso_lambda_frac = 0.1;  // lasso lambda = frac * lasso_null_lambda
    std::vector<double> loo_lambda_grid = {0.01, 0.1, 1.0, 10.0, 100.0};
    std::vector<std::string> controls = default_controls();
    int min_subgroup_n = 20;
};

struct EstimatorResult {
    std::string estimator;             // OLS-HC3 | Ridge | Lasso | RidgeLOO
    std::vector<double> coefficients;  // aligned with the design column names
    std::vector<double> std_errors;    // OLS-HC3 only, empty otherwise
    std::vector<double> p_values;      // OLS-HC3 only, empty otherwise
    FitMetrics metrics;
    double lambda = 0.0;  // penalized estimators only
    int n = 0;
    int k = 0;
};

struct SpecRunResult {
    SpecConfig spec;
    std::vector<std::string> column_names;
    std::vector<EstimatorResult> estimators;  // OLS-HC3, Ridge, Lasso, RidgeLOO
};

// All four estimators on one specification. Throws InsufficientSample
// when n < k + 2.
SpecRunResult run_spec(const std::vector<EventRow>& rows, const SpecConfig& spec,
                       const FitOptions& options = {});

struct SubgroupResult {
    ShockType type;
    int n = 0;
    std::vector<std::string> column_names;
    EstimatorResult ols;  // OLS-HC3 on the subgroup
};

struct SkippedSubgroup {
    ShockType type;
    int n = 0;
    std::string reason;  // below_min_n | insufficient_sample
};

struct SubgroupFits {
    std::vector<SubgroupResult> fitted;
    std::vector<SkippedSubgroup> skipped;
};

// Baseline OLS-HC3 per shock type, restricted to types with at least
// min_subgroup_n rows and enough sample for the design (n >= k + 2).
SubgroupFits subgroup_fits(const std::vector<EventRow>& rows, const SpecConfig& spec,
                           const FitOptions& options = {});

}  // namespace eventcurve

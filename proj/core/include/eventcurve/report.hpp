#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "eventcurve/dataset.hpp"
#include "eventcurve/estimators.hpp"
#include "eventcurve/textfeat.hpp"

namespace eventcurve {

struct SkippedSpec {
    std::string name;
    std::string reason;
};

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

// shock_type,count,share_pct — share with one decimal.
void write_table1(const std::filesystem::path& path, const std::vector<CompositionRow>& rows);

// specification,estimator,n,r2,rmse,sign_accuracy_pct — four estimator rows
// per specification; r2 %.3f, rmse %.1f, sign accuracy %.1f.
void write_table2(const std::filesystem::path& path, const std::vector<SpecRunResult>& results);

// ---------------------------------------------------------------------------
// fits.json: full-precision record of every fit, plus subgroup fits and
// the specifications skipped for lack of sample.
// ---------------------------------------------------------------------------

void write_fits_json(const std::filesystem::path& path,
                     const std::vector<SpecRunResult>& results,
                     const std::vector<SkippedSpec>& skipped,
                     const std::string& subgroup_spec,  // empty when absent
                     const SubgroupFits* subgroups);    // may be nullptr

// Read-back model of fits.json used by the figure stage.
struct FitRecord {
    std::string spec;
    std::string estimator;
    int n = 0;
    int k = 0;
    double r2 = 0.0;
    double rmse = 0.0;
    double sign_accuracy_pct = 0.0;
    double lambda = 0.0;
    std::vector<std::string> columns;
    std::vector<double> coefficients;
    std::vector<double> std_errors;  // OLS-HC3 only
    std::vector<double> p_values;    // OLS-HC3 only
};

struct SubgroupRecord {
    std::string spec;
    std::string shock_type;
    int n = 0;
    std::vector<std::string> columns;
    std::vector<double> coefficients;
};

struct FitsFile {
    std::vector<FitRecord> records;
    std::vector<SubgroupRecord> subgroups;
};

FitsFile read_fits_json(const std::filesystem::path& path);  // throws ParseError

// ---------------------------------------------------------------------------
// Figure data (full-precision CSVs)
// ---------------------------------------------------------------------------

// date,tone for the whole statement corpus.
void write_fig2_tone(const std::filesystem::path& path,
                     const std::map<Date, StatementFeatures>& features);

// window_kind,maturity,repricing — six records per event row.
void write_fig3_distributions(const std::filesystem::path& path,
                              const std::vector<EventRow>& rows);

// d_di252_shock,d_di252_statement per event row.
void write_fig4_scatter(const std::filesystem::path& path, const std::vector<EventRow>& rows);

// shock_type,d_di252_statement per event row.
void write_fig5_by_type(const std::filesystem::path& path, const std::vector<EventRow>& rows);

// spec,estimator,rmse for every record.
void write_figA1_rmse(const std::filesystem::path& path, const FitsFile& fits);

// shock_type,term,coefficient for the text terms of each subgroup fit.
void write_figA2_text_coefs(const std::filesystem::path& path, const FitsFile& fits);

// term,coefficient,ci_low,ci_high for the di252_baseline OLS-HC3 fit,
// intercept excluded; 95% CIs from Student-t critical values on HC3 SEs.
void write_figA3_forest(const std::filesystem::path& path, const FitsFile& fits);

}  // namespace eventcurve

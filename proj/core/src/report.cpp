#include "eventcurve/report.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "eventcurve/csv.hpp"
#include "eventcurve/errors.hpp"
#include "eventcurve/stats.hpp"

namespace eventcurve {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

ordered_json estimator_to_json(const EstimatorResult& est,
                               const std::vector<std::string>& columns) {
    ordered_json j;
    j["estimator"] = est.estimator;
    j["n"] = est.n;
    j["k"] = est.k;
    if (est.estimator != "OLS-HC3") j["lambda"] = est.lambda;
    j["r2"] = est.metrics.r2;
    j["rmse"] = est.metrics.rmse;
    j["sign_accuracy_pct"] = est.metrics.sign_accuracy_pct;
    j["coefficients"] = est.coefficients;
    if (!est.std_errors.empty()) j["std_errors"] = est.std_errors;
    if (!est.p_values.empty()) j["p_values"] = est.p_values;
    (void)columns;
    return j;
}

std::vector<double> json_doubles(const ordered_json& j) {
    std::vector<double> out;
    for (const auto& v : j) out.push_back(v.is_null() ? 0.0 : v.get<double>());
    return out;
}

}  // namespace

void write_table1(const std::filesystem::path& path, const std::vector<CompositionRow>& rows) {
    CsvTable t;
    t.header = {"shock_type", "count", "share_pct"};
    for (const auto& row : rows)
        t.rows.push_back(
            {std::string(to_string(row.type)), std::to_string(row.count), fixed(row.share_pct, 1)});
    write_csv(path, t);
}

void write_table2(const std::filesystem::path& path, const std::vector<SpecRunResult>& results) {
    CsvTable t;
    t.header = {"specification", "estimator", "n", "r2", "rmse", "sign_accuracy_pct"};
    for (const auto& res : results)
        for (const auto& est : res.estimators)
            t.rows.push_back({res.spec.name, est.estimator, std::to_string(est.n),
                              fixed(est.metrics.r2, 3), fixed(est.metrics.rmse, 1),
                              fixed(est.metrics.sign_accuracy_pct, 1)});
    write_csv(path, t);
}

void write_fits_json(const std::filesystem::path& path,
                     const std::vector<SpecRunResult>& results,
                     const std::vector<SkippedSpec>& skipped,
                     const std::string& subgroup_spec, const SubgroupFits* subgroups) {
    ordered_json root;
    root["specs"] = ordered_json::array();
    for (const auto& res : results) {
        ordered_json spec;
        spec["name"] = res.spec.name;
        spec["response"] = res.spec.response;
        spec["initial_shock"] = res.spec.initial_shock;
        spec["fiscal_interaction"] = res.spec.fiscal_interaction;
        spec["columns"] = res.column_names;
        spec["estimators"] = ordered_json::array();
        for (const auto& est : res.estimators)
            spec["estimators"].push_back(estimator_to_json(est, res.column_names));
        root["specs"].push_back(std::move(spec));
    }

    root["skipped_specs"] = ordered_json::array();
    for (const auto& s : skipped) {
        ordered_json j;
        j["name"] = s.name;
        j["reason"] = s.reason;
        root["skipped_specs"].push_back(std::move(j));
    }

    if (subgroups && !subgroup_spec.empty()) {
        ordered_json sg;
        sg["spec"] = subgroup_spec;
        sg["fitted"] = ordered_json::array();
        for (const auto& fit : subgroups->fitted) {
            ordered_json j;
            j["shock_type"] = std::string(to_string(fit.type));
            j["n"] = fit.n;
            j["columns"] = fit.column_names;
            j["coefficients"] = fit.ols.coefficients;
            j["std_errors"] = fit.ols.std_errors;
            j["p_values"] = fit.ols.p_values;
            sg["fitted"].push_back(std::move(j));
        }
        sg["skipped"] = ordered_json::array();
        for (const auto& sk : subgroups->skipped) {
            ordered_json j;
            j["shock_type"] = std::string(to_string(sk.type));
            j["n"] = sk.n;
            j["reason"] = sk.reason;
            sg["skipped"].push_back(std::move(j));
        }
        root["subgroups"] = std::move(sg);
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path.string());
    out << root.dump(2) << "\n";
}

FitsFile read_fits_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path.string());
    ordered_json root;
    try {
        in >> root;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }

    FitsFile out;
    try {
        for (const auto& spec : root.at("specs")) {
            const std::string name = spec.at("name");
            std::vector<std::string> columns = spec.at("columns");
            for (const auto& est : spec.at("estimators")) {
                FitRecord rec;
                rec.spec = name;
                rec.estimator = est.at("estimator");
                rec.n = est.at("n");
                rec.k = est.at("k");
                rec.lambda = est.value("lambda", 0.0);
                rec.r2 = est.at("r2").is_null() ? 0.0 : est.at("r2").get<double>();
                rec.rmse = est.at("rmse");
                rec.sign_accuracy_pct = est.at("sign_accuracy_pct");
                rec.columns = columns;
                rec.coefficients = json_doubles(est.at("coefficients"));
                if (est.contains("std_errors")) rec.std_errors = json_doubles(est.at("std_errors"));
                if (est.contains("p_values")) rec.p_values = json_doubles(est.at("p_values"));
                out.records.push_back(std::move(rec));
            }
        }
        if (root.contains("subgroups")) {
            const auto& sg = root.at("subgroups");
            const std::string spec_name = sg.at("spec");
            for (const auto& fit : sg.at("fitted")) {
                SubgroupRecord rec;
                rec.spec = spec_name;
                rec.shock_type = fit.at("shock_type");
                rec.n = fit.at("n");
                rec.columns = fit.at("columns").get<std::vector<std::string>>();
                rec.coefficients = json_doubles(fit.at("coefficients"));
                out.subgroups.push_back(std::move(rec));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": unexpected fits layout: " + e.what());
    }
    return out;
}

void write_fig2_tone(const std::filesystem::path& path,
                     const std::map<Date, StatementFeatures>& features) {
    CsvTable t;
    t.header = {"date", "tone"};
    for (const auto& [date, feat] : features)
        t.rows.push_back({date.to_iso(), format_double(feat.tone)});
    write_csv(path, t);
}

void write_fig3_distributions(const std::filesystem::path& path,
                              const std::vector<EventRow>& rows) {
    CsvTable t;
    t.header = {"window_kind", "maturity", "repricing"};
    struct Item {
        const char* kind;
        const char* maturity;
        double EventRow::* field;
    };
    static const Item kItems[] = {
        {"shock", "di_21d", &EventRow::d_di21_shock},
        {"shock", "di_252d", &EventRow::d_di252_shock},
        {"shock", "di_504d", &EventRow::d_di504_shock},
        {"statement", "di_21d", &EventRow::d_di21_statement},
        {"statement", "di_252d", &EventRow::d_di252_statement},
        {"statement", "di_504d", &EventRow::d_di504_statement},
    };
    for (const auto& row : rows)
        for (const auto& item : kItems)
            t.rows.push_back({item.kind, item.maturity, format_double(row.*item.field)});
    write_csv(path, t);
}

void write_fig4_scatter(const std::filesystem::path& path, const std::vector<EventRow>& rows) {
    CsvTable t;
    t.header = {"d_di252_shock", "d_di252_statement"};
    for (const auto& row : rows)
        t.rows.push_back({format_double(row.d_di252_shock), format_double(row.d_di252_statement)});
    write_csv(path, t);
}

void write_fig5_by_type(const std::filesystem::path& path, const std::vector<EventRow>& rows) {
    CsvTable t;
    t.header = {"shock_type", "d_di252_statement"};
    for (const auto& row : rows)
        t.rows.push_back(
            {std::string(to_string(row.shock_type)), format_double(row.d_di252_statement)});
    write_csv(path, t);
}

void write_figA1_rmse(const std::filesystem::path& path, const FitsFile& fits) {
    CsvTable t;
    t.header = {"spec", "estimator", "rmse"};
    for (const auto& rec : fits.records)
        t.rows.push_back({rec.spec, rec.estimator, format_double(rec.rmse)});
    write_csv(path, t);
}

void write_figA2_text_coefs(const std::filesystem::path& path, const FitsFile& fits) {
    CsvTable t;
    t.header = {"shock_type", "term", "coefficient"};
    static const char* kTerms[] = {"tone", "guidance_score", "uncertainty_level",
                                   "uncertainty_change"};
    for (const auto& sub : fits.subgroups) {
        for (const char* term : kTerms) {
            for (size_t j = 0; j < sub.columns.size(); ++j) {
                if (sub.columns[j] == term && j < sub.coefficients.size()) {
                    t.rows.push_back({sub.shock_type, term, format_double(sub.coefficients[j])});
                    break;
                }
            }
        }
    }
    write_csv(path, t);
}

void write_figA3_forest(const std::filesystem::path& path, const FitsFile& fits) {
    CsvTable t;
    t.header = {"term", "coefficient", "ci_low", "ci_high"};
    for (const auto& rec : fits.records) {
        if (rec.spec != "di252_baseline" || rec.estimator != "OLS-HC3") continue;
        if (rec.std_errors.empty() || rec.n <= rec.k) break;
        const double tcrit = student_t_quantile(0.975, static_cast<double>(rec.n - rec.k));
        for (size_t j = 1; j < rec.columns.size(); ++j) {  // intercept excluded
            const double c = rec.coefficients[j];
            const double half = tcrit * rec.std_errors[j];
            t.rows.push_back({rec.columns[j], format_double(c), format_double(c - half),
                              format_double(c + half)});
        }
        break;
    }
    write_csv(path, t);
}

}  // namespace eventcurve

#include "eventcurve/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "eventcurve/csv.hpp"
#include "eventcurve/errors.hpp"

namespace eventcurve {

namespace {

// "Name: detail" -> "detail"; used to turn caught errors into drop reasons.
std::string strip_error_prefix(const char* what) {
    std::string s(what);
    auto pos = s.find(": ");
    return pos == std::string::npos ? s : s.substr(pos + 2);
}

}  // namespace

FieldScale field_scale(std::string_view column) {
    if (column == "di_21d" || column == "di_252d" || column == "di_504d" || column == "ust_10y")
        return FieldScale::RatePercent;
    if (column == "cds_5y") return FieldScale::BasisPoints;
    if (column == "fx" || column == "oil") return FieldScale::PercentChange;
    return FieldScale::Level;
}

double repricing(const MarketPanel& panel, const Window& w, std::string_view column) {
    auto start = panel.value(w.start_date, column);
    if (!start) throw MissingValue(std::string(column) + "@" + w.start_date.to_iso());
    auto end = panel.value(w.end_date, column);
    if (!end) throw MissingValue(std::string(column) + "@" + w.end_date.to_iso());

    switch (field_scale(column)) {
        case FieldScale::RatePercent: return (*end - *start) * 100.0;
        case FieldScale::BasisPoints: return *end - *start;
        case FieldScale::Level: return *end - *start;
        case FieldScale::PercentChange:
            if (*start == 0.0)
                throw MissingValue(std::string(column) + "@" + w.start_date.to_iso());
            return (*end / *start - 1.0) * 100.0;
    }
    return 0.0;
}

EventTable build_event_rows(const std::vector<Event>& events, const TradingCalendar& cal,
                            const MarketPanel& market, const ExpectationsPanel& focus,
                            const std::map<Date, StatementFeatures>& statement_features,
                            const BuildOptions& options) {
    EventTable out;
    for (const Event& ev : events) {
        if (ev.shock_date < options.sample_start) {
            out.drops.push_back({ev.id, "before_sample_start"});
            continue;
        }

        Window w1, w2;
        try {
            w1 = build_shock_window(cal, ev);
        } catch (const WindowUnavailable&) {
            out.drops.push_back({ev.id, "shock_window_unavailable"});
            continue;
        }
        try {
            w2 = build_statement_window(cal, ev, w1.end_date);
        } catch (const WindowUnavailable&) {
            out.drops.push_back({ev.id, "statement_window_unavailable"});
            continue;
        }

        EventRow row;
        row.event_id = ev.id;
        row.shock_type = ev.shock_type;
        row.shock_date = ev.shock_date;
        row.effective_shock_date = w1.end_date;
        row.statement_date = ev.next_statement_date;
        row.shock_window = w1;
        row.statement_window = w2;

        try {
            row.d_di21_shock = repricing(market, w1, "di_21d");
            row.d_di252_shock = repricing(market, w1, "di_252d");
            row.d_di504_shock = repricing(market, w1, "di_504d");
            row.d_di21_statement = repricing(market, w2, "di_21d");
            row.d_di252_statement = repricing(market, w2, "di_252d");
            row.d_di504_statement = repricing(market, w2, "di_504d");
            row.d_fx_shock = repricing(market, w1, "fx");
            row.d_oil_shock = repricing(market, w1, "oil");
            row.d_vix_shock = repricing(market, w1, "vix");
            row.d_cds_shock = repricing(market, w1, "cds_5y");
            row.d_ust_shock = repricing(market, w1, "ust_10y");
        } catch (const MissingValue& e) {
            out.drops.push_back({ev.id, "missing_market:" + strip_error_prefix(e.what())});
            continue;
        }

        double sign = options.slope == SlopeOrientation::LongMinusShort ? 1.0 : -1.0;
        row.d_slope_shock = sign * (row.d_di504_shock - row.d_di21_shock);
        row.d_slope_statement = sign * (row.d_di504_statement - row.d_di21_statement);

        auto feat = statement_features.find(ev.next_statement_date);
        if (feat == statement_features.end()) {
            out.drops.push_back({ev.id, "missing_statement:" + ev.next_statement_date.to_iso()});
            continue;
        }
        row.tone = feat->second.tone;
        row.guidance_direction = feat->second.guidance_direction;
        row.guidance_explicitness = feat->second.guidance_explicitness;
        row.guidance_score = feat->second.guidance_score;
        row.uncertainty_level = feat->second.uncertainty_level;
        row.uncertainty_change = feat->second.uncertainty_change;

        auto selic = asof_merge(focus, w1.start_date, "selic_year");
        if (!selic) {
            out.drops.push_back({ev.id, "missing_expectation:selic_year"});
            continue;
        }
        row.selic_year_pre = *selic;

        out.rows.push_back(std::move(row));
    }

    auto row_key = [](const EventRow& r) { return std::tie(r.event_id, r.shock_date); };
    std::stable_sort(out.rows.begin(), out.rows.end(),
                     [&](const EventRow& a, const EventRow& b) { return row_key(a) < row_key(b); });
    std::stable_sort(out.drops.begin(), out.drops.end(),
                     [](const DropRecord& a, const DropRecord& b) {
                         return std::tie(a.event_id, a.reason) < std::tie(b.event_id, b.reason);
                     });
    return out;
}

std::vector<CompositionRow> sample_summary(const std::vector<EventRow>& rows) {
    if (rows.empty()) throw EmptySample("sample_summary on empty row set");
    std::vector<CompositionRow> out;
    for (ShockType t : all_shock_types()) {
        int count = static_cast<int>(std::count_if(
            rows.begin(), rows.end(), [&](const EventRow& r) { return r.shock_type == t; }));
        if (count > 0)
            out.push_back({t, count, 100.0 * count / static_cast<double>(rows.size())});
    }
    std::stable_sort(out.begin(), out.end(), [](const CompositionRow& a, const CompositionRow& b) {
        return a.count > b.count;
    });
    return out;
}

double stage_correlation(const std::vector<EventRow>& rows, std::string_view field_shock,
                         std::string_view field_statement) {
    std::vector<double> x, y;
    for (const auto& row : rows) {
        auto a = field_value(row, field_shock);
        auto b = field_value(row, field_statement);
        if (a && b) {
            x.push_back(*a);
            y.push_back(*b);
        }
    }
    if (x.size() < 3)
        throw InsufficientData("stage_correlation needs >= 3 rows, got " +
                               std::to_string(x.size()));
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw ZeroVariance("stage_correlation: constant series");
    return sxy / std::sqrt(sxx * syy);
}

namespace {

using FieldGetter = std::function<double(const EventRow&)>;

const std::vector<std::pair<std::string, FieldGetter>>& field_table() {
    static const std::vector<std::pair<std::string, FieldGetter>> kFields = {
        {"d_di21_shock", [](const EventRow& r) { return r.d_di21_shock; }},
        {"d_di252_shock", [](const EventRow& r) { return r.d_di252_shock; }},
        {"d_di504_shock", [](const EventRow& r) { return r.d_di504_shock; }},
        {"d_slope_shock", [](const EventRow& r) { return r.d_slope_shock; }},
        {"d_di21_statement", [](const EventRow& r) { return r.d_di21_statement; }},
        {"d_di252_statement", [](const EventRow& r) { return r.d_di252_statement; }},
        {"d_di504_statement", [](const EventRow& r) { return r.d_di504_statement; }},
        {"d_slope_statement", [](const EventRow& r) { return r.d_slope_statement; }},
        {"d_fx_shock", [](const EventRow& r) { return r.d_fx_shock; }},
        {"d_oil_shock", [](const EventRow& r) { return r.d_oil_shock; }},
        {"d_vix_shock", [](const EventRow& r) { return r.d_vix_shock; }},
        {"d_cds_shock", [](const EventRow& r) { return r.d_cds_shock; }},
        {"d_ust_shock", [](const EventRow& r) { return r.d_ust_shock; }},
        {"tone", [](const EventRow& r) { return r.tone; }},
        {"guidance_direction",
         [](const EventRow& r) { return static_cast<double>(r.guidance_direction); }},
        {"guidance_explicitness", [](const EventRow& r) { return r.guidance_explicitness; }},
        {"guidance_score", [](const EventRow& r) { return r.guidance_score; }},
        {"uncertainty_level", [](const EventRow& r) { return r.uncertainty_level; }},
        {"uncertainty_change", [](const EventRow& r) { return r.uncertainty_change; }},
        {"selic_year_pre", [](const EventRow& r) { return r.selic_year_pre; }},
        {"shock_window_days",
         [](const EventRow& r) { return static_cast<double>(r.shock_window.length_days()); }},
        {"statement_window_days",
         [](const EventRow& r) { return static_cast<double>(r.statement_window.length_days()); }},
    };
    return kFields;
}

}  // namespace

std::optional<double> field_value(const EventRow& row, std::string_view name) {
    for (const auto& [field, getter] : field_table())
        if (field == name) return getter(row);
    return std::nullopt;
}

const std::vector<std::string>& numeric_field_names() {
    static const std::vector<std::string> kNames = [] {
        std::vector<std::string> names;
        for (const auto& [field, getter] : field_table()) {
            if (field == "shock_window_days" || field == "statement_window_days") continue;
            names.push_back(field);
        }
        return names;
    }();
    return kNames;
}

void save_event_table(const EventTable& table, const std::filesystem::path& dataset_csv,
                      const std::filesystem::path& drops_csv) {
    CsvTable data;
    data.header = {"event_id",
                   "shock_type",
                   "shock_date",
                   "effective_shock_date",
                   "statement_date",
                   "shock_window_start",
                   "shock_window_end",
                   "shock_window_days",
                   "statement_window_start",
                   "statement_window_end",
                   "statement_window_days"};
    for (const auto& name : numeric_field_names()) data.header.push_back(name);

    for (const auto& row : table.rows) {
        std::vector<std::string> cells = {
            row.event_id,
            std::string(to_string(row.shock_type)),
            row.shock_date.to_iso(),
            row.effective_shock_date.to_iso(),
            row.statement_date.to_iso(),
            row.shock_window.start_date.to_iso(),
            row.shock_window.end_date.to_iso(),
            std::to_string(row.shock_window.length_days()),
            row.statement_window.start_date.to_iso(),
            row.statement_window.end_date.to_iso(),
            std::to_string(row.statement_window.length_days())};
        for (const auto& name : numeric_field_names())
            cells.push_back(format_double(*field_value(row, name)));
        data.rows.push_back(std::move(cells));
    }
    write_csv(dataset_csv, data);

    CsvTable drops;
    drops.header = {"event_id", "reason"};
    for (const auto& drop : table.drops) drops.rows.push_back({drop.event_id, drop.reason});
    write_csv(drops_csv, drops);
}

std::vector<EventRow> load_event_rows(const std::filesystem::path& dataset_csv) {
    CsvTable table = read_csv(dataset_csv);
    auto col = [&](std::string_view name) {
        int i = table.column_index(name);
        if (i < 0)
            throw ParseError(dataset_csv.string() + ": missing column '" + std::string(name) + "'");
        return i;
    };

    auto parse_num = [&](const std::string& cell, size_t line_no) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc() || ptr != cell.data() + cell.size())
            throw ParseError(dataset_csv.string() + ":" + std::to_string(line_no) +
                             ": non-numeric value '" + cell + "'");
        return v;
    };

    std::vector<EventRow> rows;
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const auto& raw = table.rows[r];
        size_t line_no = r + 2;
        EventRow row;
        row.event_id = raw[col("event_id")];
        row.shock_type = shock_type_from_string(raw[col("shock_type")]);
        row.shock_date = Date::from_iso(raw[col("shock_date")]);
        row.effective_shock_date = Date::from_iso(raw[col("effective_shock_date")]);
        row.statement_date = Date::from_iso(raw[col("statement_date")]);
        row.shock_window = Window{WindowKind::PreShockToShock,
                                  Date::from_iso(raw[col("shock_window_start")]),
                                  Date::from_iso(raw[col("shock_window_end")])};
        row.statement_window = Window{WindowKind::ShockToStatement,
                                      Date::from_iso(raw[col("statement_window_start")]),
                                      Date::from_iso(raw[col("statement_window_end")])};

        auto num = [&](std::string_view name) { return parse_num(raw[col(name)], line_no); };
        row.d_di21_shock = num("d_di21_shock");
        row.d_di252_shock = num("d_di252_shock");
        row.d_di504_shock = num("d_di504_shock");
        row.d_slope_shock = num("d_slope_shock");
        row.d_di21_statement = num("d_di21_statement");
        row.d_di252_statement = num("d_di252_statement");
        row.d_di504_statement = num("d_di504_statement");
        row.d_slope_statement = num("d_slope_statement");
        row.d_fx_shock = num("d_fx_shock");
        row.d_oil_shock = num("d_oil_shock");
        row.d_vix_shock = num("d_vix_shock");
        row.d_cds_shock = num("d_cds_shock");
        row.d_ust_shock = num("d_ust_shock");
        row.tone = num("tone");
        row.guidance_direction = static_cast<int>(num("guidance_direction"));
        row.guidance_explicitness = num("guidance_explicitness");
        row.guidance_score = num("guidance_score");
        row.uncertainty_level = num("uncertainty_level");
        row.uncertainty_change = num("uncertainty_change");
        row.selic_year_pre = num("selic_year_pre");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eventcurve

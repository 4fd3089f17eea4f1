#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eventcurve/calendar.hpp"
#include "eventcurve/panel.hpp"
#include "eventcurve/textfeat.hpp"

namespace eventcurve {

enum class SlopeOrientation { LongMinusShort, ShortMinusLong };

// One row per retained event: repricing and controls for both windows plus
// the communication features of the statement closing the second window.
struct EventRow {
    std::string event_id;
    ShockType shock_type = ShockType::Fiscal;
    Date shock_date;
    Date effective_shock_date;  // shock-window end == statement-window start
    Date statement_date;

    Window shock_window;
    Window statement_window;

    // basis points
    double d_di21_shock = 0, d_di252_shock = 0, d_di504_shock = 0, d_slope_shock = 0;
    double d_di21_statement = 0, d_di252_statement = 0, d_di504_statement = 0,
           d_slope_statement = 0;

    // shock-window market controls
    double d_fx_shock = 0;   // percent change
    double d_oil_shock = 0;  // percent change
    double d_vix_shock = 0;  // level change
    double d_cds_shock = 0;  // bp change
    double d_ust_shock = 0;  // bp change

    double tone = 0;
    int guidance_direction = 0;
    double guidance_explicitness = 0;
    double guidance_score = 0;
    double uncertainty_level = 0;
    double uncertainty_change = 0;

    double selic_year_pre = 0;  // percent, merged as-of the shock-window start
};

struct DropRecord {
    std::string event_id;
    std::string reason;
};

struct EventTable {
    std::vector<EventRow> rows;
    std::vector<DropRecord> drops;
};

struct BuildOptions {
    Date sample_start = Date::from_iso("2016-08-31");
    SlopeOrientation slope = SlopeOrientation::LongMinusShort;
};

// How a market column enters a windowed change.
enum class FieldScale {
    RatePercent,    // percent p.a. -> change in bp (diff * 100)
    BasisPoints,    // already bp -> plain diff
    Level,          // plain diff
    PercentChange,  // (end/start - 1) * 100
};
FieldScale field_scale(std::string_view column);

// Windowed change of `column` with the unit convention above.
double repricing(const MarketPanel& panel, const Window& w,
                 std::string_view column);  // throws MissingValue

EventTable build_event_rows(const std::vector<Event>& events, const TradingCalendar& cal,
                            const MarketPanel& market, const ExpectationsPanel& focus,
                            const std::map<Date, StatementFeatures>& statement_features,
                            const BuildOptions& options = {});

struct CompositionRow {
    ShockType type;
    int count = 0;
    double share_pct = 0.0;
};
// Counts and percentage shares by shock type, descending by count.
std::vector<CompositionRow> sample_summary(const std::vector<EventRow>& rows);  // EmptySample

// Pearson correlation between two named EventRow fields.
double stage_correlation(const std::vector<EventRow>& rows, std::string_view field_shock,
                         std::string_view field_statement);  // InsufficientData, ZeroVariance

// Numeric EventRow fields addressable by column name (regression targets,
// regressors, figure data). Absent for unknown names.
std::optional<double> field_value(const EventRow& row, std::string_view name);

// All numeric field names in the dataset column order.
const std::vector<std::string>& numeric_field_names();

void save_event_table(const EventTable& table, const std::filesystem::path& dataset_csv,
                      const std::filesystem::path& drops_csv);
std::vector<EventRow> load_event_rows(const std::filesystem::path& dataset_csv);

}  // namespace eventcurve

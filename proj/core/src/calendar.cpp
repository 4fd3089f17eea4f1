#include "eventcurve/calendar.hpp"

#include <algorithm>

#include "eventcurve/csv.hpp"
#include "eventcurve/errors.hpp"

namespace eventcurve {

ShockType shock_type_from_string(std::string_view s) {
    if (s == "fiscal") return ShockType::Fiscal;
    if (s == "monetary_policy") return ShockType::MonetaryPolicy;
    if (s == "external") return ShockType::External;
    if (s == "political") return ShockType::Political;
    throw ParseError("unknown shock_type '" + std::string(s) +
                     "' (expected fiscal|monetary_policy|external|political)");
}

std::string_view to_string(ShockType t) {
    switch (t) {
        case ShockType::Fiscal: return "fiscal";
        case ShockType::MonetaryPolicy: return "monetary_policy";
        case ShockType::External: return "external";
        case ShockType::Political: return "political";
    }
    return "?";
}

const std::vector<ShockType>& all_shock_types() {
    static const std::vector<ShockType> kTypes = {
        ShockType::Fiscal, ShockType::MonetaryPolicy, ShockType::External, ShockType::Political};
    return kTypes;
}

TradingCalendar TradingCalendar::from_dates(std::vector<Date> dates) {
    for (size_t i = 1; i < dates.size(); ++i) {
        if (!(dates[i - 1] < dates[i]))
            throw ParseError("trading dates must be strictly increasing (violated at " +
                             dates[i].to_iso() + ")");
    }
    TradingCalendar cal;
    cal.dates_ = std::move(dates);
    return cal;
}

bool TradingCalendar::contains(Date d) const {
    return std::binary_search(dates_.begin(), dates_.end(), d);
}

Date TradingCalendar::last_on_or_before(Date d) const {
    auto it = std::upper_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.begin())
        throw NoTradingDate("no trading date on or before " + d.to_iso());
    return *std::prev(it);
}

Date TradingCalendar::first_on_or_after(Date d) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end())
        throw NoTradingDate("no trading date on or after " + d.to_iso());
    return *it;
}

Date TradingCalendar::first_strictly_after(Date d) const {
    auto it = std::upper_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end())
        throw NoTradingDate("no trading date after " + d.to_iso());
    return *it;
}

std::vector<Event> load_events(const std::filesystem::path& path) {
    CsvTable table = read_csv(path);
    const std::vector<std::string> expected = {"id", "shock_date", "shock_type",
                                               "prev_statement_date", "next_statement_date"};
    if (table.header != expected)
        throw ParseError(path.string() +
                         ": expected header id,shock_date,shock_type,"
                         "prev_statement_date,next_statement_date");

    std::vector<Event> events;
    events.reserve(table.rows.size());
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        auto fail = [&](const std::string& what) {
            throw ParseError(path.string() + ":" + std::to_string(r + 2) + ": " + what);
        };
        Event ev;
        ev.id = row[0];
        if (ev.id.empty()) fail("empty event id");
        auto shock = Date::try_from_iso(row[1]);
        if (!shock) fail("bad shock_date '" + row[1] + "'");
        ev.shock_date = *shock;
        try {
            ev.shock_type = shock_type_from_string(row[2]);
        } catch (const ParseError& e) {
            fail(e.what());
        }
        if (!row[3].empty()) {
            auto prev = Date::try_from_iso(row[3]);
            if (!prev) fail("bad prev_statement_date '" + row[3] + "'");
            ev.prev_statement_date = *prev;
        }
        if (row[4].empty()) fail("missing next_statement_date");
        auto next = Date::try_from_iso(row[4]);
        if (!next) fail("bad next_statement_date '" + row[4] + "'");
        ev.next_statement_date = *next;
        if (ev.next_statement_date < ev.shock_date)
            fail("next_statement_date precedes shock_date");
        events.push_back(std::move(ev));
    }
    return events;
}

Window build_shock_window(const TradingCalendar& cal, const Event& ev) {
    try {
        Date start = cal.last_on_or_before(ev.shock_date.plus_days(-1));
        Date end = cal.first_on_or_after(ev.shock_date);
        return Window{WindowKind::PreShockToShock, start, end};
    } catch (const NoTradingDate& e) {
        throw WindowUnavailable("shock window for event " + ev.id + ": " + e.what());
    }
}

Window build_statement_window(const TradingCalendar& cal, const Event& ev, Date effective_shock) {
    try {
        Date end = cal.first_strictly_after(ev.next_statement_date);
        return Window{WindowKind::ShockToStatement, effective_shock, end};
    } catch (const NoTradingDate& e) {
        throw WindowUnavailable("statement window for event " + ev.id + ": " + e.what());
    }
}

}  // namespace eventcurve

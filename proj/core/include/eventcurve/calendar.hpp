#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eventcurve/date.hpp"

namespace eventcurve {

enum class ShockType { Fiscal, MonetaryPolicy, External, Political };

ShockType shock_type_from_string(std::string_view s);  // fiscal|monetary_policy|external|political
std::string_view to_string(ShockType t);
// All four categories in a fixed reporting order.
const std::vector<ShockType>& all_shock_types();

// Trading days are exactly the dates on which market data exist.
class TradingCalendar {
public:
    // Validates: nonempty handling is deferred to queries; dates must be
    // strictly increasing with no duplicates.
    static TradingCalendar from_dates(std::vector<Date> dates);

    bool empty() const { return dates_.empty(); }
    size_t size() const { return dates_.size(); }
    const std::vector<Date>& dates() const { return dates_; }
    bool contains(Date d) const;

    Date last_on_or_before(Date d) const;     // throws NoTradingDate
    Date first_on_or_after(Date d) const;     // throws NoTradingDate
    Date first_strictly_after(Date d) const;  // throws NoTradingDate

private:
    std::vector<Date> dates_;
};

struct Event {
    std::string id;
    Date shock_date;
    ShockType shock_type = ShockType::Fiscal;
    std::optional<Date> prev_statement_date;
    Date next_statement_date;
};

// CSV header: id,shock_date,shock_type,prev_statement_date,next_statement_date
// Empty prev_statement_date means absent. Rows violating
// shock_date <= next_statement_date are rejected.
std::vector<Event> load_events(const std::filesystem::path& path);

enum class WindowKind { PreShockToShock, ShockToStatement };

struct Window {
    WindowKind kind = WindowKind::PreShockToShock;
    Date start_date;
    Date end_date;

    int length_days() const { return end_date - start_date; }
};

// Last trading day strictly before the shock through the first trading day on
// or after it. The window end is the effective shock date.
Window build_shock_window(const TradingCalendar& cal, const Event& ev);  // throws WindowUnavailable

// Effective shock date through the first trading day strictly after the next
// statement. Strict-after holds for every event, so a statement published on
// the shock date itself is measured on the next trading day.
Window build_statement_window(const TradingCalendar& cal, const Event& ev,
                              Date effective_shock);  // throws WindowUnavailable

}  // namespace eventcurve

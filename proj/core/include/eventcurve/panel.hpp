#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eventcurve/date.hpp"

namespace eventcurve {

// Daily series keyed by date. Rows sorted ascending; cells may be absent.
// Column order is preserved from the source file so that save() round-trips.
class Panel {
public:
    Panel() = default;
    Panel(std::vector<std::string> columns, std::vector<Date> dates,
          std::vector<std::vector<std::optional<double>>> cells);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<Date>& dates() const { return dates_; }
    size_t rows() const { return dates_.size(); }

    bool has_column(std::string_view name) const;
    std::optional<double> value(Date d, std::string_view column) const;  // throws UnknownField

    // Greatest date strictly before `cutoff` carrying a present value of
    // `column`; absent when none exists. Strict inequality is the
    // look-ahead guard.
    std::optional<double> asof_before(Date cutoff, std::string_view column) const;

    void save(const std::filesystem::path& path) const;

private:
    int column_index(std::string_view name) const;  // throws UnknownField
    int row_index(Date d) const;                    // -1 if absent

    std::vector<std::string> columns_;  // excludes the date column
    std::vector<Date> dates_;
    std::vector<std::vector<std::optional<double>>> cells_;  // [row][col]
};

using MarketPanel = Panel;
using ExpectationsPanel = Panel;

// market.csv: date,di_21d,di_252d,di_504d,fx,oil,vix,cds_5y,ust_10y
// (extra columns permitted). DI cells must be finite and positive.
MarketPanel load_market(const std::filesystem::path& path);

// focus.csv: date,selic_year,... — survey publication dates.
ExpectationsPanel load_focus(const std::filesystem::path& path);

inline std::optional<double> asof_merge(const ExpectationsPanel& exp, Date cutoff,
                                        std::string_view field) {
    return exp.asof_before(cutoff, field);
}

struct StatementDoc {
    Date statement_date;
    std::string text;
};

// Directory of UTF-8 files named YYYY-MM-DD.txt; returns docs sorted by date.
std::vector<StatementDoc> load_statements(const std::filesystem::path& dir);

}  // namespace eventcurve

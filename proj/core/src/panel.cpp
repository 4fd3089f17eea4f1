#include "eventcurve/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "eventcurve/csv.hpp"
#include "eventcurve/errors.hpp"

namespace eventcurve {

Panel::Panel(std::vector<std::string> columns, std::vector<Date> dates,
             std::vector<std::vector<std::optional<double>>> cells)
    : columns_(std::move(columns)), dates_(std::move(dates)), cells_(std::move(cells)) {}

bool Panel::has_column(std::string_view name) const {
    return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

int Panel::column_index(std::string_view name) const {
    auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw UnknownField(std::string(name));
    return static_cast<int>(it - columns_.begin());
}

int Panel::row_index(Date d) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d) return -1;
    return static_cast<int>(it - dates_.begin());
}

std::optional<double> Panel::value(Date d, std::string_view column) const {
    int c = column_index(column);
    int r = row_index(d);
    if (r < 0) return std::nullopt;
    return cells_[r][c];
}

std::optional<double> Panel::asof_before(Date cutoff, std::string_view column) const {
    int c = column_index(column);
    auto it = std::lower_bound(dates_.begin(), dates_.end(), cutoff);
    // walk back over dates strictly before the cutoff to the last present cell
    for (auto r = static_cast<int>(it - dates_.begin()) - 1; r >= 0; --r) {
        if (cells_[r][c].has_value()) return cells_[r][c];
    }
    return std::nullopt;
}

void Panel::save(const std::filesystem::path& path) const {
    CsvTable table;
    table.header.push_back("date");
    for (const auto& c : columns_) table.header.push_back(c);
    table.rows.reserve(dates_.size());
    for (size_t r = 0; r < dates_.size(); ++r) {
        std::vector<std::string> row;
        row.reserve(columns_.size() + 1);
        row.push_back(dates_[r].to_iso());
        for (const auto& cell : cells_[r])
            row.push_back(cell ? format_double(*cell) : std::string());
        table.rows.push_back(std::move(row));
    }
    write_csv(path, table);
}

namespace {

std::optional<double> parse_cell(const std::string& cell, const std::filesystem::path& path,
                                 size_t line_no, const std::string& column) {
    if (cell.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": column '" + column +
                         "': non-numeric value '" + cell + "'");
    if (!std::isfinite(v))
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": column '" + column +
                         "': non-finite value");
    return v;
}

Panel load_panel(const std::filesystem::path& path, const std::vector<std::string>& required) {
    CsvTable table = read_csv(path);
    if (table.header.empty() || table.header[0] != "date")
        throw ParseError(path.string() + ": first column must be 'date'");
    std::vector<std::string> columns(table.header.begin() + 1, table.header.end());
    for (const auto& req : required) {
        if (std::find(columns.begin(), columns.end(), req) == columns.end())
            throw ParseError(path.string() + ": missing required column '" + req + "'");
    }

    struct Row {
        Date date;
        size_t line_no;
        std::vector<std::optional<double>> cells;
    };
    std::vector<Row> rows;
    rows.reserve(table.rows.size());
    for (size_t r = 0; r < table.rows.size(); ++r) {
        size_t line_no = r + 2;
        const auto& raw = table.rows[r];
        auto date = Date::try_from_iso(raw[0]);
        if (!date)
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad date '" +
                             raw[0] + "'");
        Row row;
        row.date = *date;
        row.line_no = line_no;
        row.cells.reserve(columns.size());
        for (size_t c = 0; c < columns.size(); ++c)
            row.cells.push_back(parse_cell(raw[c + 1], path, line_no, columns[c]));
        rows.push_back(std::move(row));
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.date < b.date; });
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date)
            throw DuplicateDate(path.string() + ": date " + rows[i].date.to_iso() +
                                " appears more than once");
    }

    std::vector<Date> dates;
    std::vector<std::vector<std::optional<double>>> cells;
    dates.reserve(rows.size());
    cells.reserve(rows.size());
    for (auto& row : rows) {
        dates.push_back(row.date);
        cells.push_back(std::move(row.cells));
    }
    return Panel(std::move(columns), std::move(dates), std::move(cells));
}

}  // namespace

MarketPanel load_market(const std::filesystem::path& path) {
    Panel panel = load_panel(path, {"di_21d", "di_252d", "di_504d", "fx", "oil", "vix", "cds_5y",
                                    "ust_10y"});
    for (const auto& di : {"di_21d", "di_252d", "di_504d"}) {
        for (Date d : panel.dates()) {
            auto v = panel.value(d, di);
            if (v && *v <= 0.0)
                throw ParseError(path.string() + ": column '" + std::string(di) + "' at " +
                                 d.to_iso() + ": DI rate must be positive");
        }
    }
    return panel;
}

ExpectationsPanel load_focus(const std::filesystem::path& path) {
    return load_panel(path, {"selic_year"});
}

std::vector<StatementDoc> load_statements(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw ParseError("statements directory not found: " + dir.string());

    std::vector<StatementDoc> docs;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() != 14 || name.substr(10) != ".txt")
            throw BadFilename(name + " (expected YYYY-MM-DD.txt)");
        auto date = Date::try_from_iso(name.substr(0, 10));
        if (!date) throw BadFilename(name + " (expected YYYY-MM-DD.txt)");

        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        if (text.find_first_not_of(" \t\r\n") == std::string::npos)
            throw EmptyDocument(name);
        docs.push_back(StatementDoc{*date, std::move(text)});
    }

    std::sort(docs.begin(), docs.end(), [](const StatementDoc& a, const StatementDoc& b) {
        return a.statement_date < b.statement_date;
    });
    for (size_t i = 1; i < docs.size(); ++i) {
        if (docs[i].statement_date == docs[i - 1].statement_date)
            throw DuplicateDate("statement date " + docs[i].statement_date.to_iso() +
                                " appears more than once");
    }
    return docs;
}

}  // namespace eventcurve

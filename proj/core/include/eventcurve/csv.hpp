#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace eventcurve {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // every row has header.size() cells

    int column_index(std::string_view name) const;  // -1 if absent
};

// Minimal RFC-4180 reader: comma separated, optional double-quoted cells with
// "" escapes, tolerates CRLF. Every data row must match the header width.
CsvTable read_csv(const std::filesystem::path& path);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

// Quotes a cell only when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& cell);

void write_csv(const std::filesystem::path& path, const CsvTable& table);

}  // namespace eventcurve

#pragma once

#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "eventcurve/errors.hpp"

namespace eventcurve {

// Calendar date stored as days since 1970-01-01. Value type, no time zones.
class Date {
public:
    Date() = default;

    static Date from_serial(int days) { return Date(days); }

    // Strict "YYYY-MM-DD" parse; rejects impossible dates.
    static std::optional<Date> try_from_iso(std::string_view iso) {
        auto digit = [](char c) { return c >= '0' && c <= '9'; };
        if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
        for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
            if (!digit(iso[i])) return std::nullopt;

        int y = (iso[0] - '0') * 1000 + (iso[1] - '0') * 100 + (iso[2] - '0') * 10 + (iso[3] - '0');
        unsigned m = (iso[5] - '0') * 10u + (iso[6] - '0');
        unsigned d = (iso[8] - '0') * 10u + (iso[9] - '0');

        std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                        std::chrono::day{d}};
        if (!ymd.ok()) return std::nullopt;
        auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
        return Date(static_cast<int>(days));
    }

    static Date from_iso(std::string_view iso) {
        auto d = try_from_iso(iso);
        if (!d) throw ParseError("invalid ISO date '" + std::string(iso) + "' (expected YYYY-MM-DD)");
        return *d;
    }

    std::string to_iso() const {
        std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{serial_}}};
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
        return std::string(buf);
    }

    int serial() const { return serial_; }
    Date plus_days(int n) const { return Date(serial_ + n); }

    friend int operator-(Date a, Date b) { return a.serial_ - b.serial_; }
    auto operator<=>(const Date&) const = default;

private:
    explicit Date(int serial) : serial_(serial) {}
    int serial_ = 0;
};

}  // namespace eventcurve

#include <vector>

#include "doctest.h"
#include "eventcurve/calendar.hpp"
#include "eventcurve/errors.hpp"
#include "test_helpers.hpp"

using namespace eventcurve;

namespace {

Date D(const char* iso) { return Date::from_iso(iso); }

// Mon-Fri trading days over two weeks with a Wednesday holiday in week 2.
TradingCalendar sample_cal() {
    std::vector<Date> days;
    for (const char* iso : {"2017-03-06", "2017-03-07", "2017-03-08", "2017-03-09", "2017-03-10",
                            "2017-03-13", "2017-03-14", "2017-03-16", "2017-03-17"})
        days.push_back(D(iso));
    return TradingCalendar::from_dates(days);
}

}  // namespace

TEST_CASE("calendar: construction validates ordering") {
    CHECK_THROWS_AS(TradingCalendar::from_dates({D("2017-01-02"), D("2017-01-02")}), ParseError);
    CHECK_THROWS_AS(TradingCalendar::from_dates({D("2017-01-03"), D("2017-01-02")}), ParseError);
    CHECK(TradingCalendar::from_dates({}).empty());
}

TEST_CASE("calendar: queries") {
    const TradingCalendar cal = sample_cal();
    CHECK(cal.contains(D("2017-03-08")));
    CHECK_FALSE(cal.contains(D("2017-03-11")));  // Saturday
    CHECK_FALSE(cal.contains(D("2017-03-15")));  // holiday

    CHECK(cal.last_on_or_before(D("2017-03-08")) == D("2017-03-08"));
    CHECK(cal.last_on_or_before(D("2017-03-12")) == D("2017-03-10"));
    CHECK(cal.first_on_or_after(D("2017-03-08")) == D("2017-03-08"));
    CHECK(cal.first_on_or_after(D("2017-03-11")) == D("2017-03-13"));
    CHECK(cal.first_strictly_after(D("2017-03-08")) == D("2017-03-09"));
    CHECK(cal.first_strictly_after(D("2017-03-14")) == D("2017-03-16"));  // skips holiday

    CHECK_THROWS_AS(cal.last_on_or_before(D("2017-03-05")), NoTradingDate);
    CHECK_THROWS_AS(cal.first_on_or_after(D("2017-03-18")), NoTradingDate);
    CHECK_THROWS_AS(cal.first_strictly_after(D("2017-03-17")), NoTradingDate);
}

TEST_CASE("shock type: names round trip") {
    for (ShockType t : all_shock_types()) CHECK(shock_type_from_string(to_string(t)) == t);
    CHECK(to_string(ShockType::MonetaryPolicy) == "monetary_policy");
    CHECK_THROWS_AS(shock_type_from_string("weather"), ParseError);
    CHECK(all_shock_types().size() == 4);
}

TEST_CASE("windows: shock window brackets the shock date") {
    const TradingCalendar cal = sample_cal();
    Event ev;
    ev.id = "X";
    ev.shock_type = ShockType::Fiscal;

    SUBCASE("shock on a trading day") {
        ev.shock_date = D("2017-03-08");
        const Window w = build_shock_window(cal, ev);
        CHECK(w.start_date == D("2017-03-07"));
        CHECK(w.end_date == D("2017-03-08"));
        CHECK(w.length_days() == 1);
    }
    SUBCASE("shock on a weekend rolls forward") {
        ev.shock_date = D("2017-03-11");  // Saturday
        const Window w = build_shock_window(cal, ev);
        CHECK(w.start_date == D("2017-03-10"));
        CHECK(w.end_date == D("2017-03-13"));
        CHECK(w.length_days() == 3);
    }
    SUBCASE("shock on a holiday rolls forward") {
        ev.shock_date = D("2017-03-15");
        const Window w = build_shock_window(cal, ev);
        CHECK(w.start_date == D("2017-03-14"));
        CHECK(w.end_date == D("2017-03-16"));
    }
    SUBCASE("no trading day before the shock") {
        ev.shock_date = D("2017-03-06");  // first calendar entry
        CHECK_THROWS_AS(build_shock_window(cal, ev), WindowUnavailable);
    }
    SUBCASE("no trading day on or after the shock") {
        ev.shock_date = D("2017-03-20");
        CHECK_THROWS_AS(build_shock_window(cal, ev), WindowUnavailable);
    }
}

TEST_CASE("windows: statement window ends strictly after the statement") {
    const TradingCalendar cal = sample_cal();
    Event ev;
    ev.id = "X";
    ev.shock_date = D("2017-03-08");
    const Window w1 = build_shock_window(cal, ev);

    SUBCASE("statement later in the window") {
        ev.next_statement_date = D("2017-03-13");
        const Window w2 = build_statement_window(cal, ev, w1.end_date);
        CHECK(w2.start_date == w1.end_date);  // the two windows share the joint
        CHECK(w2.end_date == D("2017-03-14"));
    }
    SUBCASE("statement on the shock day itself still looks one day ahead") {
        ev.next_statement_date = D("2017-03-08");
        const Window w2 = build_statement_window(cal, ev, w1.end_date);
        CHECK(w2.start_date == D("2017-03-08"));
        CHECK(w2.end_date == D("2017-03-09"));
        CHECK(w2.length_days() == 1);
    }
    SUBCASE("statement on a non-trading day ends on the next trading day") {
        ev.next_statement_date = D("2017-03-15");  // holiday
        const Window w2 = build_statement_window(cal, ev, w1.end_date);
        CHECK(w2.end_date == D("2017-03-16"));
    }
    SUBCASE("no trading day after the statement") {
        ev.next_statement_date = D("2017-03-17");  // last calendar entry
        CHECK_THROWS_AS(build_statement_window(cal, ev, w1.end_date), WindowUnavailable);
    }
}

TEST_CASE("events: csv loading and validation") {
    const auto dir = testutil::scratch_dir("events");

    SUBCASE("happy path with empty prev") {
        const auto path = testutil::write_file(
            dir / "e.csv",
            "id,shock_date,shock_type,prev_statement_date,next_statement_date\n"
            "E1,2017-03-08,fiscal,2017-02-22,2017-03-13\n"
            "E2,2017-03-09,political,,2017-03-13\n");
        const auto events = load_events(path);
        REQUIRE(events.size() == 2);
        CHECK(events[0].id == "E1");
        CHECK(events[0].shock_type == ShockType::Fiscal);
        CHECK(events[0].prev_statement_date == D("2017-02-22"));
        CHECK(events[0].next_statement_date == D("2017-03-13"));
        CHECK_FALSE(events[1].prev_statement_date.has_value());
    }
    SUBCASE("wrong header rejected") {
        const auto path = testutil::write_file(
            dir / "bad_header.csv", "id,date,type,prev,next\nE1,2017-03-08,fiscal,,2017-03-13\n");
        CHECK_THROWS_AS(load_events(path), ParseError);
    }
    SUBCASE("empty next statement rejected") {
        const auto path = testutil::write_file(
            dir / "no_next.csv",
            "id,shock_date,shock_type,prev_statement_date,next_statement_date\n"
            "E1,2017-03-08,fiscal,,\n");
        CHECK_THROWS_WITH_AS(load_events(path), doctest::Contains(":2"), ParseError);
    }
    SUBCASE("statement before shock rejected") {
        const auto path = testutil::write_file(
            dir / "order.csv",
            "id,shock_date,shock_type,prev_statement_date,next_statement_date\n"
            "E1,2017-03-08,fiscal,,2017-03-07\n");
        CHECK_THROWS_AS(load_events(path), ParseError);
    }
    SUBCASE("unknown type rejected") {
        const auto path = testutil::write_file(
            dir / "type.csv",
            "id,shock_date,shock_type,prev_statement_date,next_statement_date\n"
            "E1,2017-03-08,weather,,2017-03-13\n");
        CHECK_THROWS_AS(load_events(path), ParseError);
    }
}

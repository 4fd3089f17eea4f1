// Acceptance harness for the event-study engine. Each criterion prints one
// [PASS]/[FAIL] line on stdout; the process exits 0 only when every
// criterion passes. All randomness comes from the fixed-seed oracle RNG, so
// the run is bit-reproducible.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "eventcurve/calendar.hpp"
#include "eventcurve/dataset.hpp"
#include "eventcurve/errors.hpp"
#include "eventcurve/estimators.hpp"
#include "eventcurve/panel.hpp"
#include "eventcurve/stats.hpp"
#include "eventcurve/textfeat.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace eventcurve;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", s);
    return buf;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

Eigen::MatrixXd to_eigen(const oracle::Mat& m) {
    Eigen::MatrixXd out(m.size(), m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
    return out;
}

Eigen::VectorXd to_eigen(const oracle::Vec& v) {
    Eigen::VectorXd out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out(i) = v[i];
    return out;
}

struct Design {
    oracle::Mat X;
    oracle::Vec y;
};

// Intercept column plus standard-normal regressors; linear signal with unit
// Gaussian noise. `centered` removes each regressor's sample mean exactly,
// which pins the large-lambda ridge intercept to mean(y) at round-off scale.
Design make_design(oracle::Rng& rng, int n, int k, bool centered) {
    Design d;
    d.X = oracle::Mat(n, oracle::Vec(k, 1.0));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < k; ++j) d.X[i][j] = rng.normal();
    if (centered) {
        for (int j = 1; j < k; ++j) {
            double m = 0.0;
            for (int i = 0; i < n; ++i) m += d.X[i][j];
            m /= n;
            for (int i = 0; i < n; ++i) d.X[i][j] -= m;
        }
    }
    oracle::Vec beta(k);
    for (int j = 0; j < k; ++j) beta[j] = -2.0 + 4.0 * rng.uniform();
    d.y.resize(n);
    for (int i = 0; i < n; ++i) {
        double v = 0.0;
        for (int j = 0; j < k; ++j) v += d.X[i][j] * beta[j];
        d.y[i] = v + rng.normal();
    }
    return d;
}

// --- criterion 1: OLS and HC3 agree with a brute-force reference ------------

bool crit_ols_oracle(std::string& note) {
    const auto t0 = Clock::now();
    oracle::Rng rng(0xC1000001ULL);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = rng.uniform_int(10, 60);
        const int k = rng.uniform_int(2, 8);
        const Design d = make_design(rng, n, k, false);
        const OlsFit fit = fit_ols(to_eigen(d.X), to_eigen(d.y));
        const oracle::OlsBrute ref = oracle::ols_brute(d.X, d.y);
        for (int j = 0; j < k; ++j) {
            if (!close_rel(fit.coef(j), ref.coef[j], 1e-10)) {
                note = "design " + std::to_string(rep) + ": coefficient " + std::to_string(j) +
                       " off by " + std::to_string(fit.coef(j) - ref.coef[j]);
                return false;
            }
            if (!close_rel(fit.hc3_se(j), ref.hc3_se[j], 1e-10)) {
                note = "design " + std::to_string(rep) + ": HC3 SE " + std::to_string(j) +
                       " off by " + std::to_string(fit.hc3_se(j) - ref.hc3_se[j]);
                return false;
            }
        }
    }
    const double secs = seconds_since(t0);
    note = "200 designs in " + fmt_secs(secs);
    if (secs >= 5.0) {
        note += " (budget 5s exceeded)";
        return false;
    }
    return true;
}

// --- criterion 2: ridge limiting behavior ------------------------------------

bool crit_ridge_limits(std::string& note) {
    oracle::Rng rng(0xC2000002ULL);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = rng.uniform_int(15, 50);
        const int k = rng.uniform_int(2, 8);
        const Design d = make_design(rng, n, k, true);
        const Eigen::MatrixXd X = to_eigen(d.X);
        const Eigen::VectorXd y = to_eigen(d.y);

        const OlsFit ols = fit_ols(X, y);
        const PenalizedFit zero = fit_ridge(X, y, 0.0);
        for (int j = 0; j < k; ++j) {
            if (!close_rel(zero.coef(j), ols.coef(j), 1e-8)) {
                note = "design " + std::to_string(rep) + ": lambda=0 coefficient " +
                       std::to_string(j) + " differs from OLS";
                return false;
            }
        }

        const PenalizedFit big = fit_ridge(X, y, 1e9);
        for (int j = 1; j < k; ++j) {
            if (std::abs(big.coef(j)) >= 1e-6) {
                note = "design " + std::to_string(rep) + ": slope " + std::to_string(j) +
                       " survives lambda=1e9: " + std::to_string(big.coef(j));
                return false;
            }
        }
        if (std::abs(big.coef(0) - y.mean()) > 1e-8) {
            note = "design " + std::to_string(rep) +
                   ": large-lambda intercept differs from mean(y) by " +
                   std::to_string(big.coef(0) - y.mean());
            return false;
        }
    }
    note = "50 designs";
    return true;
}

// --- criterion 3: lasso KKT stationarity -------------------------------------

bool crit_lasso_kkt(std::string& note) {
    const auto t0 = Clock::now();
    oracle::Rng rng(0xC3000003ULL);
    const double fracs[] = {0.75, 0.5, 0.25, 0.1, 0.02};
    for (int rep = 0; rep < 100; ++rep) {
        const int n = rng.uniform_int(20, 60);
        const int k = rng.uniform_int(2, 8);
        const int p = k - 1;
        const Design d = make_design(rng, n, k, false);
        const Eigen::MatrixXd X = to_eigen(d.X);
        const Eigen::VectorXd y = to_eigen(d.y);
        const double lmax = lasso_null_lambda(X, y);

        // Independent standardization for the stationarity check.
        Eigen::MatrixXd Z(n, p);
        Eigen::VectorXd sd(p);
        for (int j = 0; j < p; ++j) {
            const double m = X.col(j + 1).mean();
            const Eigen::ArrayXd c = X.col(j + 1).array() - m;
            sd(j) = std::sqrt(c.square().sum() / n);
            Z.col(j) = (c / sd(j)).matrix();
        }
        const Eigen::VectorXd yc = (y.array() - y.mean()).matrix();

        for (const double frac : fracs) {
            const double lam = frac * lmax;
            const PenalizedFit fit = fit_lasso(X, y, lam);
            Eigen::VectorXd bz(p);
            for (int j = 0; j < p; ++j) bz(j) = fit.coef(j + 1) * sd(j);
            const Eigen::VectorXd g = Z.transpose() * (yc - Z * bz) / n;
            for (int j = 0; j < p; ++j) {
                if (fit.coef(j + 1) == 0.0) {
                    if (std::abs(g(j)) > lam + 1e-6) {
                        note = "design " + std::to_string(rep) + ": zero coefficient " +
                               std::to_string(j) + " violates |g| <= lambda at lambda=" +
                               std::to_string(lam);
                        return false;
                    }
                } else if (std::abs(g(j) - lam * (bz(j) > 0 ? 1.0 : -1.0)) > 1e-6) {
                    note = "design " + std::to_string(rep) + ": active coefficient " +
                           std::to_string(j) + " violates stationarity at lambda=" +
                           std::to_string(lam);
                    return false;
                }
            }
        }

        for (const double lam : {lmax, 1.25 * lmax}) {
            const PenalizedFit null_fit = fit_lasso(X, y, lam);
            for (int j = 1; j < k; ++j) {
                if (null_fit.coef(j) != 0.0) {
                    note = "design " + std::to_string(rep) +
                           ": nonzero slope at/above the null threshold";
                    return false;
                }
            }
            if (!close_rel(null_fit.coef(0), y.mean(), 1e-15)) {
                note = "design " + std::to_string(rep) + ": null-model intercept is not mean(y)";
                return false;
            }
        }
    }
    const double secs = seconds_since(t0);
    note = "100 designs x 7 lambdas in " + fmt_secs(secs);
    if (secs >= 10.0) {
        note += " (budget 10s exceeded)";
        return false;
    }
    return true;
}

// --- criterion 4: LOO ridge equals an explicit refit loop --------------------

bool crit_loo_equivalence(std::string& note) {
    oracle::Rng rng(0xC4000004ULL);
    const double lambdas[] = {0.05, 0.7, 3.0};
    for (int rep = 0; rep < 20; ++rep) {
        const int n = rng.uniform_int(10, 30);
        const int k = rng.uniform_int(2, 5);
        const double lam = lambdas[rep % 3];
        const Design d = make_design(rng, n, k, false);
        const LooResult loo = loo_ridge(to_eigen(d.X), to_eigen(d.y), lam);

        for (int i = 0; i < n; ++i) {
            oracle::Mat fx;
            oracle::Vec fy;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                fx.push_back(d.X[r]);
                fy.push_back(d.y[r]);
            }
            const oracle::Vec coef = oracle::ridge_brute(fx, fy, lam);
            double pred = 0.0;
            for (int j = 0; j < k; ++j) pred += d.X[i][j] * coef[j];
            if (std::abs(pred - loo.predictions(i)) > 1e-12 * (1.0 + std::abs(pred))) {
                note = "design " + std::to_string(rep) + " fold " + std::to_string(i) +
                       ": prediction differs from the explicit refit by " +
                       std::to_string(pred - loo.predictions(i));
                return false;
            }
        }
    }

    // Pure-noise design: out-of-sample R^2 must be non-positive.
    const int n = 40, k = 5;
    Design noise = make_design(rng, n, k, false);
    for (int i = 0; i < n; ++i) noise.y[i] = rng.normal();  // sever the signal
    const LooResult loo = loo_ridge(to_eigen(noise.X), to_eigen(noise.y), 0.1);
    if (!(loo.r2 <= 0.0)) {
        note = "pure-noise LOO r2 = " + std::to_string(loo.r2) + " (expected <= 0)";
        return false;
    }
    note = "20 designs + pure-noise r2 " + std::to_string(loo.r2);
    return true;
}

// --- criterion 5: HC3 interval coverage of planted coefficients --------------

// Event rows with independent, continuously varying regressors; the response
// is overwritten by each simulation draw.
std::vector<EventRow> simulated_rows(oracle::Rng& rng, int n) {
    std::vector<EventRow> rows;
    rows.reserve(n);
    const auto& types = all_shock_types();
    for (int i = 0; i < n; ++i) {
        EventRow r;
        r.event_id = "S" + std::to_string(100 + i);
        r.shock_type = types[i % types.size()];
        // Variance-matched uniforms (sd 25, 1.2, 2, 8): bounded leverage.
        r.d_di252_shock = 86.603 * (rng.uniform() - 0.5);
        r.d_fx_shock = 4.1569 * (rng.uniform() - 0.5);
        r.d_vix_shock = 6.9282 * (rng.uniform() - 0.5);
        r.d_cds_shock = 27.713 * (rng.uniform() - 0.5);
        // Text features cluster at a neutral point with a continuous spread
        // around it, like scored statements do.
        r.tone = rng.uniform() < 1.0 / 3.0 ? 0.0 : 2.0 * rng.uniform() - 1.0;
        r.guidance_direction = rng.uniform_int(-1, 1);
        r.guidance_explicitness = rng.uniform();
        r.guidance_score = r.guidance_direction * r.guidance_explicitness;
        r.uncertainty_level = rng.uniform() < 1.0 / 3.0 ? 0.5 : rng.uniform();
        r.uncertainty_change = rng.uniform() < 1.0 / 3.0 ? 0.0 : 0.6 * rng.uniform() - 0.3;
        r.selic_year_pre = 8.0 + 6.0 * rng.uniform();
        rows.push_back(r);
    }
    return rows;
}

bool crit_hc3_coverage(std::string& note) {
    oracle::Rng rng(0xC5000005ULL);
    const int n = 59, reps = 500;
    const std::vector<double> theta = {2.0, 0.45, 0.3, -0.2, 0.1, 3.0, 1.5, -2.0, 0.8, -0.5};
    const SpecConfig spec = spec_by_name("di252_baseline");
    const double tcrit = student_t_quantile(0.975, static_cast<double>(n - 10));

    std::vector<int> covered(theta.size(), 0);
    for (int rep = 0; rep < reps; ++rep) {
        const std::vector<EventRow> rows = simulated_rows(rng, n);
        const BuiltDesign d = build_design(rows, spec, default_controls());
        if (d.X.cols() != static_cast<int>(theta.size())) {
            note = "unexpected design width " + std::to_string(d.X.cols());
            return false;
        }
        Eigen::VectorXd tv(theta.size());
        for (size_t j = 0; j < theta.size(); ++j) tv(j) = theta[j];
        const Eigen::VectorXd signal = d.X * tv;
        // Noise scale grows with the magnitude of every regressor, so each
        // coefficient direction sees genuine heteroskedasticity coupled to
        // its own leverage points — the regime HC3 exists for. Near-constant
        // noise would instead let the finite-sample HC3 inflation dominate
        // and push coverage above the nominal band. Population moments of
        // simulated_rows(), column by column.
        const double mu[] = {0, 0, 0, 0, 0, 0, 0, 0.5, 0, 11.0};
        const double sd[] = {1, 25.0, 1.2, 2.0, 8.0, 0.47140, 0.47140, 0.23570, 0.14142, 1.73205};
        Eigen::VectorXd y(n);
        for (int i = 0; i < n; ++i) {
            double sumz2 = 0.0;
            for (int j = 1; j < 10; ++j) {
                const double z = (d.X(i, j) - mu[j]) / sd[j];
                sumz2 += z * z;
            }
            const double sigma = std::sqrt(0.02 + sumz2);
            y(i) = signal(i) + sigma * rng.normal();
        }
        const OlsFit fit = fit_ols(d.X, y);
        for (size_t j = 0; j < theta.size(); ++j) {
            if (std::abs(theta[j] - fit.coef(j)) <= tcrit * fit.hc3_se(j)) ++covered[j];
        }
    }

    std::string rates;
    bool ok = true;
    for (size_t j = 0; j < covered.size(); ++j) {
        rates += (j ? "," : "") + std::to_string(covered[j]);
        if (covered[j] < 465 || covered[j] > 485) ok = false;
    }
    note = (ok ? "coverage counts " : "coverage counts outside 465..485: ") + rates + " of 500";
    return ok;
}

// --- criterion 6: calendar construction and the same-day statement rule ------

bool crit_calendar_same_day(std::string& note) {
    // A gap-free weekday calendar for 2017 (2017-01-02 is a Monday).
    const Date base = Date::from_iso("2017-01-02");
    std::vector<Date> td;
    for (int d = 0; d < 363; ++d)
        if (d % 7 < 5) td.push_back(base.plus_days(d));

    const std::vector<std::string> cols = {"di_21d", "di_252d", "di_504d", "fx",
                                           "oil",    "vix",     "cds_5y",  "ust_10y"};
    std::vector<std::vector<std::optional<double>>> cells;
    for (size_t i = 0; i < td.size(); ++i)
        cells.push_back({13.0 + 0.001 * i, 13.5 + 0.001 * i, 14.0 + 0.001 * i, 3.2 + 1e-4 * i,
                         45.0 + 0.01 * i, 13.0 + 0.005 * i, 280.0 + 0.05 * i, 1.6 + 2e-4 * i});
    const MarketPanel market(cols, td, cells);
    const TradingCalendar cal = TradingCalendar::from_dates(td);
    const ExpectationsPanel focus({"selic_year"}, {Date::from_iso("2016-12-30")}, {{12.0}});

    const auto& types = all_shock_types();
    std::vector<Event> events;
    std::map<Date, StatementFeatures> features;
    int same_day_expected = 0;
    for (int i = 0; i < 59; ++i) {
        int idx = 3 + (i * 4) % 250;
        const bool same_day = (i % 5 == 0);
        const bool weekend = (i % 7 == 2) && !same_day;
        Event ev;
        char id[8];
        std::snprintf(id, sizeof(id), "A%02d", i + 1);
        ev.id = id;
        if (weekend) idx += 4 - idx % 5;          // move to a Friday...
        ev.shock_date = weekend ? td[idx].plus_days(1)  // ...and shock on the Saturday
                                : td[idx];
        ev.shock_type = types[i % types.size()];
        ev.next_statement_date = same_day ? ev.shock_date : ev.shock_date.plus_days(3);
        if (same_day) ++same_day_expected;
        features[ev.next_statement_date] = StatementFeatures{};
        events.push_back(ev);
    }
    Event bad;  // shock on the very first trading day: no prior trading day exists
    bad.id = "A60";
    bad.shock_date = td[0];
    bad.shock_type = ShockType::External;
    bad.next_statement_date = td[0].plus_days(3);
    features[bad.next_statement_date] = StatementFeatures{};
    events.push_back(bad);

    const EventTable table = build_event_rows(events, cal, market, focus, features);
    if (table.rows.size() != 59 || table.drops.size() != 1) {
        note = "expected 60 -> 59 with one drop; got " + std::to_string(table.rows.size()) +
               " rows, " + std::to_string(table.drops.size()) + " drops";
        return false;
    }
    if (table.drops[0].event_id != "A60" ||
        table.drops[0].reason.find("shock_window") == std::string::npos) {
        note = "unexpected drop record " + table.drops[0].event_id + ": " +
               table.drops[0].reason;
        return false;
    }

    int same_day_seen = 0;
    for (const EventRow& r : table.rows) {
        if (r.statement_window.start_date != r.shock_window.end_date ||
            r.effective_shock_date != r.shock_window.end_date) {
            note = "event " + r.event_id + ": the two windows do not share the effective date";
            return false;
        }
        if (!(r.statement_window.end_date > r.statement_date)) {
            note = "event " + r.event_id + ": statement window does not end strictly after " +
                   r.statement_date.to_iso();
            return false;
        }
        if (!(r.shock_window.start_date < r.shock_date)) {
            note = "event " + r.event_id + ": shock window does not start before the shock";
            return false;
        }
        if (r.statement_date == r.shock_date) ++same_day_seen;
    }
    if (same_day_seen != same_day_expected) {
        note = "same-day events: " + std::to_string(same_day_seen) + " retained, expected " +
               std::to_string(same_day_expected);
        return false;
    }
    note = "59 of 60 events retained, " + std::to_string(same_day_seen) + " same-day";
    return true;
}

// --- criterion 7: the as-of merge never reads the future ----------------------

Panel truncate_strictly_before(const Panel& p, Date cutoff) {
    std::vector<Date> dates;
    std::vector<std::vector<std::optional<double>>> cells;
    for (const Date d : p.dates()) {
        if (!(d < cutoff)) continue;
        dates.push_back(d);
        std::vector<std::optional<double>> row;
        for (const auto& c : p.columns()) row.push_back(p.value(d, c));
        cells.push_back(row);
    }
    return Panel(p.columns(), dates, cells);
}

bool crit_lookahead_audit(std::string& note) {
    const MarketPanel market = load_market(FIXTURE_DIR "/market.csv");
    const ExpectationsPanel focus = load_focus(FIXTURE_DIR "/focus.csv");
    const std::vector<Event> events = load_events(FIXTURE_DIR "/events.csv");
    const Lexicon lex = Lexicon::load(LEXICON_PATH);
    const auto features = score_corpus(load_statements(FIXTURE_DIR "/statements"), lex);
    const TradingCalendar cal = TradingCalendar::from_dates(market.dates());

    const EventTable full = build_event_rows(events, cal, market, focus, features);
    if (full.rows.empty()) {
        note = "fixture build produced no rows";
        return false;
    }

    std::map<std::string, Event> by_id;
    for (const Event& ev : events) by_id[ev.id] = ev;

    for (const EventRow& row : full.rows) {
        const ExpectationsPanel cut = truncate_strictly_before(focus, row.shock_window.start_date);
        const EventTable one = build_event_rows({by_id.at(row.event_id)}, cal, market, cut,
                                                features);
        if (one.rows.size() != 1) {
            note = "event " + row.event_id + " dropped after deleting future survey rows";
            return false;
        }
        if (one.rows[0].selic_year_pre != row.selic_year_pre) {
            note = "event " + row.event_id + ": selic_year_pre changed from " +
                   std::to_string(row.selic_year_pre) + " to " +
                   std::to_string(one.rows[0].selic_year_pre);
            return false;
        }
    }
    note = std::to_string(full.rows.size()) + " events audited";
    return true;
}

// --- criterion 8: text-scoring invariants -------------------------------------

bool crit_text_invariants(std::string& note) {
    const Lexicon lex = Lexicon::load(LEXICON_PATH);
    const Lexicon swapped = lex.with_swapped_polarity();
    const std::vector<const std::vector<std::string>*> pools = {
        &lex.hawk_terms,      &lex.dove_terms,    &lex.neutral_markers, &lex.uncertainty_terms,
        &lex.guidance_tighten, &lex.guidance_ease, &lex.guidance_explicit};
    const std::vector<std::string> fillers = {"the",  "committee", "assessed", "recent",
                                              "data", "and",       "scenario", "ahead"};

    oracle::Rng rng(0xC8000008ULL);
    int toned = 0, guided = 0;
    for (int i = 0; i < 1000; ++i) {
        std::string text;
        const int nsent = rng.uniform_int(2, 8);
        for (int s = 0; s < nsent; ++s) {
            std::string sentence;
            if (rng.uniform() < 0.7 && !lex.scope_markers.empty())
                sentence += lex.scope_markers[rng.uniform_int(
                                0, static_cast<int>(lex.scope_markers.size()) - 1)] +
                            " ";
            const int ntok = rng.uniform_int(3, 9);
            for (int t = 0; t < ntok; ++t) {
                if (rng.uniform() < 0.45) {
                    sentence += fillers[rng.uniform_int(0, static_cast<int>(fillers.size()) - 1)];
                } else {
                    const auto& pool =
                        *pools[rng.uniform_int(0, static_cast<int>(pools.size()) - 1)];
                    sentence += pool[rng.uniform_int(0, static_cast<int>(pool.size()) - 1)];
                }
                sentence += " ";
            }
            text += sentence + ". ";
        }
        const StatementDoc doc{Date::from_iso("2017-01-01").plus_days(i % 300), text};
        const StatementFeatures f = score_statement(doc, nullptr, lex);
        const StatementFeatures g = score_statement(doc, nullptr, swapped);

        if (!(f.tone >= -1.0 && f.tone <= 1.0)) {
            note = "doc " + std::to_string(i) + ": tone out of range: " + std::to_string(f.tone);
            return false;
        }
        if (g.tone != -f.tone || g.guidance_direction != -f.guidance_direction) {
            note = "doc " + std::to_string(i) + ": polarity swap is not an exact negation";
            return false;
        }
        if (g.guidance_explicitness != f.guidance_explicitness ||
            g.uncertainty_level != f.uncertainty_level ||
            g.uncertainty_change != f.uncertainty_change) {
            note = "doc " + std::to_string(i) + ": polarity swap moved a polarity-free feature";
            return false;
        }
        if (f.guidance_score != f.guidance_direction * f.guidance_explicitness ||
            g.guidance_score != -f.guidance_score) {
            note = "doc " + std::to_string(i) + ": guidance_score is not direction x explicitness";
            return false;
        }
        if (f.tone != 0.0) ++toned;
        if (f.guidance_direction != 0) ++guided;
    }
    if (toned < 100 || guided < 50) {
        note = "generator too weak: " + std::to_string(toned) + " toned, " +
               std::to_string(guided) + " guided docs";
        return false;
    }
    note = "1000 docs (" + std::to_string(toned) + " toned, " + std::to_string(guided) +
           " with guidance)";
    return true;
}

// --- criterion 9: composition shares and subgroup gating ----------------------

bool crit_composition(std::string& note) {
    oracle::Rng rng(0xC9000009ULL);
    std::vector<EventRow> rows = simulated_rows(rng, 59);
    const int counts[] = {24, 16, 10, 9};
    const ShockType order[] = {ShockType::Fiscal, ShockType::MonetaryPolicy, ShockType::External,
                               ShockType::Political};
    int at = 0;
    for (int g = 0; g < 4; ++g)
        for (int c = 0; c < counts[g]; ++c) rows[at++].shock_type = order[g];
    for (EventRow& r : rows)
        r.d_di252_statement = 2.0 + 0.45 * r.d_di252_shock + 3.0 * r.tone + rng.normal();

    const auto comp = sample_summary(rows);
    const double want[] = {40.7, 27.1, 16.9, 15.3};
    if (comp.size() != 4) {
        note = "expected 4 composition rows, got " + std::to_string(comp.size());
        return false;
    }
    for (int g = 0; g < 4; ++g) {
        if (comp[g].type != order[g] || comp[g].count != counts[g] ||
            std::abs(comp[g].share_pct - want[g]) > 0.05) {
            note = "composition row " + std::to_string(g) + ": " +
                   std::string(to_string(comp[g].type)) + " " + std::to_string(comp[g].count) +
                   " " + std::to_string(comp[g].share_pct);
            return false;
        }
    }

    FitOptions opts;
    opts.min_subgroup_n = 20;
    const SubgroupFits sg = subgroup_fits(rows, spec_by_name("di252_baseline"), opts);
    if (sg.fitted.size() != 1 || sg.fitted[0].type != ShockType::Fiscal ||
        sg.fitted[0].n != 24) {
        note = "expected the 24-event group to be the only subgroup fit; got " +
               std::to_string(sg.fitted.size()) + " fits";
        return false;
    }
    if (sg.skipped.size() != 3) {
        note = "expected 3 skipped subgroups, got " + std::to_string(sg.skipped.size());
        return false;
    }
    for (const auto& s : sg.skipped) {
        if (s.reason != "below_min_n") {
            note = std::string("unexpected skip reason for ") + std::string(to_string(s.type)) +
                   ": " + s.reason;
            return false;
        }
    }
    note = "shares within 0.05; only the largest group fitted at min_n=20";
    return true;
}

// --- criterion 10: end-to-end determinism against golden outputs --------------

int run_binary(const std::string& args) {
    const std::string cmd = std::string(EVENTCURVE_BIN) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

bool crit_determinism(std::string& note) {
    const auto t0 = Clock::now();
    const fs::path dir = testutil::scratch_dir("acceptance_e2e");
    const std::string fixtures = FIXTURE_DIR;
    std::string cfg_text;
    cfg_text += "events = " + fixtures + "/events.csv\n";
    cfg_text += "market = " + fixtures + "/market.csv\n";
    cfg_text += "focus = " + fixtures + "/focus.csv\n";
    cfg_text += "statements_dir = " + fixtures + "/statements\n";
    cfg_text += "lexicon = " + std::string(LEXICON_PATH) + "\n";
    cfg_text += "output_dir = " + (dir / "unused").string() + "\n";
    cfg_text += "sample_start = 2016-08-31\n";
    cfg_text += "min_subgroup_n = 8\n";
    const fs::path cfg = testutil::write_file(dir / "run.cfg", cfg_text);

    const fs::path out_a = dir / "a", out_b = dir / "b";
    for (const fs::path& out : {out_a, out_b}) {
        const int rc = run_binary("all -c " + cfg.string() + " -o " + out.string());
        if (rc != 0) {
            note = "pipeline run into " + out.filename().string() + " exited " +
                   std::to_string(rc);
            return false;
        }
    }

    const char* names[] = {"events_dataset.csv",     "drops.csv",
                           "fits.json",              "table1_composition.csv",
                           "table2.csv",             "fig2_tone_series.csv",
                           "fig3_distributions.csv", "fig4_scatter.csv",
                           "fig5_by_type.csv",       "figA1_rmse.csv",
                           "figA2_text_coefs.csv",   "figA3_forest.csv"};
    for (const char* name : names) {
        const std::string a = testutil::read_file(out_a / name);
        if (a.empty()) {
            note = std::string(name) + " is missing or empty";
            return false;
        }
        if (a != testutil::read_file(out_b / name)) {
            note = std::string(name) + " differs between two identical runs";
            return false;
        }
        if (a != testutil::read_file(fs::path(GOLDEN_DIR) / name)) {
            note = std::string(name) + " differs from the golden copy";
            return false;
        }
    }
    const double secs = seconds_since(t0);
    note = "two runs + golden diff in " + fmt_secs(secs);
    if (secs >= 10.0) {
        note += " (budget 10s exceeded)";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Entry> criteria = {
        {"ols-vs-brute-force-oracle", crit_ols_oracle},
        {"ridge-limit-behavior", crit_ridge_limits},
        {"lasso-kkt-stationarity", crit_lasso_kkt},
        {"loo-ridge-refit-equivalence", crit_loo_equivalence},
        {"hc3-interval-coverage", crit_hc3_coverage},
        {"calendar-same-day-rule", crit_calendar_same_day},
        {"look-ahead-audit", crit_lookahead_audit},
        {"text-scoring-invariants", crit_text_invariants},
        {"composition-and-subgroup-gating", crit_composition},
        {"end-to-end-determinism", crit_determinism},
    };

    int failures = 0;
    for (const Entry& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s — %s\n", ok ? "PASS" : "FAIL", c.name, note.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

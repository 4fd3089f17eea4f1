// Microbenchmarks for the hot paths: the estimator stack on a
// dataset-sized design, statement scoring, and the full dataset build.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "eventcurve/calendar.hpp"
#include "eventcurve/dataset.hpp"
#include "eventcurve/estimators.hpp"
#include "eventcurve/panel.hpp"
#include "eventcurve/stats.hpp"
#include "eventcurve/textfeat.hpp"

using namespace eventcurve;

namespace {

// splitmix64, so that benchmark inputs are identical on every run.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double normal() {
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
    }
};

struct Problem {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
};

Problem dataset_sized_problem(int n, int k) {
    Rng rng{0xBE7C4ULL};
    Problem p;
    p.X = Eigen::MatrixXd::Ones(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < k; ++j) p.X(i, j) = rng.normal();
    p.y.resize(n);
    for (int i = 0; i < n; ++i) p.y(i) = 0.4 * p.X.row(i).sum() + rng.normal();
    return p;
}

std::string synthetic_statement(int sentences) {
    std::string text;
    for (int s = 0; s < sentences; ++s) {
        text +=
            "The committee judged that inflation expectations remain consistent with the "
            "baseline scenario, although upside risks and heightened uncertainty about the "
            "fiscal outlook may require a slower pace of easing at the next meetings. ";
    }
    return text;
}

void BM_FitOls(benchmark::State& state) {
    const Problem p = dataset_sized_problem(59, 10);
    for (auto _ : state) benchmark::DoNotOptimize(fit_ols(p.X, p.y));
}
BENCHMARK(BM_FitOls);

void BM_FitRidge(benchmark::State& state) {
    const Problem p = dataset_sized_problem(59, 10);
    for (auto _ : state) benchmark::DoNotOptimize(fit_ridge(p.X, p.y, 1.0));
}
BENCHMARK(BM_FitRidge);

void BM_FitLasso(benchmark::State& state) {
    const Problem p = dataset_sized_problem(59, 10);
    const double lam = 0.1 * lasso_null_lambda(p.X, p.y);
    for (auto _ : state) benchmark::DoNotOptimize(fit_lasso(p.X, p.y, lam));
}
BENCHMARK(BM_FitLasso);

void BM_LooRidge(benchmark::State& state) {
    const Problem p = dataset_sized_problem(59, 10);
    for (auto _ : state) benchmark::DoNotOptimize(loo_ridge(p.X, p.y, 1.0));
}
BENCHMARK(BM_LooRidge);

void BM_StudentTPValue(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(student_t_two_sided_p(1.0 + t, 49.0));
    }
}
BENCHMARK(BM_StudentTPValue);

void BM_ScoreStatement(benchmark::State& state) {
    const Lexicon lex = Lexicon::load(LEXICON_PATH);
    const StatementDoc doc{Date::from_iso("2017-05-31"),
                           synthetic_statement(static_cast<int>(state.range(0)))};
    for (auto _ : state) benchmark::DoNotOptimize(score_statement(doc, nullptr, lex));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScoreStatement)->Arg(8)->Arg(32)->Arg(128)->Complexity();

void BM_BuildEventRows(benchmark::State& state) {
    const MarketPanel market = load_market(FIXTURE_DIR "/market.csv");
    const ExpectationsPanel focus = load_focus(FIXTURE_DIR "/focus.csv");
    const std::vector<Event> events = load_events(FIXTURE_DIR "/events.csv");
    const Lexicon lex = Lexicon::load(LEXICON_PATH);
    const auto features = score_corpus(load_statements(FIXTURE_DIR "/statements"), lex);
    const TradingCalendar cal = TradingCalendar::from_dates(market.dates());
    for (auto _ : state)
        benchmark::DoNotOptimize(build_event_rows(events, cal, market, focus, features));
}
BENCHMARK(BM_BuildEventRows);

}  // namespace

BENCHMARK_MAIN();

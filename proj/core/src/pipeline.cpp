#include "eventcurve/pipeline.hpp"

#include <filesystem>

#include "eventcurve/calendar.hpp"
#include "eventcurve/dataset.hpp"
#include "eventcurve/errors.hpp"
#include "eventcurve/estimators.hpp"
#include "eventcurve/panel.hpp"
#include "eventcurve/report.hpp"
#include "eventcurve/textfeat.hpp"

namespace eventcurve {

namespace {

namespace fs = std::filesystem;

fs::path require_artifact(const RunConfig& cfg, const char* name, const char* producer) {
    const fs::path p = cfg.output_dir / name;
    if (!fs::exists(p))
        throw MissingPrerequisiteError(std::string(name) + " not found in " +
                                       cfg.output_dir.string() + "; run '" + producer + "' first");
    return p;
}

std::vector<SpecConfig> configured_specs(const RunConfig& cfg) {
    if (cfg.specs.empty()) return default_specs();
    std::vector<SpecConfig> specs;
    for (const auto& name : cfg.specs) specs.push_back(spec_by_name(name));
    return specs;
}

}  // namespace

void run_build(const RunConfig& cfg) {
    cfg.validate();

    const MarketPanel market = load_market(cfg.market);
    const TradingCalendar calendar = TradingCalendar::from_dates(market.dates());
    const ExpectationsPanel focus = load_focus(cfg.focus);
    const std::vector<Event> events = load_events(cfg.events);
    const std::vector<StatementDoc> docs = load_statements(cfg.statements_dir);
    const Lexicon lexicon = Lexicon::load(cfg.lexicon);
    const auto features = score_corpus(docs, lexicon, cfg.text);

    const EventTable table =
        build_event_rows(events, calendar, market, focus, features, cfg.build);

    fs::create_directories(cfg.output_dir);
    save_event_table(table, cfg.output_dir / outputs::kDataset, cfg.output_dir / outputs::kDrops);
}

void run_fit(const RunConfig& cfg) {
    cfg.validate();
    const fs::path dataset = require_artifact(cfg, outputs::kDataset, "build");
    const std::vector<EventRow> rows = load_event_rows(dataset);

    std::vector<SpecRunResult> results;
    std::vector<SkippedSpec> skipped;
    for (const SpecConfig& spec : configured_specs(cfg)) {
        try {
            results.push_back(run_spec(rows, spec, cfg.fit));
        } catch (const InsufficientSample& e) {
            skipped.push_back({spec.name, e.what()});
        } catch (const EmptySample& e) {
            skipped.push_back({spec.name, e.what()});
        }
    }

    // Per-type fits accompany the baseline specification when it ran.
    std::string subgroup_spec;
    SubgroupFits subgroups;
    for (const auto& res : results) {
        if (res.spec.name == "di252_baseline") {
            subgroup_spec = res.spec.name;
            subgroups = subgroup_fits(rows, res.spec, cfg.fit);
            break;
        }
    }

    fs::create_directories(cfg.output_dir);
    write_fits_json(cfg.output_dir / outputs::kFits, results, skipped, subgroup_spec,
                    subgroup_spec.empty() ? nullptr : &subgroups);
    if (!rows.empty()) write_table1(cfg.output_dir / outputs::kTable1, sample_summary(rows));
    write_table2(cfg.output_dir / outputs::kTable2, results);
}

void run_figures(const RunConfig& cfg) {
    cfg.validate();
    const fs::path dataset = require_artifact(cfg, outputs::kDataset, "build");
    const fs::path fits_path = require_artifact(cfg, outputs::kFits, "fit");

    const std::vector<EventRow> rows = load_event_rows(dataset);
    const FitsFile fits = read_fits_json(fits_path);

    // The tone series covers the whole statement corpus, not only the
    // statements attached to retained events.
    const std::vector<StatementDoc> docs = load_statements(cfg.statements_dir);
    const Lexicon lexicon = Lexicon::load(cfg.lexicon);
    const auto features = score_corpus(docs, lexicon, cfg.text);

    fs::create_directories(cfg.output_dir);
    write_fig2_tone(cfg.output_dir / outputs::kFig2, features);
    write_fig3_distributions(cfg.output_dir / outputs::kFig3, rows);
    write_fig4_scatter(cfg.output_dir / outputs::kFig4, rows);
    write_fig5_by_type(cfg.output_dir / outputs::kFig5, rows);
    write_figA1_rmse(cfg.output_dir / outputs::kFigA1, fits);
    write_figA2_text_coefs(cfg.output_dir / outputs::kFigA2, fits);
    write_figA3_forest(cfg.output_dir / outputs::kFigA3, fits);
}

void run_all(const RunConfig& cfg) {
    run_build(cfg);
    run_fit(cfg);
    run_figures(cfg);
}

}  // namespace eventcurve

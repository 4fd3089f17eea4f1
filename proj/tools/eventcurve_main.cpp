// eventcurve: command-line front end for the two-stage event-study pipeline.
//
// Exit codes: 0 success, 1 internal error, 2 bad input, 3 missing
// prerequisite artifact (stages run out of order).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eventcurve/errors.hpp"
#include "eventcurve/pipeline.hpp"

namespace {

struct CliOptions {
    std::string config;
    std::string output_dir;
    std::string sample_start;
    std::string specs;
};

void add_common_options(CLI::App* sub, CliOptions& opt) {
    sub->add_option("-c,--config", opt.config, "Run configuration file (key = value lines)")
        ->required();
    sub->add_option("-o,--output-dir", opt.output_dir,
                    "Override the configured output directory");
    sub->add_option("--sample-start", opt.sample_start,
                    "Override the sample start date (YYYY-MM-DD)");
    sub->add_option("--specs", opt.specs,
                    "Override the specification list (comma-separated names)");
}

std::vector<std::string> split_csv_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eventcurve: two-stage event-study engine for yield-curve repricing"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* cmd_build = app.add_subcommand("build", "Ingest inputs and build the event dataset");
    CLI::App* cmd_fit = app.add_subcommand("fit", "Estimate all specifications on the dataset");
    CLI::App* cmd_figures = app.add_subcommand("figures", "Emit table and figure data files");
    CLI::App* cmd_all = app.add_subcommand("all", "build + fit + figures");
    for (CLI::App* sub : {cmd_build, cmd_fit, cmd_figures, cmd_all}) add_common_options(sub, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        eventcurve::RunConfig cfg = eventcurve::RunConfig::load(opt.config);
        if (!opt.output_dir.empty()) cfg.output_dir = opt.output_dir;
        if (!opt.sample_start.empty())
            cfg.build.sample_start = eventcurve::Date::from_iso(opt.sample_start);
        if (!opt.specs.empty()) cfg.specs = split_csv_list(opt.specs);

        if (cmd_build->parsed())
            eventcurve::run_build(cfg);
        else if (cmd_fit->parsed())
            eventcurve::run_fit(cfg);
        else if (cmd_figures->parsed())
            eventcurve::run_figures(cfg);
        else
            eventcurve::run_all(cfg);
        return 0;
    } catch (const eventcurve::Error& e) {
        std::cerr << "eventcurve: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "eventcurve: internal error: " << e.what() << "\n";
        return 1;
    }
}

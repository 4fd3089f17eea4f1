#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eventcurve/dataset.hpp"
#include "eventcurve/estimators.hpp"
#include "eventcurve/textfeat.hpp"

namespace eventcurve {

// Everything one pipeline run needs. Loaded from a `key = value` file
// (blank lines and #-comments ignored); relative paths are resolved
// against the config file's directory. Unknown or duplicate keys are
// rejected.
struct RunConfig {
    std::filesystem::path events;          // key: events
    std::filesystem::path market;          // key: market
    std::filesystem::path focus;           // key: focus
    std::filesystem::path statements_dir;  // key: statements_dir
    std::filesystem::path lexicon;         // key: lexicon
    std::filesystem::path output_dir;      // key: output_dir

    BuildOptions build;              // keys: sample_start, slope_orientation
    TextOptions text;                // key: tone_denominator (with_neutral | hawk_dove_only)
    FitOptions fit;                  // keys: ridge_lambda, lasso_lambda_frac,
                                     //       loo_lambda_grid, controls, min_subgroup_n
    std::vector<std::string> specs;  // key: specs (comma list; empty = all)

    static RunConfig load(const std::filesystem::path& file);  // throws ConfigError, ParseError

    // All five input paths and the output dir must be set. Throws ConfigError.
    void validate() const;
};

}  // namespace eventcurve

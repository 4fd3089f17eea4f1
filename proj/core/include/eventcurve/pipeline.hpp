#pragma once

#include "eventcurve/config.hpp"

namespace eventcurve {

// Fixed artifact names inside the configured output directory.
namespace outputs {
inline constexpr const char* kDataset = "events_dataset.csv";
inline constexpr const char* kDrops = "drops.csv";
inline constexpr const char* kFits = "fits.json";
inline constexpr const char* kTable1 = "table1_composition.csv";
inline constexpr const char* kTable2 = "table2.csv";
inline constexpr const char* kFig2 = "fig2_tone_series.csv";
inline constexpr const char* kFig3 = "fig3_distributions.csv";
inline constexpr const char* kFig4 = "fig4_scatter.csv";
inline constexpr const char* kFig5 = "fig5_by_type.csv";
inline constexpr const char* kFigA1 = "figA1_rmse.csv";
inline constexpr const char* kFigA2 = "figA2_text_coefs.csv";
inline constexpr const char* kFigA3 = "figA3_forest.csv";
}  // namespace outputs

// Stage 1: ingest everything, derive the calendar, score statements,
// assemble the event dataset. Writes events_dataset.csv and drops.csv.
void run_build(const RunConfig& cfg);

// Stage 2: read the dataset back, run every configured specification
// through all four estimators. Writes fits.json, table1_composition.csv
// and table2.csv. Throws MissingPrerequisiteError without a built dataset.
void run_fit(const RunConfig& cfg);

// Stage 3: read dataset and fits back, emit the figure-data CSVs.
// Throws MissingPrerequisiteError when build or fit artifacts are absent.
void run_figures(const RunConfig& cfg);

// build + fit + figures.
void run_all(const RunConfig& cfg);

}  // namespace eventcurve

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wavecoh/config.hpp"
#include "wavecoh/phase_lag.hpp"

namespace wavecoh {

// Fixed artifact names inside each pair directory.
namespace artifact {
inline constexpr const char* power_x = "power_x.csv";
inline constexpr const char* power_y = "power_y.csv";
inline constexpr const char* xwt_power = "xwt_power.csv";
inline constexpr const char* xwt_phase = "xwt_phase.csv";
inline constexpr const char* wtc_r2 = "wtc_r2.csv";
inline constexpr const char* wtc_phase = "wtc_phase.csv";
inline constexpr const char* mask_power_x = "mask_power_x.csv";
inline constexpr const char* mask_power_y = "mask_power_y.csv";
inline constexpr const char* mask_xwt = "mask_xwt.csv";
inline constexpr const char* mask_wtc = "mask_wtc.csv";
inline constexpr const char* coi = "coi.csv";
inline constexpr const char* thresholds = "thresholds.csv";
inline constexpr const char* summary = "summary.csv";
inline constexpr const char* fig_power = "fig_power.ppm";
inline constexpr const char* fig_xwt = "fig_xwt.ppm";
inline constexpr const char* fig_wtc = "fig_wtc.ppm";
}  // namespace artifact

std::vector<std::string> pair_artifact_names();

struct PairArtifacts {
    std::string commodity;            // value-column name of the second series
    std::filesystem::path dir;
    std::vector<RegionSummary> summaries;
    std::vector<std::string> warnings;
};

/// Full single-pair analysis (index vs one commodity): transforms and aligns
/// the two series, computes power/XWT/WTC with their significance masks, and
/// writes every grid, mask, figure, and the summary table under
/// output_dir/<commodity>/.
PairArtifacts run_pair(const AnalysisConfig& config, const SeriesSpec& commodity);

struct BatchResult {
    std::vector<PairArtifacts> pairs;
    std::filesystem::path summary_csv;   // all pair rows, config order
    std::filesystem::path coverage_csv;  // commodity x window x band with no region
};

/// run_pair for every configured commodity (concurrently; per-pair output
/// directories) plus the combined summary and the empty-cell coverage report.
BatchResult run_batch(const AnalysisConfig& config);

std::string sanitize_name(const std::string& name);

// Summary CSV helpers shared by run_pair/run_batch and the tests.
std::string summary_csv_header();
std::string summary_csv_row(const std::string& commodity, const RegionSummary& row);

}  // namespace wavecoh

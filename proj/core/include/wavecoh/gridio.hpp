#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wavecoh/grid.hpp"
#include "wavecoh/timeseries.hpp"

namespace wavecoh {

/// Shortest round-trip decimal form; stable across runs.
std::string format_double(double v);

// Grid CSV convention: header "period,<time labels...>", one row per scale
// with the period in the first column.
void write_grid_csv(const std::filesystem::path& path, const RealGrid& g,
                    const std::vector<double>& periods, Month start, double step);
void write_mask_csv(const std::filesystem::path& path, const MaskGrid& m,
                    const std::vector<double>& periods, Month start, double step);

struct GridCsv {
    std::vector<double> periods;
    std::vector<std::string> labels;
    RealGrid values;

    Month start() const;  // parsed from the first label
};

GridCsv read_grid_csv(const std::filesystem::path& path);
MaskGrid to_mask(const RealGrid& g);  // nonzero -> 1

// COI CSV: "month,coi_period" rows.
void write_coi_csv(const std::filesystem::path& path, const std::vector<double>& coi,
                   Month start, double step);
std::vector<double> read_coi_csv(const std::filesystem::path& path);

// Series CSV matching the ingest schema: "month,<name>..." with one column
// per series. All series must share start, step, and length.
void write_series_csv(const std::filesystem::path& path, const std::vector<TimeSeries>& cols,
                      const std::string& time_column = "month");

}  // namespace wavecoh

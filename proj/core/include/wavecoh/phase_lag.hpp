#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wavecoh/grid.hpp"
#include "wavecoh/month.hpp"

namespace wavecoh {

// Positive delta_phi means the first series leads (arrow in the upper
// half-plane).
enum class Direction { in_phase, anti_phase, first_leads, first_lags };

std::string to_string(Direction d);

/// Time offset implied by a phase gap at a given period:
/// |delta_phi| * period / (2*pi), months.
double time_lag(double delta_phi, double period);

Direction classify_direction(double delta_phi, double phase_tolerance);

struct PhaseRelation {
    double delta_phi = 0.0;  // (-pi, pi]
    double period = 0.0;     // months
    Direction direction = Direction::in_phase;
    double lag_months = 0.0;
};

PhaseRelation make_phase_relation(double delta_phi, double period, double phase_tolerance);

struct GridCell {
    std::size_t row = 0;
    std::size_t col = 0;
};

struct Region {
    std::vector<GridCell> cells;  // row-major discovery order
};

/// Connected components (4-neighborhood) of
/// { wtc_mask & xwt_mask & period < coi }. Regions are returned in
/// row-major order of their first cell; the list may be empty.
std::vector<Region> significant_regions(const MaskGrid& wtc_mask, const MaskGrid& xwt_mask,
                                        const std::vector<double>& periods,
                                        const std::vector<double>& coi);

struct CrisisWindow {
    std::string label;
    Month start;
    Month end;  // inclusive
};

// Frequency band split at band_split months; the low band includes the split.
enum class Band { high, low };

std::string to_string(Band b);

struct RegionSummary {
    std::string window;
    Band band = Band::high;
    Direction direction = Direction::in_phase;
    bool direction_tie = false;  // tie broken to in_phase; callers may warn
    double delay_min = 0.0;      // months
    double delay_max = 0.0;
    std::size_t area = 0;        // cells
    double mean_r2 = 0.0;
};

struct BandSummaryOptions {
    double band_split = 6.0;        // months
    double phase_tolerance = 0.15;  // radians
};

/// Pools region cells into window x band rows. Direction is the majority of
/// per-cell classifications (ties -> in_phase, flagged); the delay range is
/// the (min, max) of per-cell time lags; empty combinations are omitted.
std::vector<RegionSummary> band_summary(const std::vector<Region>& regions,
                                        const RealGrid& phase_grid, const RealGrid& r2_grid,
                                        const std::vector<double>& periods,
                                        Month start, double step,
                                        const std::vector<CrisisWindow>& windows,
                                        const BandSummaryOptions& opt);

}  // namespace wavecoh

#include "wavecoh/phase_lag.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "wavecoh/coherence.hpp"
#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::in_phase: return "in_phase";
        case Direction::anti_phase: return "anti_phase";
        case Direction::first_leads: return "first_leads";
        case Direction::first_lags: return "first_lags";
    }
    return "?";
}

std::string to_string(Band b) { return b == Band::high ? "high" : "low"; }

double time_lag(double delta_phi, double period) {
    return std::abs(delta_phi) * period / (2.0 * kPi);
}

Direction classify_direction(double delta_phi, double phase_tolerance) {
    if (!(phase_tolerance >= 0.0)) throw ConfigError("classify_direction: tolerance must be >= 0");
    const double d = wrap_angle(delta_phi);
    if (std::abs(d) < phase_tolerance) return Direction::in_phase;
    if (std::abs(kPi - std::abs(d)) < phase_tolerance) return Direction::anti_phase;
    return d > 0.0 ? Direction::first_leads : Direction::first_lags;
}

PhaseRelation make_phase_relation(double delta_phi, double period, double phase_tolerance) {
    PhaseRelation r;
    r.delta_phi = wrap_angle(delta_phi);
    r.period = period;
    r.direction = classify_direction(r.delta_phi, phase_tolerance);
    r.lag_months = time_lag(r.delta_phi, period);
    return r;
}

std::vector<Region> significant_regions(const MaskGrid& wtc_mask, const MaskGrid& xwt_mask,
                                        const std::vector<double>& periods,
                                        const std::vector<double>& coi) {
    if (!wtc_mask.same_shape(xwt_mask) || wtc_mask.rows() != periods.size() ||
        wtc_mask.cols() != coi.size()) {
        throw std::invalid_argument("significant_regions: grids do not share axes");
    }
    const std::size_t rows = wtc_mask.rows(), cols = wtc_mask.cols();
    MaskGrid eligible(rows, cols);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t n = 0; n < cols; ++n) {
            eligible(j, n) = (wtc_mask(j, n) && xwt_mask(j, n) && periods[j] < coi[n]) ? 1 : 0;
        }
    }

    std::vector<Region> regions;
    std::vector<GridCell> stack;
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t n = 0; n < cols; ++n) {
            if (!eligible(j, n)) continue;
            Region region;
            eligible(j, n) = 0;
            stack.push_back({j, n});
            while (!stack.empty()) {
                const GridCell c = stack.back();
                stack.pop_back();
                region.cells.push_back(c);
                const std::array<std::pair<long, long>, 4> nb{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
                for (const auto& [dj, dn] : nb) {
                    const long rj = static_cast<long>(c.row) + dj;
                    const long rn = static_cast<long>(c.col) + dn;
                    if (rj < 0 || rn < 0 || rj >= static_cast<long>(rows) ||
                        rn >= static_cast<long>(cols)) {
                        continue;
                    }
                    auto& cell = eligible(static_cast<std::size_t>(rj), static_cast<std::size_t>(rn));
                    if (cell) {
                        cell = 0;
                        stack.push_back({static_cast<std::size_t>(rj), static_cast<std::size_t>(rn)});
                    }
                }
            }
            std::sort(region.cells.begin(), region.cells.end(),
                      [](const GridCell& a, const GridCell& b) {
                          return a.row != b.row ? a.row < b.row : a.col < b.col;
                      });
            regions.push_back(std::move(region));
        }
    }
    return regions;
}

std::vector<RegionSummary> band_summary(const std::vector<Region>& regions,
                                        const RealGrid& phase_grid, const RealGrid& r2_grid,
                                        const std::vector<double>& periods,
                                        Month start, double step,
                                        const std::vector<CrisisWindow>& windows,
                                        const BandSummaryOptions& opt) {
    if (!phase_grid.same_shape(r2_grid) || phase_grid.rows() != periods.size()) {
        throw std::invalid_argument("band_summary: grids do not share axes");
    }
    const int istep = static_cast<int>(std::lround(step));

    std::vector<RegionSummary> rows;
    for (const auto& window : windows) {
        for (Band band : {Band::high, Band::low}) {
            RegionSummary sum;
            sum.window = window.label;
            sum.band = band;
            double lag_min = 0.0, lag_max = 0.0, r2_total = 0.0;
            std::size_t votes[4] = {0, 0, 0, 0};
            for (const auto& region : regions) {
                for (const auto& cell : region.cells) {
                    const double period = periods[cell.row];
                    const Band cell_band = period < opt.band_split ? Band::high : Band::low;
                    if (cell_band != band) continue;
                    const Month m = start.plus(static_cast<int>(cell.col) * istep);
                    if (m < window.start || window.end < m) continue;
                    const double dphi = phase_grid(cell.row, cell.col);
                    const double lag = time_lag(dphi, period);
                    if (sum.area == 0) {
                        lag_min = lag_max = lag;
                    } else {
                        lag_min = std::min(lag_min, lag);
                        lag_max = std::max(lag_max, lag);
                    }
                    votes[static_cast<int>(classify_direction(dphi, opt.phase_tolerance))]++;
                    r2_total += r2_grid(cell.row, cell.col);
                    sum.area++;
                }
            }
            if (sum.area == 0) continue;
            sum.delay_min = lag_min;
            sum.delay_max = lag_max;
            sum.mean_r2 = r2_total / static_cast<double>(sum.area);
            const std::size_t best = *std::max_element(votes, votes + 4);
            int winner = -1;
            for (int d = 0; d < 4; ++d) {
                if (votes[d] == best) {
                    if (winner >= 0) {
                        winner = -1;  // tie
                        break;
                    }
                    winner = d;
                }
            }
            if (winner < 0) {
                sum.direction = Direction::in_phase;
                sum.direction_tie = true;
            } else {
                sum.direction = static_cast<Direction>(winner);
            }
            rows.push_back(std::move(sum));
        }
    }
    return rows;
}

}  // namespace wavecoh

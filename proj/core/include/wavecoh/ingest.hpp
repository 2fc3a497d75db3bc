#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include "wavecoh/timeseries.hpp"

namespace wavecoh {

/// Reads one named column from a monthly CSV file.
///
/// The file must have a header row, a time column with "YYYY-MM" values that
/// are strictly increasing and gap-free, and numeric value columns. Errors
/// (missing column, gap, non-numeric cell) are reported with the row number.
TimeSeries load_csv(const std::filesystem::path& path,
                    const std::string& time_column,
                    const std::string& value_column);

/// r_i = ln(v_{i+1}/v_i). Output is one sample shorter and starts one step
/// later. All inputs must be strictly positive.
TimeSeries log_returns(const TimeSeries& s);

/// Rescales to sample mean 0 and sample standard deviation 1 (n-1 denominator).
TimeSeries standardize(const TimeSeries& s);

/// Trims both series to their common calendar window.
std::pair<TimeSeries, TimeSeries> align(const TimeSeries& a, const TimeSeries& b);

/// Lag-1 sample autocorrelation, unclamped.
double lag1_autocorr(const TimeSeries& s);

/// Red-noise fit used by the surrogate null. alpha is the lag-1 sample
/// autocorrelation clamped to [0, 0.999] (negative estimates are treated as
/// white noise); sigma is chosen so the stationary AR(1) variance matches the
/// sample variance; mean is the sample mean. Requires N >= 8.
AR1Params fit_ar1(const TimeSeries& s);

}  // namespace wavecoh

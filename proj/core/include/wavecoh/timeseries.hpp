#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wavecoh/month.hpp"

namespace wavecoh {

// Uniformly sampled real-valued sequence with calendar metadata.
// Index i corresponds to start + i*step months.
struct TimeSeries {
    std::string name;
    Month start;
    double step = 1.0;  // sampling interval in months
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    Month month_at(std::size_t i) const;
    Month end() const;  // month of the last sample

    // Checks N >= 2, finite values, step > 0. Throws DataError.
    void validate() const;
};

// AR(1) description of a series: x_t - mean = alpha*(x_{t-1} - mean) + eps,
// eps ~ N(0, sigma^2). Stationarity requires |alpha| < 1.
struct AR1Params {
    double alpha = 0.0;
    double sigma = 1.0;
    double mean = 0.0;

    double process_variance() const { return sigma * sigma / (1.0 - alpha * alpha); }
    void validate() const;  // throws ConfigError
};

double sample_mean(const std::vector<double>& v);
// n-1 denominator.
double sample_variance(const std::vector<double>& v);
double sample_sd(const std::vector<double>& v);

}  // namespace wavecoh

#include "wavecoh/timeseries.hpp"

#include <cmath>

#include "wavecoh/errors.hpp"

namespace wavecoh {

Month TimeSeries::month_at(std::size_t i) const {
    return start.plus(static_cast<int>(std::lround(static_cast<double>(i) * step)));
}

Month TimeSeries::end() const {
    return values.empty() ? start : month_at(values.size() - 1);
}

void TimeSeries::validate() const {
    if (values.size() < 2) {
        throw DataError("series '" + name + "': need at least 2 samples, got " +
                        std::to_string(values.size()));
    }
    if (!(step > 0.0)) {
        throw DataError("series '" + name + "': step must be > 0");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw DataError("series '" + name + "': non-finite value at index " +
                            std::to_string(i));
        }
    }
}

void AR1Params::validate() const {
    if (!(std::abs(alpha) < 1.0)) throw ConfigError("AR1Params: |alpha| must be < 1");
    if (!(sigma > 0.0)) throw ConfigError("AR1Params: sigma must be > 0");
    if (!std::isfinite(mean)) throw ConfigError("AR1Params: mean must be finite");
}

double sample_mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = sample_mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double sample_sd(const std::vector<double>& v) { return std::sqrt(sample_variance(v)); }

}  // namespace wavecoh

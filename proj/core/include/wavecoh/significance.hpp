#pragma once

#include <cstdint>
#include <vector>

#include "wavecoh/coherence.hpp"
#include "wavecoh/timeseries.hpp"

namespace wavecoh {

enum class SignificanceMethod { chi2_power, mc_wtc, mc_xwt };

struct SignificanceMask {
    MaskGrid mask;  // 1 where the statistic exceeds its row threshold
    double level = 0.95;
    SignificanceMethod method = SignificanceMethod::chi2_power;
    std::vector<double> thresholds;  // per scale
};

/// Normalized AR(1) spectrum (unit mean over frequencies):
/// (1 - alpha^2) / (1 + alpha^2 - 2*alpha*cos(2*pi*k/n)).
double red_noise_spectrum(double alpha, double freq_index, std::size_t n);

/// Exact chi-square quantile with 2 dof: -2*ln(1 - level).
double chi2_quantile_2dof(double level);

/// Theoretical red-noise test for single-series power. Per-scale threshold is
/// process_variance * P_k(s) * chi2_2(level)/2 with k(s) the Fourier frequency
/// index matching the scale's period.
SignificanceMask power_significance(const WaveletField& f, const AR1Params& ar1, double level);

/// Stationary AR(1) draw of length n; identical output for identical seeds.
TimeSeries generate_surrogate(const AR1Params& ar1, std::size_t n, std::uint64_t seed);

struct McOptions {
    std::size_t n_surrogates = 300;
    double level = 0.95;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware default
};

/// Per-scale empirical null quantiles from AR(1) surrogate pairs evaluated on
/// the same grid, pooled over time points outside the cone of influence. One
/// surrogate set feeds both statistics: squared coherence, and cross power
/// normalized by the two sample standard deviations.
struct PairNullThresholds {
    std::vector<double> wtc;
    std::vector<double> xwt;
};

PairNullThresholds mc_pair_thresholds(const WaveletParams& params, std::size_t n_samples,
                                      const AR1Params& ar1_x, const AR1Params& ar1_y,
                                      const McOptions& opt);

/// The WTC half of mc_pair_thresholds.
std::vector<double> wtc_significance(const WaveletParams& params, std::size_t n_samples,
                                     const AR1Params& ar1_x, const AR1Params& ar1_y,
                                     const McOptions& opt);

SignificanceMask apply_thresholds(const RealGrid& statistic, const std::vector<double>& thresholds,
                                  double level, SignificanceMethod method);

/// |W^XY| / (sd_x * sd_y), the Monte Carlo XWT statistic.
RealGrid normalized_cross_power(const CrossField& c, double sd_x, double sd_y);

/// Linear-interpolation empirical quantile (sorts a copy).
double empirical_quantile(std::vector<float> values, double level);

}  // namespace wavecoh

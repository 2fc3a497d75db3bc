#include "wavecoh/significance.hpp"

#include <algorithm>
#include <cmath>

#include "wavecoh/errors.hpp"
#include "wavecoh/parallel.hpp"
#include "wavecoh/rng.hpp"

namespace wavecoh {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_level(double level) {
    if (!(level > 0.5 && level < 1.0)) {
        throw ConfigError("significance: level must be in (0.5, 1)");
    }
}
}  // namespace

double red_noise_spectrum(double alpha, double freq_index, std::size_t n) {
    if (!(std::abs(alpha) < 1.0)) throw ConfigError("red_noise_spectrum: |alpha| must be < 1");
    const double theta = kTwoPi * freq_index / static_cast<double>(n);
    return (1.0 - alpha * alpha) / (1.0 + alpha * alpha - 2.0 * alpha * std::cos(theta));
}

double chi2_quantile_2dof(double level) {
    if (!(level > 0.0 && level < 1.0)) throw ConfigError("chi2_quantile_2dof: level in (0,1)");
    return -2.0 * std::log1p(-level);
}

SignificanceMask power_significance(const WaveletField& f, const AR1Params& ar1, double level) {
    check_level(level);
    ar1.validate();
    const std::size_t n = f.coeffs.cols();
    const double variance = ar1.process_variance();
    const double q = chi2_quantile_2dof(level);

    SignificanceMask out;
    out.level = level;
    out.method = SignificanceMethod::chi2_power;
    out.thresholds.resize(f.periods.size());
    for (std::size_t j = 0; j < f.periods.size(); ++j) {
        const double k = static_cast<double>(n) * f.params.dt / f.periods[j];
        out.thresholds[j] = variance * red_noise_spectrum(ar1.alpha, k, n) * q / 2.0;
    }
    out.mask = MaskGrid(f.coeffs.rows(), f.coeffs.cols());
    for (std::size_t j = 0; j < f.coeffs.rows(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            out.mask(j, i) = std::norm(f.coeffs(j, i)) > out.thresholds[j] ? 1 : 0;
        }
    }
    return out;
}

TimeSeries generate_surrogate(const AR1Params& ar1, std::size_t n, std::uint64_t seed) {
    ar1.validate();
    if (n < 2) throw ConfigError("generate_surrogate: n must be >= 2");
    NormalRng rng(seed);
    TimeSeries s;
    s.name = "ar1_surrogate";
    s.start = Month{1970, 1};
    s.step = 1.0;
    s.values.resize(n);
    // Stationary start, then the recursion.
    double x = ar1.mean + std::sqrt(ar1.process_variance()) * rng();
    s.values[0] = x;
    for (std::size_t i = 1; i < n; ++i) {
        x = ar1.mean + ar1.alpha * (x - ar1.mean) + ar1.sigma * rng();
        s.values[i] = x;
    }
    return s;
}

double empirical_quantile(std::vector<float> values, double level) {
    if (values.empty()) throw NumericError("empirical_quantile: no samples");
    std::sort(values.begin(), values.end());
    const double pos = level * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= values.size()) return values.back();
    return static_cast<double>(values[lo]) +
           frac * (static_cast<double>(values[lo + 1]) - static_cast<double>(values[lo]));
}

PairNullThresholds mc_pair_thresholds(const WaveletParams& params, std::size_t n_samples,
                                      const AR1Params& ar1_x, const AR1Params& ar1_y,
                                      const McOptions& opt) {
    check_level(opt.level);
    if (opt.n_surrogates < 100) {
        throw ConfigError("mc_pair_thresholds: need at least 100 surrogates, got " +
                          std::to_string(opt.n_surrogates));
    }
    ar1_x.validate();
    ar1_y.validate();

    const CwtPlan plan(params, n_samples);
    const auto& periods = plan.periods();
    const auto& coi = plan.coi();
    const std::size_t rows = periods.size();

    // Columns outside the cone (period below the curve) per row; rows fully
    // inside the cone fall back to pooling over every column.
    std::vector<std::vector<std::uint32_t>> pool_cols(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < n_samples; ++i) {
            if (periods[j] < coi[i]) pool_cols[j].push_back(static_cast<std::uint32_t>(i));
        }
        if (pool_cols[j].empty()) {
            pool_cols[j].resize(n_samples);
            for (std::size_t i = 0; i < n_samples; ++i) pool_cols[j][i] = static_cast<std::uint32_t>(i);
        }
    }

    std::vector<std::vector<float>> wtc_pool(rows), xwt_pool(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        wtc_pool[j].resize(pool_cols[j].size() * opt.n_surrogates);
        xwt_pool[j].resize(pool_cols[j].size() * opt.n_surrogates);
    }

    parallel_for(opt.n_surrogates, opt.threads, [&](std::size_t i) {
        const TimeSeries sx = generate_surrogate(ar1_x, n_samples, derive_seed(opt.seed, 2 * i));
        const TimeSeries sy =
            generate_surrogate(ar1_y, n_samples, derive_seed(opt.seed, 2 * i + 1));
        const WaveletField fx = plan.transform(sx);
        const WaveletField fy = plan.transform(sy);
        const CoherenceField coh = wtc(fx, fy);
        const CrossField cross = xwt(fx, fy);
        const double inv_sds = 1.0 / (sample_sd(sx.values) * sample_sd(sy.values));
        for (std::size_t j = 0; j < rows; ++j) {
            const std::size_t base = i * pool_cols[j].size();
            for (std::size_t c = 0; c < pool_cols[j].size(); ++c) {
                const std::uint32_t col = pool_cols[j][c];
                wtc_pool[j][base + c] = static_cast<float>(coh.r2(j, col));
                xwt_pool[j][base + c] =
                    static_cast<float>(std::abs(cross.coeffs(j, col)) * inv_sds);
            }
        }
    });

    PairNullThresholds out;
    out.wtc.resize(rows);
    out.xwt.resize(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        out.wtc[j] = empirical_quantile(std::move(wtc_pool[j]), opt.level);
        out.xwt[j] = empirical_quantile(std::move(xwt_pool[j]), opt.level);
    }
    return out;
}

std::vector<double> wtc_significance(const WaveletParams& params, std::size_t n_samples,
                                     const AR1Params& ar1_x, const AR1Params& ar1_y,
                                     const McOptions& opt) {
    return mc_pair_thresholds(params, n_samples, ar1_x, ar1_y, opt).wtc;
}

SignificanceMask apply_thresholds(const RealGrid& statistic, const std::vector<double>& thresholds,
                                  double level, SignificanceMethod method) {
    if (statistic.rows() != thresholds.size()) {
        throw std::invalid_argument("apply_thresholds: thresholds do not match grid rows");
    }
    SignificanceMask out;
    out.level = level;
    out.method = method;
    out.thresholds = thresholds;
    out.mask = MaskGrid(statistic.rows(), statistic.cols());
    for (std::size_t j = 0; j < statistic.rows(); ++j) {
        for (std::size_t i = 0; i < statistic.cols(); ++i) {
            out.mask(j, i) = statistic(j, i) > thresholds[j] ? 1 : 0;
        }
    }
    return out;
}

RealGrid normalized_cross_power(const CrossField& c, double sd_x, double sd_y) {
    if (!(sd_x > 0.0 && sd_y > 0.0)) {
        throw NumericError("normalized_cross_power: standard deviations must be > 0");
    }
    RealGrid g(c.coeffs.rows(), c.coeffs.cols());
    const double inv = 1.0 / (sd_x * sd_y);
    for (std::size_t i = 0; i < g.data().size(); ++i) {
        g.data()[i] = std::abs(c.coeffs.data()[i]) * inv;
    }
    return g;
}

}  // namespace wavecoh

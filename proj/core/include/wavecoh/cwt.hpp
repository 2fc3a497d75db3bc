#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "wavecoh/grid.hpp"
#include "wavecoh/timeseries.hpp"

namespace wavecoh {

/// Morlet analysis configuration. Scales form the dyadic grid
/// s_j = s0 * 2^(j*dj), j = 0..num_scales-1.
struct WaveletParams {
    double omega0 = 6.0;        // Morlet central frequency (dimensionless)
    double dt = 1.0;            // sampling interval, months
    double s0 = 2.0;            // smallest scale, months
    double dj = 1.0 / 12.0;     // scale resolution, spacing in log2(scale)
    std::size_t num_scales = 0; // 0 = auto: largest scale <= N*dt/2
    bool pad = true;            // pad to the next power of two >= 2N

    void validate() const;  // throws ConfigError
    // Returns a copy with num_scales filled in for a series of n samples.
    WaveletParams resolved(std::size_t n_samples) const;
};

/// Morlet mother wavelet: pi^(-1/4) * exp(i*omega0*eta) * exp(-eta^2/2).
std::complex<double> morlet_mother(double eta, double omega0);

/// Ratio of Fourier period to scale: 4*pi / (omega0 + sqrt(2 + omega0^2)).
/// ~1.0330 for omega0 = 6, so periods read off nearly equal to scales.
double fourier_factor(double omega0);

std::vector<double> scale_grid(const WaveletParams& params);

/// Largest reliable period per column (e-folding cone):
/// fourier_factor * sqrt(2) * dt * min(n, N-1-n), floored at the Nyquist
/// period 2*dt. Periods at or above this curve are edge-contaminated.
std::vector<double> coi_curve(std::size_t n, double dt, double omega0);

/// Complex wavelet coefficients over (scale x time) plus shared axes.
struct WaveletField {
    ComplexGrid coeffs;          // [num_scales x N]
    std::vector<double> scales;  // months
    std::vector<double> periods; // months, fourier_factor * scale
    std::vector<double> coi;     // per column, months
    WaveletParams params;        // resolved
    std::string series_name;
    Month start;
};

/// Continuous wavelet transform of one series.
///
/// Each row equals the discrete convolution of the series with the conjugate
/// scaled wavelet, energy-normalized by sqrt(dt/s). Evaluated via FFT with
/// the series zero-padded to the next power of two >= 2N and per-scale
/// kernels sampled in time, which makes the result interchangeable with the
/// direct summation up to floating-point roundoff.
WaveletField cwt(const TimeSeries& s, const WaveletParams& params);

RealGrid power(const WaveletField& f);          // |W|^2
RealGrid phase(const WaveletField& f);          // atan2(imag, real), in (-pi, pi]

/// Precomputed kernels for repeated transforms on one grid shape; used by the
/// Monte Carlo loops. cwt() is a one-shot wrapper around this.
class CwtPlan {
public:
    CwtPlan(const WaveletParams& params, std::size_t n_samples);

    WaveletField transform(const TimeSeries& s) const;

    const WaveletParams& params() const { return params_; }
    std::size_t n_samples() const { return n_; }
    std::size_t n_padded() const { return npad_; }
    const std::vector<double>& scales() const { return scales_; }
    const std::vector<double>& periods() const { return periods_; }
    const std::vector<double>& coi() const { return coi_; }

private:
    WaveletParams params_;
    std::size_t n_ = 0;
    std::size_t npad_ = 0;
    std::vector<double> scales_;
    std::vector<double> periods_;
    std::vector<double> coi_;
    // Per scale: FFT of the reversed conjugate kernel on the padded window.
    std::vector<std::vector<std::complex<double>>> kernel_hat_;
};

}  // namespace wavecoh

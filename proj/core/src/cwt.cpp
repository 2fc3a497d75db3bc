#include "wavecoh/cwt.hpp"

#include <cmath>
#include <stdexcept>

#include "wavecoh/errors.hpp"
#include "wavecoh/fft.hpp"

namespace wavecoh {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
const double kMorletNorm = std::pow(kPi, -0.25);
}  // namespace

void WaveletParams::validate() const {
    if (!(omega0 >= 5.0)) {
        throw ConfigError("WaveletParams: omega0 must be >= 5 (zero-mean admissibility)");
    }
    if (!(dt > 0.0)) throw ConfigError("WaveletParams: dt must be > 0");
    if (!(s0 > 0.0)) throw ConfigError("WaveletParams: s0 must be > 0");
    if (!(dj > 0.0)) throw ConfigError("WaveletParams: dj must be > 0");
}

WaveletParams WaveletParams::resolved(std::size_t n_samples) const {
    validate();
    WaveletParams p = *this;
    if (p.num_scales == 0) {
        // Largest scale <= N*dt/2.
        const double max_scale = static_cast<double>(n_samples) * p.dt / 2.0;
        const double j_max = std::floor(std::log2(max_scale / p.s0) / p.dj);
        p.num_scales = j_max < 0.0 ? 1 : static_cast<std::size_t>(j_max) + 1;
    }
    return p;
}

std::complex<double> morlet_mother(double eta, double omega0) {
    const double envelope = kMorletNorm * std::exp(-0.5 * eta * eta);
    return {envelope * std::cos(omega0 * eta), envelope * std::sin(omega0 * eta)};
}

double fourier_factor(double omega0) {
    return 4.0 * kPi / (omega0 + std::sqrt(2.0 + omega0 * omega0));
}

std::vector<double> scale_grid(const WaveletParams& params) {
    params.validate();
    if (params.num_scales == 0) throw ConfigError("scale_grid: num_scales not resolved");
    std::vector<double> s(params.num_scales);
    for (std::size_t j = 0; j < s.size(); ++j) {
        s[j] = params.s0 * std::exp2(static_cast<double>(j) * params.dj);
    }
    return s;
}

std::vector<double> coi_curve(std::size_t n, double dt, double omega0) {
    const double ff = fourier_factor(omega0);
    const double nyquist_period = 2.0 * dt;
    std::vector<double> coi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = static_cast<double>(std::min(i, n - 1 - i));
        coi[i] = std::max(ff * std::sqrt(2.0) * dt * d, nyquist_period);
    }
    return coi;
}

CwtPlan::CwtPlan(const WaveletParams& params, std::size_t n_samples)
    : params_(params.resolved(n_samples)), n_(n_samples) {
    if (n_ < 2) throw DataError("cwt: need at least 2 samples");
    npad_ = params_.pad ? fft::next_pow2(2 * n_) : fft::next_pow2(n_);
    scales_ = scale_grid(params_);
    const double ff = fourier_factor(params_.omega0);
    periods_.resize(scales_.size());
    for (std::size_t j = 0; j < scales_.size(); ++j) periods_[j] = ff * scales_[j];
    coi_ = coi_curve(n_, params_.dt, params_.omega0);

    // Reversed conjugate kernel h[m] = sqrt(dt/s) * conj(psi0(-m*dt/s)) on the
    // base circular window, so IFFT(FFT(x) * FFT(h)) is the correlation
    // sum_{n'} x_{n'} sqrt(dt/s) conj(psi0((n'-n) dt/s)). With npad >= 2N the
    // circular result equals the plain sum for every output column.
    kernel_hat_.resize(scales_.size());
    const std::size_t half = npad_ / 2;
    for (std::size_t j = 0; j < scales_.size(); ++j) {
        const double s = scales_[j];
        const double norm = std::sqrt(params_.dt / s);
        std::vector<std::complex<double>> h(npad_);
        for (std::size_t m = 0; m < npad_; ++m) {
            const double signed_m =
                m <= half ? static_cast<double>(m)
                          : static_cast<double>(m) - static_cast<double>(npad_);
            const double eta = -signed_m * params_.dt / s;
            h[m] = norm * std::conj(morlet_mother(eta, params_.omega0));
        }
        fft::forward(h);
        kernel_hat_[j] = std::move(h);
    }
}

WaveletField CwtPlan::transform(const TimeSeries& s) const {
    s.validate();
    if (s.values.size() != n_) {
        throw std::invalid_argument("CwtPlan: series length does not match the plan");
    }
    if (s.step != params_.dt) {
        throw std::invalid_argument("CwtPlan: series step does not match params.dt");
    }

    std::vector<std::complex<double>> xhat(npad_);
    for (std::size_t i = 0; i < n_; ++i) xhat[i] = s.values[i];
    fft::forward(xhat);

    WaveletField f;
    f.coeffs = ComplexGrid(scales_.size(), n_);
    f.scales = scales_;
    f.periods = periods_;
    f.coi = coi_;
    f.params = params_;
    f.series_name = s.name;
    f.start = s.start;

    std::vector<std::complex<double>> buf(npad_);
    for (std::size_t j = 0; j < scales_.size(); ++j) {
        const auto& khat = kernel_hat_[j];
        for (std::size_t k = 0; k < npad_; ++k) buf[k] = xhat[k] * khat[k];
        fft::inverse(buf);
        auto* row = f.coeffs.row(j);
        for (std::size_t i = 0; i < n_; ++i) row[i] = buf[i];
    }
    return f;
}

WaveletField cwt(const TimeSeries& s, const WaveletParams& params) {
    return CwtPlan(params, s.values.size()).transform(s);
}

RealGrid power(const WaveletField& f) {
    RealGrid p(f.coeffs.rows(), f.coeffs.cols());
    for (std::size_t i = 0; i < p.data().size(); ++i) p.data()[i] = std::norm(f.coeffs.data()[i]);
    return p;
}

RealGrid phase(const WaveletField& f) {
    RealGrid p(f.coeffs.rows(), f.coeffs.cols());
    for (std::size_t i = 0; i < p.data().size(); ++i) {
        const auto& z = f.coeffs.data()[i];
        double a = std::atan2(z.imag(), z.real());
        if (a <= -kPi) a = kPi;
        p.data()[i] = a;
    }
    return p;
}

}  // namespace wavecoh

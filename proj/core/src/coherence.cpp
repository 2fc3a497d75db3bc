#include "wavecoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavecoh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kDenomFloor = 1e-300;

void check_compatible(const WaveletField& fx, const WaveletField& fy) {
    if (!fx.coeffs.same_shape(fy.coeffs) || fx.scales != fy.scales ||
        fx.params.dt != fy.params.dt) {
        throw std::invalid_argument("cross analysis: fields are not on the same grid");
    }
    if (fx.start != fy.start) {
        throw std::invalid_argument("cross analysis: fields start at different months");
    }
}

int round_to_odd(double w) {
    long k = std::lround((w - 1.0) / 2.0);
    if (k < 0) k = 0;
    return static_cast<int>(2 * k + 1);
}

// Gaussian pass along time (std = scale in time units, reflected edges), then
// a boxcar across scales. Works elementwise for real and complex grids.
template <class T>
Grid<T> smooth_impl(const Grid<T>& g, const std::vector<double>& scales, double dt, double dj) {
    if (g.rows() != scales.size()) {
        throw std::invalid_argument("smooth: grid rows do not match the scale axis");
    }
    const std::size_t rows = g.rows(), cols = g.cols();
    Grid<T> tpass(rows, cols);

    std::vector<double> kernel;
    std::vector<T> ext;
    for (std::size_t j = 0; j < rows; ++j) {
        const double s = scales[j];
        std::size_t radius = static_cast<std::size_t>(std::ceil(4.0 * s / dt));
        radius = std::min<std::size_t>(radius, cols - 1);
        kernel.assign(2 * radius + 1, 0.0);
        double sum = 0.0;
        for (std::size_t m = 0; m < kernel.size(); ++m) {
            const double t = (static_cast<double>(m) - static_cast<double>(radius)) * dt;
            kernel[m] = std::exp(-t * t / (2.0 * s * s));
            sum += kernel[m];
        }
        for (double& k : kernel) k /= sum;

        ext.assign(cols + 2 * radius, T{});
        const T* row = g.row(j);
        for (std::size_t i = 0; i < ext.size(); ++i) {
            const long p = static_cast<long>(i) - static_cast<long>(radius);
            const long r = p < 0 ? -p - 1
                                 : (p >= static_cast<long>(cols)
                                        ? 2 * static_cast<long>(cols) - 1 - p
                                        : p);
            ext[i] = row[r];
        }
        T* out = tpass.row(j);
        for (std::size_t n = 0; n < cols; ++n) {
            T acc{};
            for (std::size_t m = 0; m < kernel.size(); ++m) acc += ext[n + m] * kernel[m];
            out[n] = acc;
        }
    }

    const int width = round_to_odd(0.6 / dj);
    const int half = (width - 1) / 2;
    Grid<T> out(rows, cols);
    for (std::size_t j = 0; j < rows; ++j) {
        const long lo = std::max<long>(0, static_cast<long>(j) - half);
        const long hi = std::min<long>(static_cast<long>(rows) - 1, static_cast<long>(j) + half);
        const double inv = 1.0 / static_cast<double>(hi - lo + 1);
        for (std::size_t n = 0; n < cols; ++n) {
            T acc{};
            for (long l = lo; l <= hi; ++l) acc += tpass(static_cast<std::size_t>(l), n);
            out(j, n) = acc * inv;
        }
    }
    return out;
}

}  // namespace

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

double arg_angle(std::complex<double> z) {
    if (z == std::complex<double>{}) return 0.0;
    double a = std::atan2(z.imag(), z.real());
    if (a <= -kPi) a = kPi;
    return a;
}

CrossField xwt(const WaveletField& fx, const WaveletField& fy) {
    check_compatible(fx, fy);
    CrossField c;
    c.coeffs = ComplexGrid(fx.coeffs.rows(), fx.coeffs.cols());
    for (std::size_t i = 0; i < c.coeffs.data().size(); ++i) {
        c.coeffs.data()[i] = fx.coeffs.data()[i] * std::conj(fy.coeffs.data()[i]);
    }
    c.scales = fx.scales;
    c.periods = fx.periods;
    c.coi = fx.coi;
    c.params = fx.params;
    c.x_name = fx.series_name;
    c.y_name = fy.series_name;
    c.start = fx.start;
    return c;
}

RealGrid cross_power(const CrossField& c) {
    RealGrid p(c.coeffs.rows(), c.coeffs.cols());
    for (std::size_t i = 0; i < p.data().size(); ++i) p.data()[i] = std::abs(c.coeffs.data()[i]);
    return p;
}

RealGrid cross_phase(const CrossField& c) {
    RealGrid p(c.coeffs.rows(), c.coeffs.cols());
    for (std::size_t i = 0; i < p.data().size(); ++i) p.data()[i] = arg_angle(c.coeffs.data()[i]);
    return p;
}

RealGrid smooth(const RealGrid& g, const std::vector<double>& scales, double dt, double dj) {
    return smooth_impl(g, scales, dt, dj);
}

ComplexGrid smooth(const ComplexGrid& g, const std::vector<double>& scales, double dt, double dj) {
    return smooth_impl(g, scales, dt, dj);
}

CoherenceField wtc(const WaveletField& fx, const WaveletField& fy) {
    check_compatible(fx, fy);
    const std::size_t rows = fx.coeffs.rows(), cols = fx.coeffs.cols();
    const double dt = fx.params.dt, dj = fx.params.dj;

    ComplexGrid cross_in(rows, cols);
    RealGrid px_in(rows, cols), py_in(rows, cols);
    for (std::size_t j = 0; j < rows; ++j) {
        const double inv_s = 1.0 / fx.scales[j];
        for (std::size_t n = 0; n < cols; ++n) {
            const auto wx = fx.coeffs(j, n);
            const auto wy = fy.coeffs(j, n);
            cross_in(j, n) = wx * std::conj(wy) * inv_s;
            px_in(j, n) = std::norm(wx) * inv_s;
            py_in(j, n) = std::norm(wy) * inv_s;
        }
    }

    const ComplexGrid num = smooth(cross_in, fx.scales, dt, dj);
    const RealGrid sx = smooth(px_in, fx.scales, dt, dj);
    const RealGrid sy = smooth(py_in, fx.scales, dt, dj);

    CoherenceField out;
    out.r2 = RealGrid(rows, cols);
    out.phase = RealGrid(rows, cols);
    for (std::size_t i = 0; i < num.data().size(); ++i) {
        const double dx = sx.data()[i];
        const double dy = sy.data()[i];
        double r2 = 0.0;
        if (dx >= kDenomFloor && dy >= kDenomFloor) {
            r2 = std::norm(num.data()[i]) / (dx * dy);
            r2 = std::clamp(r2, 0.0, 1.0);
        }
        out.r2.data()[i] = r2;
        out.phase.data()[i] = arg_angle(num.data()[i]);
    }
    out.scales = fx.scales;
    out.periods = fx.periods;
    out.coi = fx.coi;
    out.params = fx.params;
    out.x_name = fx.series_name;
    out.y_name = fy.series_name;
    out.start = fx.start;
    return out;
}

}  // namespace wavecoh

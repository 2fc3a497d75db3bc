#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "wavecoh/coherence.hpp"
#include "wavecoh/cwt.hpp"
#include "wavecoh/errors.hpp"

using namespace wavecoh;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

std::size_t argmax_row_at(const RealGrid& p, std::size_t col) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < p.rows(); ++j) {
        if (p(j, col) > p(best, col)) best = j;
    }
    return best;
}

}  // namespace

TEST_CASE("morlet mother wavelet") {
    const auto at0 = morlet_mother(0.0, 6.0);
    CHECK(at0.real() == doctest::Approx(0.7511255444649425).epsilon(1e-12));
    CHECK(at0.imag() == 0.0);

    for (double eta : {0.4, 1.3, 2.7}) {
        CHECK(std::abs(morlet_mother(eta, 6.0)) ==
              doctest::Approx(std::abs(morlet_mother(-eta, 6.0))).epsilon(1e-14));
    }
    CHECK(std::abs(morlet_mother(10.0, 6.0)) < 1e-20);
}

TEST_CASE("scale grid") {
    WaveletParams p;
    p.s0 = 2.0;
    p.dj = 1.0;
    p.num_scales = 4;
    CHECK(scale_grid(p) == std::vector<double>{2.0, 4.0, 8.0, 16.0});

    p.dj = 0.25;
    p.num_scales = 2;
    const auto s = scale_grid(p);
    CHECK(s[0] == 2.0);
    CHECK(s[1] == doctest::Approx(2.3784142300054421).epsilon(1e-12));

    p.num_scales = 1;
    CHECK(scale_grid(p) == std::vector<double>{2.0});
}

TEST_CASE("fourier factor") {
    // Independent evaluation of 4*pi / (6 + sqrt(38)).
    const double expected = 4.0 * kPi / (6.0 + std::sqrt(38.0));
    CHECK(fourier_factor(6.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(fourier_factor(6.0) - 1.0330) < 1e-4);

    CHECK(fourier_factor(5.0) > fourier_factor(6.0));
    CHECK(fourier_factor(6.0) > fourier_factor(8.0));
    CHECK(fourier_factor(1e9) < 1e-5);
}

TEST_CASE("cone of influence curve") {
    const std::size_t n = 304;
    const auto coi = coi_curve(n, 1.0, 6.0);
    REQUIRE(coi.size() == n);
    CHECK(coi[0] == 2.0);
    CHECK(coi[n - 1] == 2.0);
    // Midpoint: fourier_factor * sqrt(2) * 151 =~ 220.6.
    const double expected = fourier_factor(6.0) * std::sqrt(2.0) * 151.0;
    CHECK(coi[151] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(coi[151] - 220.6) < 0.1);
    for (std::size_t i = 0; i < n; ++i) CHECK(coi[i] == coi[n - 1 - i]);
}

TEST_CASE("wavelet params validation and resolution") {
    WaveletParams p;
    p.omega0 = 4.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);

    WaveletParams q;  // defaults: s0=2, dj=1/12
    const auto r = q.resolved(304);
    CHECK(r.num_scales == 75);
    CHECK(scale_grid(r).back() <= 304.0 / 2.0);
    CHECK(scale_grid(r).back() * std::exp2(r.dj) > 304.0 / 2.0);
}

TEST_CASE("cwt field axes") {
    const auto s = oracle::noise_series(128, 11);
    const auto f = cwt(s, WaveletParams{});
    CHECK(f.coeffs.cols() == 128);
    CHECK(f.coeffs.rows() == f.scales.size());
    CHECK(f.periods.size() == f.scales.size());
    for (std::size_t j = 0; j < f.scales.size(); ++j) {
        CHECK(f.periods[j] == doctest::Approx(fourier_factor(6.0) * f.scales[j]));
        if (j) CHECK(f.periods[j] > f.periods[j - 1]);
    }
    CHECK(f.series_name == "noise");
}

TEST_CASE("cwt annihilates constants where the wavelet is fully supported") {
    // Zero padding turns a constant into a boxcar, so cells whose wavelet
    // support reaches an edge keep genuine step-response power; the zero-mean
    // cancellation applies where the support (6 e-foldings) fits inside the
    // data. Edge cells are the cone-of-influence zone instead.
    const auto f = cwt(oracle::make_series(std::vector<double>(128, 5.0)), WaveletParams{});
    const auto p = power(f);
    double max_supported = 0.0;
    for (std::size_t j = 0; j < p.rows(); ++j) {
        for (std::size_t n = 0; n < p.cols(); ++n) {
            const double edge_dist = static_cast<double>(std::min(n, p.cols() - 1 - n));
            if (edge_dist >= 6.0 * f.scales[j]) max_supported = std::max(max_supported, p(j, n));
        }
    }
    CHECK(max_supported < 1e-10 * 25.0);
}

TEST_CASE("cwt locates a pure tone") {
    const auto s = oracle::cosine_series(256, 16.0);
    const auto f = cwt(s, WaveletParams{});
    const auto p = power(f);
    for (std::size_t col : {100u, 128u, 156u}) {
        const double period = f.periods[argmax_row_at(p, col)];
        CHECK(period > 14.5);
        CHECK(period < 17.5);
    }
}

TEST_CASE("cwt fft path matches the direct summation oracle") {
    const auto s = oracle::noise_series(128, 21);
    WaveletParams params;
    params.num_scales = 30;
    const auto f = cwt(s, params);
    const auto expected = oracle::direct_cwt(s.values, f.scales, params.dt, params.omega0);

    double max_mag = 0.0;
    for (const auto& z : expected.data()) max_mag = std::max(max_mag, std::abs(z));
    double max_err = 0.0;
    for (std::size_t i = 0; i < expected.data().size(); ++i) {
        max_err = std::max(max_err, std::abs(f.coeffs.data()[i] - expected.data()[i]));
    }
    CHECK(max_err / max_mag < 1e-9);
}

TEST_CASE("power and phase of constructed coefficients") {
    WaveletField f;
    f.coeffs = ComplexGrid(1, 4);
    f.coeffs(0, 0) = {3.0, 4.0};
    f.coeffs(0, 1) = {1.0, 0.0};
    f.coeffs(0, 2) = {0.0, 1.0};
    f.coeffs(0, 3) = {-1.0, 0.0};
    const auto p = power(f);
    CHECK(p(0, 0) == 25.0);
    CHECK(p(0, 1) == 1.0);
    const auto ph = phase(f);
    CHECK(ph(0, 1) == 0.0);
    CHECK(ph(0, 2) == doctest::Approx(kPi / 2.0));
    CHECK(ph(0, 3) == doctest::Approx(kPi));  // +pi, not -pi

    WaveletField zero;
    zero.coeffs = ComplexGrid(2, 3);
    const auto pz = power(zero);
    for (double v : pz.data()) CHECK(v == 0.0);
}

TEST_CASE("power is invariant under a sign flip of the series") {
    auto s = oracle::noise_series(128, 31);
    auto neg = s;
    for (auto& v : neg.values) v = -v;
    const auto p1 = power(cwt(s, WaveletParams{}));
    const auto p2 = power(cwt(neg, WaveletParams{}));
    for (std::size_t i = 0; i < p1.data().size(); ++i) {
        CHECK(p1.data()[i] == doctest::Approx(p2.data()[i]).epsilon(1e-12));
    }
}

TEST_CASE("cwt is linear") {
    const auto x = oracle::noise_series(128, 41, "x");
    const auto y = oracle::noise_series(128, 42, "y");
    auto combo = x;
    for (std::size_t i = 0; i < combo.size(); ++i) {
        combo.values[i] = 2.5 * x.values[i] - 1.25 * y.values[i];
    }
    WaveletParams params;
    const CwtPlan plan(params, 128);
    const auto fx = plan.transform(x);
    const auto fy = plan.transform(y);
    const auto fc = plan.transform(combo);

    double max_mag = 0.0;
    for (const auto& z : fc.coeffs.data()) max_mag = std::max(max_mag, std::abs(z));
    for (std::size_t i = 0; i < fc.coeffs.data().size(); ++i) {
        const auto expect = 2.5 * fx.coeffs.data()[i] - 1.25 * fy.coeffs.data()[i];
        CHECK(std::abs(fc.coeffs.data()[i] - expect) / max_mag < 1e-9);
    }
}

TEST_CASE("cwt commutes with interior time shifts") {
    const std::size_t n = 256, k = 10;
    const auto base = oracle::noise_series(n + k, 51);
    TimeSeries x = oracle::make_series(
        std::vector<double>(base.values.begin(), base.values.begin() + n), "x");
    TimeSeries y = oracle::make_series(
        std::vector<double>(base.values.begin() + k, base.values.end()), "y");
    // y_t = x_{t+k}, so W^y(s, n) =~ W^x(s, n+k) away from the edges.
    const CwtPlan plan(WaveletParams{}, n);
    const auto fx = plan.transform(x);
    const auto fy = plan.transform(y);

    double max_mag = 0.0, max_err = 0.0;
    for (std::size_t j = 0; j < fx.scales.size(); ++j) {
        if (fx.scales[j] > 16.0) continue;  // keep the wavelet support interior
        for (std::size_t col = 96; col <= 160; ++col) {
            max_mag = std::max(max_mag, std::abs(fx.coeffs(j, col + k)));
            max_err = std::max(max_err, std::abs(fy.coeffs(j, col) - fx.coeffs(j, col + k)));
        }
    }
    CHECK(max_err / max_mag < 1e-6);
}

TEST_CASE("cwt concentrates tone energy within one octave") {
    const double period = 16.0;
    const auto f = cwt(oracle::cosine_series(256, period), WaveletParams{});
    const auto p = power(f);
    double in_band = 0.0, total = 0.0;
    for (std::size_t col : {120u, 128u, 136u}) {
        for (std::size_t j = 0; j < f.periods.size(); ++j) {
            total += p(j, col);
            if (f.periods[j] >= period / std::sqrt(2.0) && f.periods[j] <= period * std::sqrt(2.0)) {
                in_band += p(j, col);
            }
        }
    }
    CHECK(in_band / total >= 0.6);
}

TEST_CASE("cwt phase advances along a tone row") {
    const double period = 16.0;
    const auto f = cwt(oracle::cosine_series(256, period), WaveletParams{});
    const auto p = power(f);
    const auto ph = phase(f);
    const std::size_t row = argmax_row_at(p, 128);
    for (std::size_t col = 100; col < 156; ++col) {
        const double step = wrap_angle(ph(row, col + 1) - ph(row, col));
        CHECK(std::abs(step - 2.0 * kPi / period) < 0.05);
    }
}

TEST_CASE("cwt plan rejects mismatched input") {
    const CwtPlan plan(WaveletParams{}, 128);
    CHECK_THROWS_AS(plan.transform(oracle::noise_series(64, 1)), std::invalid_argument);
}

TEST_CASE("disabling padding only perturbs the edges") {
    const auto s = oracle::cosine_series(256, 16.0);
    WaveletParams padded;
    WaveletParams circular = padded;
    circular.pad = false;
    const auto fp = cwt(s, padded);
    const auto fc = cwt(s, circular);
    REQUIRE(fp.coeffs.same_shape(fc.coeffs));
    // Interior small-scale cells are identical up to the wrap contribution.
    for (std::size_t j = 0; j < fp.scales.size(); ++j) {
        if (fp.scales[j] > 8.0) continue;
        for (std::size_t col = 100; col < 156; ++col) {
            CHECK(std::abs(fp.coeffs(j, col) - fc.coeffs(j, col)) < 1e-6);
        }
    }
}

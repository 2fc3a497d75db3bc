#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "wavecoh/coherence.hpp"
#include "wavecoh/synthgen.hpp"

using namespace wavecoh;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

std::size_t row_nearest_period(const std::vector<double>& periods, double target) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < periods.size(); ++j) {
        if (std::abs(periods[j] - target) < std::abs(periods[best] - target)) best = j;
    }
    return best;
}

TimeSeries scaled(const TimeSeries& s, double factor, const char* name) {
    TimeSeries out = s;
    out.name = name;
    for (auto& v : out.values) v *= factor;
    return out;
}

}  // namespace

TEST_CASE("wrap_angle maps into (-pi, pi]") {
    CHECK(wrap_angle(0.1) == doctest::Approx(0.1));
    CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-0.25) == doctest::Approx(-0.25));
}

TEST_CASE("xwt of a field with itself is real non-negative") {
    const auto f = cwt(oracle::noise_series(128, 3), WaveletParams{});
    const auto c = xwt(f, f);
    const auto ph = cross_phase(c);
    for (std::size_t i = 0; i < c.coeffs.data().size(); ++i) {
        CHECK(c.coeffs.data()[i].real() >= 0.0);
        CHECK(std::abs(c.coeffs.data()[i].imag()) < 1e-15);
        CHECK(std::abs(ph.data()[i]) < 1e-12);
    }
}

TEST_CASE("xwt against the negated series is anti-phase") {
    const auto x = oracle::noise_series(128, 4, "x");
    const CwtPlan plan(WaveletParams{}, 128);
    const auto fx = plan.transform(x);
    const auto fy = plan.transform(scaled(x, -1.0, "neg"));
    const auto c = xwt(fx, fy);
    const auto p = cross_power(c);
    const double pmax = *std::max_element(p.data().begin(), p.data().end());
    const auto ph = cross_phase(c);
    for (std::size_t i = 0; i < p.data().size(); ++i) {
        if (p.data()[i] > 1e-3 * pmax) {
            CHECK(std::abs(ph.data()[i]) == doctest::Approx(kPi).epsilon(1e-9));
        }
    }
}

TEST_CASE("xwt phase of a shifted tone pair is +pi/2 (first leads)") {
    // y delayed by 4 samples of a period-16 tone -> phase 2*pi*4/16 = pi/2.
    const auto base = oracle::cosine_series(256, 16.0);
    auto [x, y] = make_shifted_pair(base, 4);
    const CwtPlan plan(WaveletParams{}, 256);
    const auto c = xwt(plan.transform(x), plan.transform(y));
    const auto ph = cross_phase(c);
    const std::size_t row = row_nearest_period(c.periods, 16.0);
    for (std::size_t col : {112u, 128u, 144u}) {
        CHECK(ph(row, col) == doctest::Approx(kPi / 2.0).epsilon(0.02));
    }
}

TEST_CASE("cross power obeys Cauchy-Schwarz (equality form)") {
    const CwtPlan plan(WaveletParams{}, 128);
    const auto fx = plan.transform(oracle::noise_series(128, 5, "x"));
    const auto fy = plan.transform(oracle::noise_series(128, 6, "y"));
    const auto c = xwt(fx, fy);
    const auto px = power(fx);
    const auto py = power(fy);
    for (std::size_t i = 0; i < c.coeffs.data().size(); ++i) {
        const double bound = std::sqrt(px.data()[i] * py.data()[i]);
        CHECK(std::abs(c.coeffs.data()[i]) <= bound * (1.0 + 1e-9));
    }
}

TEST_CASE("xwt rejects mismatched grids") {
    const auto f1 = cwt(oracle::noise_series(128, 7), WaveletParams{});
    WaveletParams p2;
    p2.num_scales = 10;
    const auto f2 = cwt(oracle::noise_series(128, 8), p2);
    CHECK_THROWS_AS(xwt(f1, f2), std::invalid_argument);
}

TEST_CASE("smoothing preserves constants and mass") {
    const std::vector<double> scales{2.0, 4.0, 8.0};
    SUBCASE("constant grid unchanged") {
        RealGrid g(3, 64, 3.25);
        const auto out = smooth(g, scales, 1.0, 1.0 / 12.0);
        for (double v : out.data()) CHECK(v == doctest::Approx(3.25).epsilon(1e-9));
    }
    SUBCASE("impulse mass conserved") {
        RealGrid g(3, 64);
        g(1, 32) = 1.0;
        const auto out = smooth(g, scales, 1.0, 1.0);  // boxcar width 1: rows stay separate
        double sum = 0.0;
        for (std::size_t n = 0; n < 64; ++n) sum += out(1, n);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("time smoothing half-width matches the Gaussian HWHM") {
    // HWHM of exp(-t^2/(2 s^2)) is sqrt(2 ln 2) * s =~ 1.1774 * s samples at dt=1.
    const double s = 8.0;
    RealGrid g(1, 256);
    g(0, 128) = 1.0;
    const auto out = smooth(g, {s}, 1.0, 1.0);
    const double half = out(0, 128) / 2.0;
    const double hwhm = std::sqrt(2.0 * std::log(2.0)) * s;  // 9.419
    CHECK(out(0, 128 + 9) > half);
    CHECK(out(0, 128 + 10) < half);
    CHECK(hwhm == doctest::Approx(1.1774 * s).epsilon(1e-3));
}

TEST_CASE("smoothing width grows with scale") {
    const std::vector<double> scales{4.0, 8.0, 16.0};
    RealGrid g(3, 256);
    for (std::size_t j = 0; j < 3; ++j) g(j, 128) = 1.0;
    const auto out = smooth(g, scales, 1.0, 1.0);  // no cross-scale mixing
    auto half_width = [&](std::size_t j) {
        const double half = out(j, 128) / 2.0;
        std::size_t w = 0;
        for (std::size_t n = 0; n < 256; ++n) {
            if (out(j, n) > half) ++w;
        }
        return w;
    };
    CHECK(half_width(0) < half_width(1));
    CHECK(half_width(1) < half_width(2));
}

TEST_CASE("self coherence is one") {
    const auto f = cwt(oracle::noise_series(200, 9), WaveletParams{});
    const auto coh = wtc(f, f);
    for (double v : coh.r2.data()) CHECK(std::abs(v - 1.0) < 1e-9);
}

TEST_CASE("independent noise has mean coherence well below one") {
    const CwtPlan plan(WaveletParams{}, 304);
    const auto fx = plan.transform(oracle::noise_series(304, 10, "x"));
    const auto fy = plan.transform(oracle::noise_series(304, 11, "y"));
    const auto coh = wtc(fx, fy);
    const double mean =
        std::accumulate(coh.r2.data().begin(), coh.r2.data().end(), 0.0) /
        static_cast<double>(coh.r2.data().size());
    CHECK(mean < 0.6);
    for (double v : coh.r2.data()) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("a shared tone raises coherence in its band") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::coupled_pair;
    spec.n = 304;
    spec.period = 16.0;
    spec.amplitude = 3.0;
    spec.shift = 0;
    spec.window_begin = 0;
    spec.window_end = 303;
    spec.noise_alpha = 0.2;
    spec.noise_sigma = 1.0;
    spec.seed = 12;
    auto [x, y] = make_coupled_pair(spec);
    const CwtPlan plan(WaveletParams{}, 304);
    const auto coh = wtc(plan.transform(x), plan.transform(y));
    const std::size_t tone_row = row_nearest_period(coh.periods, 16.0);
    const std::size_t low_row = row_nearest_period(coh.periods, 4.0);
    const std::size_t high_row = row_nearest_period(coh.periods, 64.0);
    for (std::size_t col : {120u, 152u, 184u}) {
        CHECK(coh.r2(tone_row, col) > coh.r2(low_row, col));
        CHECK(coh.r2(tone_row, col) > coh.r2(high_row, col));
        CHECK(coh.r2(tone_row, col) > 0.8);
    }
}

TEST_CASE("coherence is invariant under rescaling; sign flips shift phase by pi") {
    const auto x = oracle::noise_series(160, 13, "x");
    const auto y = oracle::noise_series(160, 14, "y");
    const CwtPlan plan(WaveletParams{}, 160);
    const auto base = wtc(plan.transform(x), plan.transform(y));

    SUBCASE("positive rescaling changes nothing") {
        const auto coh = wtc(plan.transform(scaled(x, 3.0, "x")),
                             plan.transform(scaled(y, 0.5, "y")));
        for (std::size_t i = 0; i < base.r2.data().size(); ++i) {
            CHECK(std::abs(coh.r2.data()[i] - base.r2.data()[i]) < 1e-9);
            CHECK(std::abs(wrap_angle(coh.phase.data()[i] - base.phase.data()[i])) < 1e-9);
        }
    }
    SUBCASE("one negative factor keeps r2, rotates phase by pi") {
        const auto coh = wtc(plan.transform(scaled(x, 3.0, "x")),
                             plan.transform(scaled(y, -0.5, "y")));
        for (std::size_t i = 0; i < base.r2.data().size(); ++i) {
            CHECK(std::abs(coh.r2.data()[i] - base.r2.data()[i]) < 1e-9);
            CHECK(std::abs(wrap_angle(coh.phase.data()[i] - base.phase.data()[i] - kPi)) < 1e-9);
        }
    }
}

TEST_CASE("coherence symmetry under argument swap") {
    const CwtPlan plan(WaveletParams{}, 160);
    const auto fx = plan.transform(oracle::noise_series(160, 15, "x"));
    const auto fy = plan.transform(oracle::noise_series(160, 16, "y"));
    const auto ab = wtc(fx, fy);
    const auto ba = wtc(fy, fx);
    for (std::size_t i = 0; i < ab.r2.data().size(); ++i) {
        CHECK(std::abs(ab.r2.data()[i] - ba.r2.data()[i]) < 1e-12);
        CHECK(std::abs(wrap_angle(ab.phase.data()[i] + ba.phase.data()[i])) < 1e-12);
    }
}

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wavecoh/coherence.hpp"
#include "wavecoh/errors.hpp"
#include "wavecoh/phase_lag.hpp"
#include "wavecoh/rng.hpp"
#include "wavecoh/significance.hpp"
#include "wavecoh/synthgen.hpp"

using namespace wavecoh;

namespace {

// Recovers the lag of a shifted tone pair from the WTC phase at the tone row.
double recovered_lag(const TimeSeries& x, const TimeSeries& y, double period) {
    const CwtPlan plan(WaveletParams{}, x.size());
    const auto coh = wtc(plan.transform(x), plan.transform(y));
    std::size_t row = 0;
    for (std::size_t j = 1; j < coh.periods.size(); ++j) {
        if (std::abs(coh.periods[j] - period) < std::abs(coh.periods[row] - period)) row = j;
    }
    const std::size_t mid = x.size() / 2;
    return time_lag(coh.phase(row, mid), coh.periods[row]);
}

}  // namespace

TEST_CASE("make_shifted_pair basics") {
    const auto base = oracle::cosine_series(64, 16.0);
    SUBCASE("zero shift is an identical pair") {
        auto [x, y] = make_shifted_pair(base, 0);
        CHECK(x.values == y.values);
    }
    SUBCASE("the shift is circular") {
        auto [x, y] = make_shifted_pair(base, 4);
        CHECK(y.values.size() == x.values.size());
        for (std::size_t i = 4; i < y.size(); ++i) CHECK(y.values[i] == x.values[i - 4]);
        CHECK(y.values[0] == x.values[60]);
    }
    SUBCASE("negative shifts advance the copy") {
        auto [x, y] = make_shifted_pair(base, -4);
        for (std::size_t i = 0; i + 4 < y.size(); ++i) CHECK(y.values[i] == x.values[i + 4]);
    }
}

TEST_CASE("shifted tone pair recovers the phase implied by the shift") {
    const auto base = oracle::cosine_series(256, 16.0);
    SUBCASE("quarter period") {
        auto [x, y] = make_shifted_pair(base, 4);
        CHECK(recovered_lag(x, y, 16.0) == doctest::Approx(4.0).epsilon(0.05));
    }
    SUBCASE("half period is anti-phase") {
        auto [x, y] = make_shifted_pair(base, 8);
        const CwtPlan plan(WaveletParams{}, 256);
        const auto coh = wtc(plan.transform(x), plan.transform(y));
        std::size_t row = 0;
        for (std::size_t j = 1; j < coh.periods.size(); ++j) {
            if (std::abs(coh.periods[j] - 16.0) < std::abs(coh.periods[row] - 16.0)) row = j;
        }
        CHECK(std::abs(coh.phase(row, 128)) ==
              doctest::Approx(3.141592653589793).epsilon(0.02));
    }
}

TEST_CASE("shift recovery inverts the shift within half a sample") {
    for (double period : {8.0, 16.0, 32.0}) {
        const auto base = oracle::cosine_series(256, period);
        auto [x, y] = make_shifted_pair(base, 3);
        const double lag = recovered_lag(x, y, period);
        CHECK(std::abs(lag - 3.0) < 0.5);
    }
}

TEST_CASE("coupled pair with zero amplitude is plain AR(1) noise") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::coupled_pair;
    spec.n = 128;
    spec.amplitude = 0.0;
    spec.window_begin = 40;
    spec.window_end = 80;
    spec.noise_alpha = 0.6;
    spec.noise_sigma = 1.5;
    spec.seed = 5;
    auto [x, y] = make_coupled_pair(spec);
    const AR1Params p{0.6, 1.5, 0.0};
    const auto nx = generate_surrogate(p, 128, derive_seed(5, 0));
    const auto ny = generate_surrogate(p, 128, derive_seed(5, 1));
    CHECK(x.values == nx.values);
    CHECK(y.values == ny.values);
}

TEST_CASE("synthetic generation is seed-deterministic") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::coupled_pair;
    spec.n = 160;
    spec.window_begin = 50;
    spec.window_end = 120;
    spec.shift = 4;
    spec.seed = 31;
    auto [x1, y1] = make_coupled_pair(spec);
    auto [x2, y2] = make_coupled_pair(spec);
    CHECK(x1.values == x2.values);
    CHECK(y1.values == y2.values);
    spec.seed = 32;
    auto [x3, y3] = make_coupled_pair(spec);
    CHECK(x1.values != x3.values);
}

TEST_CASE("synthetic spec validation") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::coupled_pair;
    spec.n = 100;
    spec.window_begin = 50;
    spec.window_end = 120;  // beyond n
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    SyntheticSpec bad_alpha;
    bad_alpha.kind = SyntheticKind::ar1;
    bad_alpha.noise_alpha = 1.0;
    CHECK_THROWS_AS(bad_alpha.validate(), ConfigError);
}

TEST_CASE("generate_series and generate_pair dispatch on kind") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::sinusoid;
    spec.n = 64;
    spec.period = 16.0;
    const auto s = generate_series(spec);
    CHECK(s.size() == 64);
    CHECK(s.values[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(generate_pair(spec), ConfigError);

    spec.kind = SyntheticKind::shifted_copy;
    spec.shift = 4;
    spec.noise_sigma = 0.0;
    auto [x, y] = generate_pair(spec);
    CHECK(x.size() == 64);
    CHECK(y.values[4] == x.values[0]);
    CHECK_THROWS_AS(generate_series(spec), ConfigError);
}

TEST_CASE("sum kind layers noise on the tone") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::sum;
    spec.n = 128;
    spec.period = 16.0;
    spec.amplitude = 2.0;
    spec.noise_alpha = 0.3;
    spec.noise_sigma = 0.5;
    spec.seed = 9;
    const auto s = make_sum(spec);
    const auto tone = make_sinusoid(spec);
    const AR1Params p{0.3, 0.5, 0.0};
    const auto noise = generate_surrogate(p, 128, 9);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s.values[i] == doctest::Approx(tone.values[i] + noise.values[i]).epsilon(1e-12));
    }
}

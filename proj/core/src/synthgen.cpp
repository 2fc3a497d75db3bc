#include "wavecoh/synthgen.hpp"

#include <cmath>

#include "wavecoh/errors.hpp"
#include "wavecoh/rng.hpp"
#include "wavecoh/significance.hpp"

namespace wavecoh {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void SyntheticSpec::validate() const {
    if (n < 2) throw ConfigError("SyntheticSpec: n must be >= 2");
    if (!(dt > 0.0)) throw ConfigError("SyntheticSpec: dt must be > 0");
    if (kind == SyntheticKind::sinusoid || kind == SyntheticKind::sum ||
        kind == SyntheticKind::coupled_pair || kind == SyntheticKind::shifted_copy) {
        if (!(period > 0.0)) throw ConfigError("SyntheticSpec: period must be > 0");
    }
    if (kind != SyntheticKind::sinusoid) {
        if (!(std::abs(noise_alpha) < 1.0)) {
            throw ConfigError("SyntheticSpec: |noise_alpha| must be < 1");
        }
        if (!(noise_sigma >= 0.0)) throw ConfigError("SyntheticSpec: noise_sigma must be >= 0");
    }
    if (kind == SyntheticKind::coupled_pair) {
        if (window_end < window_begin || window_end >= n) {
            throw ConfigError("SyntheticSpec: coupling window must lie within the series");
        }
    }
}

TimeSeries make_sinusoid(const SyntheticSpec& spec) {
    spec.validate();
    TimeSeries s;
    s.name = "sinusoid";
    s.start = spec.start;
    s.step = spec.dt;
    s.values.resize(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        s.values[i] = spec.amplitude * std::cos(kTwoPi * static_cast<double>(i) * spec.dt / spec.period);
    }
    return s;
}

TimeSeries make_ar1_series(const SyntheticSpec& spec) {
    spec.validate();
    if (!(spec.noise_sigma > 0.0)) throw ConfigError("SyntheticSpec: ar1 needs noise_sigma > 0");
    AR1Params p{spec.noise_alpha, spec.noise_sigma, 0.0};
    TimeSeries s = generate_surrogate(p, spec.n, spec.seed);
    s.name = "ar1";
    s.start = spec.start;
    s.step = spec.dt;
    return s;
}

TimeSeries make_sum(const SyntheticSpec& spec) {
    spec.validate();
    TimeSeries s = make_sinusoid(spec);
    s.name = "sum";
    if (spec.noise_sigma > 0.0) {
        AR1Params p{spec.noise_alpha, spec.noise_sigma, 0.0};
        const TimeSeries noise = generate_surrogate(p, spec.n, spec.seed);
        for (std::size_t i = 0; i < spec.n; ++i) s.values[i] += noise.values[i];
    }
    return s;
}

std::pair<TimeSeries, TimeSeries> make_shifted_pair(const TimeSeries& base, int shift) {
    base.validate();
    const long n = static_cast<long>(base.values.size());
    TimeSeries delayed = base;
    delayed.name = base.name + "_delayed";
    for (long i = 0; i < n; ++i) {
        long src = (i - shift) % n;
        if (src < 0) src += n;
        delayed.values[static_cast<std::size_t>(i)] = base.values[static_cast<std::size_t>(src)];
    }
    TimeSeries first = base;
    first.name = base.name;
    return {std::move(first), std::move(delayed)};
}

std::pair<TimeSeries, TimeSeries> make_coupled_pair(const SyntheticSpec& spec) {
    spec.validate();
    if (spec.kind != SyntheticKind::coupled_pair) {
        throw ConfigError("make_coupled_pair: spec.kind must be coupled_pair");
    }
    TimeSeries x, y;
    x.name = "x";
    y.name = "y";
    x.start = y.start = spec.start;
    x.step = y.step = spec.dt;
    x.values.assign(spec.n, 0.0);
    y.values.assign(spec.n, 0.0);

    for (std::size_t i = spec.window_begin; i <= spec.window_end; ++i) {
        const double t = static_cast<double>(i) * spec.dt;
        x.values[i] = spec.amplitude * std::cos(kTwoPi * t / spec.period);
        y.values[i] = spec.amplitude *
                      std::cos(kTwoPi * (t - static_cast<double>(spec.shift) * spec.dt) / spec.period);
    }
    if (spec.noise_sigma > 0.0) {
        AR1Params p{spec.noise_alpha, spec.noise_sigma, 0.0};
        const TimeSeries nx = generate_surrogate(p, spec.n, derive_seed(spec.seed, 0));
        const TimeSeries ny = generate_surrogate(p, spec.n, derive_seed(spec.seed, 1));
        for (std::size_t i = 0; i < spec.n; ++i) {
            x.values[i] += nx.values[i];
            y.values[i] += ny.values[i];
        }
    }
    return {std::move(x), std::move(y)};
}

bool is_pair_kind(SyntheticKind k) {
    return k == SyntheticKind::shifted_copy || k == SyntheticKind::coupled_pair;
}

TimeSeries generate_series(const SyntheticSpec& spec) {
    switch (spec.kind) {
        case SyntheticKind::sinusoid: return make_sinusoid(spec);
        case SyntheticKind::ar1: return make_ar1_series(spec);
        case SyntheticKind::sum: return make_sum(spec);
        default: throw ConfigError("generate_series: spec.kind generates a pair, not a series");
    }
}

std::pair<TimeSeries, TimeSeries> generate_pair(const SyntheticSpec& spec) {
    switch (spec.kind) {
        case SyntheticKind::shifted_copy: {
            auto [first, second] = make_shifted_pair(make_sum(spec), spec.shift);
            first.name = "x";
            second.name = "y";
            return {std::move(first), std::move(second)};
        }
        case SyntheticKind::coupled_pair: return make_coupled_pair(spec);
        default: throw ConfigError("generate_pair: spec.kind generates a single series");
    }
}

}  // namespace wavecoh

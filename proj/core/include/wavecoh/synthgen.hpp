#pragma once

#include <cstdint>
#include <utility>

#include "wavecoh/timeseries.hpp"

namespace wavecoh {

enum class SyntheticKind { sinusoid, ar1, shifted_copy, coupled_pair, sum };

// Ground-truth signal description for validation runs.
struct SyntheticSpec {
    SyntheticKind kind = SyntheticKind::sinusoid;
    std::size_t n = 304;
    double period = 16.0;      // months
    double amplitude = 1.0;
    int shift = 0;             // samples
    std::size_t window_begin = 0;  // coupling window, inclusive sample indices
    std::size_t window_end = 0;
    double noise_alpha = 0.0;
    double noise_sigma = 1.0;
    std::uint64_t seed = 1;
    Month start{2000, 1};
    double dt = 1.0;

    void validate() const;  // throws ConfigError
};

TimeSeries make_sinusoid(const SyntheticSpec& spec);
TimeSeries make_ar1_series(const SyntheticSpec& spec);
TimeSeries make_sum(const SyntheticSpec& spec);  // sinusoid + AR(1) noise

/// (base, base delayed by `shift` samples). The shift is circular so both
/// outputs keep the base length; evaluate away from the wrap seam.
std::pair<TimeSeries, TimeSeries> make_shifted_pair(const TimeSeries& base, int shift);

/// Two series sharing a sinusoid inside [window_begin, window_end], the
/// second with its carrier delayed by `shift` samples, each plus independent
/// AR(1) noise. Deterministic per seed.
std::pair<TimeSeries, TimeSeries> make_coupled_pair(const SyntheticSpec& spec);

bool is_pair_kind(SyntheticKind k);
TimeSeries generate_series(const SyntheticSpec& spec);                    // sinusoid | ar1 | sum
std::pair<TimeSeries, TimeSeries> generate_pair(const SyntheticSpec& s);  // shifted_copy | coupled_pair

}  // namespace wavecoh

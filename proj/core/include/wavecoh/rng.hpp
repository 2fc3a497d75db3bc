#pragma once

#include <cstdint>
#include <random>

namespace wavecoh {

std::uint64_t splitmix64(std::uint64_t& state);

// Stable per-task seed; task k gets an independent stream regardless of the
// order or degree of parallelism.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k);

// Deterministic N(0,1) sampler: Box-Muller over mt19937_64 uniforms. The
// standard library's normal_distribution is implementation-defined; this one
// produces the same stream everywhere.
class NormalRng {
public:
    explicit NormalRng(std::uint64_t seed) : eng_(seed) {}

    double uniform();     // (0, 1]
    double operator()();  // N(0, 1)

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace wavecoh

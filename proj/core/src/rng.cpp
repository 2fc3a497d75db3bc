#include "wavecoh/rng.hpp"

#include <cmath>

namespace wavecoh {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
    std::uint64_t state = base + 0x9e3779b97f4a7c15ULL * (k + 1);
    std::uint64_t mixed = splitmix64(state);
    return splitmix64(state) ^ mixed;
}

double NormalRng::uniform() {
    // 53-bit mantissa, shifted into (0, 1].
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalRng::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.141592653589793238462643383279 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

}  // namespace wavecoh

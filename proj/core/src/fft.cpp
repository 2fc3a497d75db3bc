#include "wavecoh/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace wavecoh::fft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Forward twiddles e^{-2*pi*i*k/n}, k < n/2, cached per size.
const std::vector<std::complex<double>>& roots_for(std::size_t n) {
    static std::map<std::size_t, std::vector<std::complex<double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::complex<double>> r(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
            r[k] = {std::cos(ang), std::sin(ang)};
        }
        it = cache.emplace(n, std::move(r)).first;
    }
    return it->second;
}

}  // namespace

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void transform(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;
    if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto& roots = roots_for(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = roots[k * step];
                if (inverse) w = std::conj(w);
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv;
    }
}

}  // namespace wavecoh::fft

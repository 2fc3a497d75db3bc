#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "wavecoh/fft.hpp"

using namespace wavecoh;

namespace {

std::vector<std::complex<double>> random_signal(std::size_t n, std::uint32_t seed) {
    oracle::GaussianSource g(seed);
    std::vector<std::complex<double>> v(n);
    for (auto& x : v) x = {g(), g()};
    return v;
}

double max_abs_diff(const std::vector<std::complex<double>>& a,
                    const std::vector<std::complex<double>>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("fft matches the direct DFT") {
    for (std::size_t n : {2u, 8u, 64u, 256u}) {
        auto x = random_signal(n, 100 + static_cast<std::uint32_t>(n));
        auto expected = oracle::direct_dft(x);
        auto got = x;
        fft::forward(got);
        CHECK(max_abs_diff(got, expected) < 1e-10 * static_cast<double>(n));
    }
}

TEST_CASE("fft inverse round trip") {
    auto x = random_signal(512, 7);
    auto y = x;
    fft::forward(y);
    fft::inverse(y);
    CHECK(max_abs_diff(x, y) < 1e-12);
}

TEST_CASE("fft rejects non power-of-two sizes") {
    std::vector<std::complex<double>> x(12);
    CHECK_THROWS_AS(fft::forward(x), std::invalid_argument);
}

TEST_CASE("next_pow2") {
    CHECK(fft::next_pow2(1) == 1);
    CHECK(fft::next_pow2(2) == 2);
    CHECK(fft::next_pow2(3) == 4);
    CHECK(fft::next_pow2(304) == 512);
    CHECK(fft::next_pow2(608) == 1024);
}

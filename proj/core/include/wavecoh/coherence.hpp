#pragma once

#include <string>
#include <vector>

#include "wavecoh/cwt.hpp"

namespace wavecoh {

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// Four-quadrant angle of z mapped to (-pi, pi]; 0 for z == 0.
double arg_angle(std::complex<double> z);

/// Cross wavelet transform W^X * conj(W^Y) on a shared grid.
struct CrossField {
    ComplexGrid coeffs;
    std::vector<double> scales;
    std::vector<double> periods;
    std::vector<double> coi;
    WaveletParams params;
    std::string x_name;
    std::string y_name;
    Month start;
};

/// Squared wavelet coherence and smoothed-cross-spectrum phase.
struct CoherenceField {
    RealGrid r2;     // in [0, 1]
    RealGrid phase;  // (-pi, pi]
    std::vector<double> scales;
    std::vector<double> periods;
    std::vector<double> coi;
    WaveletParams params;
    std::string x_name;
    std::string y_name;
    Month start;
};

CrossField xwt(const WaveletField& fx, const WaveletField& fy);

RealGrid cross_power(const CrossField& c);  // |W^XY| (modulus, not squared)
RealGrid cross_phase(const CrossField& c);

/// Time-frequency smoothing: each row convolved in time with a normalized
/// Gaussian exp(-t^2 / (2*scales[j]^2)) (edges reflected), then each column
/// convolved across scales with a normalized boxcar of 0.6/dj rows rounded to
/// the nearest odd integer (truncated and renormalized at the scale edges).
RealGrid smooth(const RealGrid& g, const std::vector<double>& scales, double dt, double dj);
ComplexGrid smooth(const ComplexGrid& g, const std::vector<double>& scales, double dt, double dj);

/// Squared coherence
///   r2 = |S(s^-1 W^XY)|^2 / (S(s^-1 |W^X|^2) * S(s^-1 |W^Y|^2)),
/// clipped to [0, 1]; where either smoothed auto-spectrum underflows 1e-300
/// the ratio is defined as 0. phase is the angle of S(s^-1 W^XY).
CoherenceField wtc(const WaveletField& fx, const WaveletField& fy);

}  // namespace wavecoh

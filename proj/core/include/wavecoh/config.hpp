#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wavecoh/cwt.hpp"
#include "wavecoh/phase_lag.hpp"
#include "wavecoh/synthgen.hpp"

namespace wavecoh {

enum class Transform { levels, log_returns };

struct SeriesSpec {
    std::filesystem::path file;
    std::string time_column = "month";
    std::string column;
    Transform transform = Transform::levels;
    bool standardize = true;
};

struct SignificanceConfig {
    double level = 0.95;
    std::size_t surrogates = 300;
    std::uint64_t seed = 42;
};

enum class PhaseSource { wtc, xwt };

// One study definition: an index series, the commodities analyzed against it,
// and every knob of the pipeline. Parsed from a JSON file (schema in the
// README); all fields have the documented defaults.
struct AnalysisConfig {
    SeriesSpec index;
    std::vector<SeriesSpec> commodities;
    WaveletParams wavelet;
    SignificanceConfig significance;
    std::vector<CrisisWindow> windows;  // default: the 2001/2008/2020 study windows
    double band_split = 6.0;
    double phase_tolerance = 0.15;
    PhaseSource phase_source = PhaseSource::wtc;
    std::size_t arrow_stride_cols = 8;
    std::size_t arrow_stride_rows = 4;
    std::filesystem::path output_dir = "out";
    std::optional<SyntheticSpec> synth;

    static AnalysisConfig from_json_file(const std::filesystem::path& path);
    // base_dir resolves relative data paths.
    static AnalysisConfig from_json_text(const std::string& text,
                                         const std::filesystem::path& base_dir);

    void validate() const;  // structural checks; throws ConfigError
};

std::vector<CrisisWindow> default_windows();

}  // namespace wavecoh

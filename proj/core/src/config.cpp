#include "wavecoh/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

using nlohmann::json;

Transform parse_transform(const std::string& s, const std::string& where) {
    if (s == "levels") return Transform::levels;
    if (s == "log_returns") return Transform::log_returns;
    throw ConfigError(where + ": transform must be 'levels' or 'log_returns', got '" + s + "'");
}

SyntheticKind parse_kind(const std::string& s) {
    if (s == "sinusoid") return SyntheticKind::sinusoid;
    if (s == "ar1") return SyntheticKind::ar1;
    if (s == "shifted_copy") return SyntheticKind::shifted_copy;
    if (s == "coupled_pair") return SyntheticKind::coupled_pair;
    if (s == "sum") return SyntheticKind::sum;
    throw ConfigError("synth.kind: unknown kind '" + s + "'");
}

Month parse_month_field(const json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + ": expected a \"YYYY-MM\" string");
    Month m;
    if (!Month::try_parse(j.get<std::string>(), m)) {
        throw ConfigError(where + ": invalid month '" + j.get<std::string>() + "'");
    }
    return m;
}

SeriesSpec parse_series(const json& j, const std::filesystem::path& base_dir,
                        const std::string& where, Transform default_transform) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    SeriesSpec s;
    if (!j.contains("file")) throw ConfigError(where + ".file: required");
    if (!j.contains("column")) throw ConfigError(where + ".column: required");
    std::filesystem::path f = j.at("file").get<std::string>();
    s.file = f.is_absolute() ? f : base_dir / f;
    s.column = j.at("column").get<std::string>();
    s.time_column = j.value("time_column", std::string("month"));
    s.transform = j.contains("transform")
                      ? parse_transform(j.at("transform").get<std::string>(), where)
                      : default_transform;
    s.standardize = j.value("standardize", true);
    return s;
}

SyntheticSpec parse_synth(const json& j) {
    SyntheticSpec s;
    if (!j.contains("kind")) throw ConfigError("synth.kind: required");
    s.kind = parse_kind(j.at("kind").get<std::string>());
    s.n = j.value("n", s.n);
    s.period = j.value("period", s.period);
    s.amplitude = j.value("amplitude", s.amplitude);
    s.shift = j.value("shift", s.shift);
    if (j.contains("window")) {
        const auto& w = j.at("window");
        if (!w.is_array() || w.size() != 2) {
            throw ConfigError("synth.window: expected [begin, end] sample indices");
        }
        s.window_begin = w[0].get<std::size_t>();
        s.window_end = w[1].get<std::size_t>();
    }
    s.noise_alpha = j.value("noise_alpha", s.noise_alpha);
    s.noise_sigma = j.value("noise_sigma", s.noise_sigma);
    s.seed = j.value("seed", s.seed);
    if (j.contains("start")) s.start = parse_month_field(j.at("start"), "synth.start");
    s.dt = j.value("dt", s.dt);
    return s;
}

}  // namespace

std::vector<CrisisWindow> default_windows() {
    return {
        {"2001", Month{2000, 3}, Month{2002, 12}},
        {"2008", Month{2007, 6}, Month{2009, 12}},
        {"2020", Month{2020, 1}, Month{2021, 12}},
    };
}

AnalysisConfig AnalysisConfig::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), path.has_parent_path() ? path.parent_path() : ".");
}

AnalysisConfig AnalysisConfig::from_json_text(const std::string& text,
                                              const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");

    AnalysisConfig c;
    try {
        if (j.contains("index")) {
            c.index = parse_series(j.at("index"), base_dir, "index", Transform::levels);
        }
        if (j.contains("commodities")) {
            const auto& arr = j.at("commodities");
            if (!arr.is_array()) throw ConfigError("commodities: expected an array");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                c.commodities.push_back(parse_series(arr[i], base_dir,
                                                     "commodities[" + std::to_string(i) + "]",
                                                     Transform::log_returns));
            }
        }
        if (j.contains("wavelet")) {
            const auto& w = j.at("wavelet");
            c.wavelet.omega0 = w.value("omega0", c.wavelet.omega0);
            c.wavelet.dt = w.value("dt", c.wavelet.dt);
            c.wavelet.s0 = w.value("s0", c.wavelet.s0);
            c.wavelet.dj = w.value("dj", c.wavelet.dj);
            c.wavelet.num_scales = w.value("num_scales", c.wavelet.num_scales);
            c.wavelet.pad = w.value("pad", c.wavelet.pad);
        }
        if (j.contains("significance")) {
            const auto& s = j.at("significance");
            c.significance.level = s.value("level", c.significance.level);
            c.significance.surrogates = s.value("surrogates", c.significance.surrogates);
            c.significance.seed = s.value("seed", c.significance.seed);
        }
        if (j.contains("windows")) {
            const auto& arr = j.at("windows");
            if (!arr.is_array()) throw ConfigError("windows: expected an array");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const auto& w = arr[i];
                const std::string where = "windows[" + std::to_string(i) + "]";
                CrisisWindow cw;
                if (!w.contains("label")) throw ConfigError(where + ".label: required");
                cw.label = w.at("label").get<std::string>();
                cw.start = parse_month_field(w.at("start"), where + ".start");
                cw.end = parse_month_field(w.at("end"), where + ".end");
                if (cw.end < cw.start) throw ConfigError(where + ": end before start");
                c.windows.push_back(std::move(cw));
            }
        } else {
            c.windows = default_windows();
        }
        c.band_split = j.value("band_split_months", c.band_split);
        c.phase_tolerance = j.value("phase_tolerance", c.phase_tolerance);
        if (j.contains("phase_source")) {
            const std::string s = j.at("phase_source").get<std::string>();
            if (s == "wtc") {
                c.phase_source = PhaseSource::wtc;
            } else if (s == "xwt") {
                c.phase_source = PhaseSource::xwt;
            } else {
                throw ConfigError("phase_source: must be 'wtc' or 'xwt'");
            }
        }
        c.arrow_stride_cols = j.value("arrow_stride_cols", c.arrow_stride_cols);
        c.arrow_stride_rows = j.value("arrow_stride_rows", c.arrow_stride_rows);
        if (j.contains("output_dir")) {
            std::filesystem::path p = j.at("output_dir").get<std::string>();
            c.output_dir = p.is_absolute() ? p : base_dir / p;
        } else {
            c.output_dir = base_dir / "out";
        }
        if (j.contains("synth")) c.synth = parse_synth(j.at("synth"));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

void AnalysisConfig::validate() const {
    if (index.column.empty() || index.file.empty()) {
        throw ConfigError("config: index series (file, column) is required");
    }
    if (commodities.empty()) {
        throw ConfigError("config: commodities must contain at least one entry");
    }
    wavelet.validate();
    if (!(significance.level > 0.5 && significance.level < 1.0)) {
        throw ConfigError("config: significance.level must be in (0.5, 1)");
    }
    if (significance.surrogates < 100) {
        throw ConfigError("config: significance.surrogates must be >= 100");
    }
    if (windows.empty()) throw ConfigError("config: at least one crisis window is required");
    if (!(band_split > 0.0)) throw ConfigError("config: band_split_months must be > 0");
    if (!(phase_tolerance >= 0.0)) throw ConfigError("config: phase_tolerance must be >= 0");
    if (arrow_stride_cols == 0 || arrow_stride_rows == 0) {
        throw ConfigError("config: arrow strides must be >= 1");
    }
}

}  // namespace wavecoh

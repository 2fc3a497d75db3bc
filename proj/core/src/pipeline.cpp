#include "wavecoh/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

#include "wavecoh/coherence.hpp"
#include "wavecoh/errors.hpp"
#include "wavecoh/gridio.hpp"
#include "wavecoh/ingest.hpp"
#include "wavecoh/parallel.hpp"
#include "wavecoh/render.hpp"
#include "wavecoh/significance.hpp"

namespace wavecoh {

namespace {

TimeSeries load_series(const SeriesSpec& spec) {
    TimeSeries s = load_csv(spec.file, spec.time_column, spec.column);
    if (spec.transform == Transform::log_returns) s = log_returns(s);
    if (spec.standardize) s = standardize(s);
    return s;
}

void check_windows(const AnalysisConfig& config, const TimeSeries& aligned) {
    for (const auto& w : config.windows) {
        if (w.start < aligned.start || aligned.end() < w.end) {
            throw ConfigError("window '" + w.label + "' (" + w.start.str() + ".." + w.end.str() +
                              ") is outside the aligned data range " + aligned.start.str() + ".." +
                              aligned.end().str());
        }
    }
}

void check_finite(const RealGrid& g, const std::string& what) {
    for (double v : g.data()) {
        if (!std::isfinite(v)) throw NumericError(what + ": non-finite value produced");
    }
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

std::vector<std::string> pair_artifact_names() {
    return {artifact::power_x,      artifact::power_y,      artifact::xwt_power,
            artifact::xwt_phase,    artifact::wtc_r2,       artifact::wtc_phase,
            artifact::mask_power_x, artifact::mask_power_y, artifact::mask_xwt,
            artifact::mask_wtc,     artifact::coi,          artifact::thresholds,
            artifact::summary,      artifact::fig_power,    artifact::fig_xwt,
            artifact::fig_wtc};
}

std::string sanitize_name(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') {
            out += c;
        } else {
            out += '_';
        }
    }
    return out.empty() ? "series" : out;
}

std::string summary_csv_header() {
    return "commodity,window,band,direction,delay_min_months,delay_max_months,area_cells,"
           "mean_r2";
}

std::string summary_csv_row(const std::string& commodity, const RegionSummary& row) {
    return commodity + ',' + row.window + ',' + to_string(row.band) + ',' +
           to_string(row.direction) + ',' + format_double(row.delay_min) + ',' +
           format_double(row.delay_max) + ',' + std::to_string(row.area) + ',' +
           format_double(row.mean_r2);
}

PairArtifacts run_pair(const AnalysisConfig& config, const SeriesSpec& commodity) {
    config.wavelet.validate();
    const TimeSeries raw_x = load_series(config.index);
    const TimeSeries raw_y = load_series(commodity);
    auto [sx, sy] = align(raw_x, raw_y);  // index is always the first series
    check_windows(config, sx);

    const std::size_t n = sx.size();
    const WaveletParams params = config.wavelet.resolved(n);
    const CwtPlan plan(params, n);
    const WaveletField fx = plan.transform(sx);
    const WaveletField fy = plan.transform(sy);

    const AR1Params ar1_x = fit_ar1(sx);
    const AR1Params ar1_y = fit_ar1(sy);
    const double level = config.significance.level;

    const SignificanceMask pmask_x = power_significance(fx, ar1_x, level);
    const SignificanceMask pmask_y = power_significance(fy, ar1_y, level);

    const CrossField cross = xwt(fx, fy);
    const CoherenceField coh = wtc(fx, fy);
    check_finite(coh.r2, "wtc r2 (" + sy.name + ")");

    McOptions mc;
    mc.n_surrogates = config.significance.surrogates;
    mc.level = level;
    mc.seed = config.significance.seed;
    const PairNullThresholds null_thr = mc_pair_thresholds(params, n, ar1_x, ar1_y, mc);

    const RealGrid xwt_stat =
        normalized_cross_power(cross, sample_sd(sx.values), sample_sd(sy.values));
    const SignificanceMask wtc_mask =
        apply_thresholds(coh.r2, null_thr.wtc, level, SignificanceMethod::mc_wtc);
    const SignificanceMask xwt_mask =
        apply_thresholds(xwt_stat, null_thr.xwt, level, SignificanceMethod::mc_xwt);

    const RealGrid xwt_phase_grid = cross_phase(cross);
    const RealGrid& phase_grid =
        config.phase_source == PhaseSource::wtc ? coh.phase : xwt_phase_grid;

    const auto regions =
        significant_regions(wtc_mask.mask, xwt_mask.mask, plan.periods(), plan.coi());
    const BandSummaryOptions bopt{config.band_split, config.phase_tolerance};
    const auto summaries = band_summary(regions, phase_grid, coh.r2, plan.periods(), sx.start,
                                        sx.step, config.windows, bopt);

    PairArtifacts out;
    out.commodity = sy.name;
    out.dir = config.output_dir / sanitize_name(sy.name);
    std::filesystem::create_directories(out.dir);
    out.summaries = summaries;
    for (const auto& row : summaries) {
        if (row.direction_tie) {
            out.warnings.push_back("window '" + row.window + "' " + to_string(row.band) +
                                   " band: direction vote tie, reported as in_phase");
        }
    }

    const auto& periods = plan.periods();
    const Month start = sx.start;
    const double step = sx.step;
    write_grid_csv(out.dir / artifact::power_x, power(fx), periods, start, step);
    write_grid_csv(out.dir / artifact::power_y, power(fy), periods, start, step);
    write_grid_csv(out.dir / artifact::xwt_power, cross_power(cross), periods, start, step);
    write_grid_csv(out.dir / artifact::xwt_phase, xwt_phase_grid, periods, start, step);
    write_grid_csv(out.dir / artifact::wtc_r2, coh.r2, periods, start, step);
    write_grid_csv(out.dir / artifact::wtc_phase, coh.phase, periods, start, step);
    write_mask_csv(out.dir / artifact::mask_power_x, pmask_x.mask, periods, start, step);
    write_mask_csv(out.dir / artifact::mask_power_y, pmask_y.mask, periods, start, step);
    write_mask_csv(out.dir / artifact::mask_xwt, xwt_mask.mask, periods, start, step);
    write_mask_csv(out.dir / artifact::mask_wtc, wtc_mask.mask, periods, start, step);
    write_coi_csv(out.dir / artifact::coi, plan.coi(), start, step);

    {
        auto f = open_out(out.dir / artifact::thresholds);
        f << "scale,period,wtc_threshold,xwt_threshold\n";
        for (std::size_t j = 0; j < periods.size(); ++j) {
            f << format_double(plan.scales()[j]) << ',' << format_double(periods[j]) << ','
              << format_double(null_thr.wtc[j]) << ',' << format_double(null_thr.xwt[j]) << '\n';
        }
    }
    {
        auto f = open_out(out.dir / artifact::summary);
        f << summary_csv_header() << '\n';
        for (const auto& row : summaries) f << summary_csv_row(sy.name, row) << '\n';
    }

    RenderOptions ropt;
    ropt.arrow_stride_cols = config.arrow_stride_cols;
    ropt.arrow_stride_rows = config.arrow_stride_rows;
    const Image fig_px = render_heatmap(power(fx), periods, plan.coi(), start, step,
                                        &pmask_x.mask, nullptr, ropt);
    const Image fig_py = render_heatmap(power(fy), periods, plan.coi(), start, step,
                                        &pmask_y.mask, nullptr, ropt);
    stack_vertical(fig_px, fig_py).write_ppm(out.dir / artifact::fig_power);
    render_heatmap(cross_power(cross), periods, plan.coi(), start, step, &xwt_mask.mask,
                   &xwt_phase_grid, ropt)
        .write_ppm(out.dir / artifact::fig_xwt);
    RenderOptions wopt = ropt;
    wopt.vmin = 0.0;
    wopt.vmax = 1.0;
    render_heatmap(coh.r2, periods, plan.coi(), start, step, &wtc_mask.mask, &phase_grid, wopt)
        .write_ppm(out.dir / artifact::fig_wtc);

    return out;
}

BatchResult run_batch(const AnalysisConfig& config) {
    config.validate();

    // Per-pair output directories must not collide.
    std::set<std::string> names;
    for (const auto& c : config.commodities) {
        if (!names.insert(sanitize_name(c.column)).second) {
            throw ConfigError("config: duplicate commodity output name '" +
                              sanitize_name(c.column) + "'");
        }
    }

    BatchResult result;
    result.pairs.resize(config.commodities.size());
    parallel_for(config.commodities.size(), 0, [&](std::size_t i) {
        result.pairs[i] = run_pair(config, config.commodities[i]);
    });

    result.summary_csv = config.output_dir / "summary_all.csv";
    {
        auto f = open_out(result.summary_csv);
        f << summary_csv_header() << '\n';
        for (const auto& pair : result.pairs) {
            for (const auto& row : pair.summaries) f << summary_csv_row(pair.commodity, row) << '\n';
        }
    }

    result.coverage_csv = config.output_dir / "coverage.csv";
    {
        auto f = open_out(result.coverage_csv);
        f << "commodity,window,band\n";
        for (const auto& pair : result.pairs) {
            for (const auto& w : config.windows) {
                for (Band band : {Band::high, Band::low}) {
                    const bool covered =
                        std::any_of(pair.summaries.begin(), pair.summaries.end(),
                                    [&](const RegionSummary& r) {
                                        return r.window == w.label && r.band == band;
                                    });
                    if (!covered) {
                        f << pair.commodity << ',' << w.label << ',' << to_string(band) << '\n';
                    }
                }
            }
        }
    }
    return result;
}

}  // namespace wavecoh

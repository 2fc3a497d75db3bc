#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wavecoh/config.hpp"
#include "wavecoh/errors.hpp"
#include "wavecoh/gridio.hpp"
#include "wavecoh/pipeline.hpp"
#include "wavecoh/render.hpp"
#include "wavecoh/synthgen.hpp"

namespace {

using namespace wavecoh;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> level;
    std::optional<std::size_t> surrogates;
    std::optional<std::string> out;
};

void apply(const Overrides& o, AnalysisConfig& config) {
    if (o.seed) config.significance.seed = *o.seed;
    if (o.level) config.significance.level = *o.level;
    if (o.surrogates) config.significance.surrogates = *o.surrogates;
    if (o.out) config.output_dir = *o.out;
}

void add_override_flags(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--seed", o.seed, "Monte Carlo seed (overrides config)");
    cmd->add_option("--level", o.level, "significance level (overrides config)");
    cmd->add_option("--surrogates", o.surrogates, "surrogate count (overrides config)");
    cmd->add_option("--out", o.out, "output directory (overrides config)");
}

void report(const PairArtifacts& pair) {
    for (const auto& w : pair.warnings) {
        std::cerr << "warning: " << pair.commodity << ": " << w << '\n';
    }
    std::cout << pair.commodity << ": " << pair.summaries.size()
              << " summary rows -> " << pair.dir.string() << '\n';
}

int run_analyze(const std::string& config_path, const Overrides& o, const std::string& pair_name) {
    AnalysisConfig config = AnalysisConfig::from_json_file(config_path);
    apply(o, config);
    config.validate();
    const SeriesSpec* spec = &config.commodities.front();
    if (!pair_name.empty()) {
        spec = nullptr;
        for (const auto& c : config.commodities) {
            if (c.column == pair_name) spec = &c;
        }
        if (!spec) throw ConfigError("--pair: no commodity with column '" + pair_name + "'");
    }
    report(run_pair(config, *spec));
    return 0;
}

int run_batch_cmd(const std::string& config_path, const Overrides& o) {
    AnalysisConfig config = AnalysisConfig::from_json_file(config_path);
    apply(o, config);
    config.validate();
    const BatchResult result = run_batch(config);
    for (const auto& pair : result.pairs) report(pair);
    std::cout << "combined summary: " << result.summary_csv.string() << '\n'
              << "coverage report:  " << result.coverage_csv.string() << '\n';
    return 0;
}

int run_synth(const std::string& config_path, const Overrides& o, std::string out_file) {
    AnalysisConfig config = AnalysisConfig::from_json_file(config_path);
    apply(o, config);
    if (!config.synth) throw ConfigError("config: synth section is required for the synth command");
    SyntheticSpec spec = *config.synth;
    if (o.seed) spec.seed = *o.seed;
    spec.validate();
    std::filesystem::path path =
        out_file.empty() ? config.output_dir / "synth.csv" : std::filesystem::path(out_file);
    if (is_pair_kind(spec.kind)) {
        auto [x, y] = generate_pair(spec);
        write_series_csv(path, {x, y});
    } else {
        TimeSeries s = generate_series(spec);
        s.name = "x";
        write_series_csv(path, {s});
    }
    std::cout << "wrote " << path.string() << '\n';
    return 0;
}

int run_render(const std::string& grid_path, const std::string& coi_path,
               const std::string& mask_path, const std::string& phase_path,
               std::optional<double> vmin, std::optional<double> vmax,
               const std::string& out_path) {
    const GridCsv grid = read_grid_csv(grid_path);
    const std::vector<double> coi = read_coi_csv(coi_path);
    if (coi.size() != grid.values.cols()) {
        throw DataError("render: coi length does not match the grid");
    }
    MaskGrid mask;
    RealGrid phase_grid;
    const MaskGrid* mask_ptr = nullptr;
    const RealGrid* phase_ptr = nullptr;
    if (!mask_path.empty()) {
        mask = to_mask(read_grid_csv(mask_path).values);
        if (!mask.same_shape(grid.values)) throw DataError("render: mask shape mismatch");
        mask_ptr = &mask;
    }
    if (!phase_path.empty()) {
        phase_grid = read_grid_csv(phase_path).values;
        if (!phase_grid.same_shape(grid.values)) throw DataError("render: phase shape mismatch");
        phase_ptr = &phase_grid;
    }
    RenderOptions opt;
    opt.vmin = vmin;
    opt.vmax = vmax;
    render_heatmap(grid.values, grid.periods, coi, grid.start(), 1.0, mask_ptr, phase_ptr, opt)
        .write_ppm(out_path);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelet comovement analysis for monthly series"};
    app.require_subcommand(1);

    std::string config_path, pair_name, out_file;
    std::string grid_path, coi_path, mask_path, phase_path, render_out;
    std::optional<double> vmin, vmax;
    Overrides o;

    auto* analyze = app.add_subcommand("analyze", "analyze one index/commodity pair");
    analyze->add_option("--config", config_path, "JSON config file")->required();
    analyze->add_option("--pair", pair_name, "commodity column (default: first configured)");
    add_override_flags(analyze, o);

    auto* batch = app.add_subcommand("batch", "analyze every configured commodity");
    batch->add_option("--config", config_path, "JSON config file")->required();
    add_override_flags(batch, o);

    auto* synth = app.add_subcommand("synth", "generate a synthetic series or pair");
    synth->add_option("--config", config_path, "JSON config file with a synth section")->required();
    synth->add_option("--out-file", out_file, "output CSV path");
    add_override_flags(synth, o);

    auto* render = app.add_subcommand("render", "re-render a heatmap from exported grids");
    render->add_option("--grid", grid_path, "value grid CSV")->required();
    render->add_option("--coi", coi_path, "cone-of-influence CSV")->required();
    render->add_option("--mask", mask_path, "0/1 mask grid CSV");
    render->add_option("--phase", phase_path, "phase grid CSV for arrows");
    render->add_option("--vmin", vmin, "fixed color range minimum");
    render->add_option("--vmax", vmax, "fixed color range maximum");
    render->add_option("--out", render_out, "output PPM path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems are config errors
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(config_path, o, pair_name);
        if (app.got_subcommand(batch)) return run_batch_cmd(config_path, o);
        if (app.got_subcommand(synth)) return run_synth(config_path, o, out_file);
        if (app.got_subcommand(render)) {
            return run_render(grid_path, coi_path, mask_path, phase_path, vmin, vmax, render_out);
        }
    } catch (const wavecoh::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const wavecoh::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const wavecoh::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

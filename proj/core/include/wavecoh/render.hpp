#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wavecoh/grid.hpp"
#include "wavecoh/month.hpp"

namespace wavecoh {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

class Image {
public:
    Image() = default;
    Image(std::size_t width, std::size_t height, Rgb fill = {255, 255, 255});

    std::size_t width() const { return w_; }
    std::size_t height() const { return h_; }

    Rgb get(std::size_t x, std::size_t y) const;
    void set(std::size_t x, std::size_t y, Rgb c);  // out-of-bounds ignored

    void line(int x0, int y0, int x1, int y1, Rgb c);
    void fill_rect(std::size_t x, std::size_t y, std::size_t w, std::size_t h, Rgb c);

    void write_ppm(const std::filesystem::path& path) const;  // binary P6

private:
    std::size_t w_ = 0, h_ = 0;
    std::vector<std::uint8_t> px_;
};

/// Low -> blue, high -> yellow.
Rgb colormap(double t);
Rgb dim(Rgb c);  // cone-of-influence shading

// 5x7 bitmap digits/punctuation, enough for axis labels.
void draw_text(Image& img, int x, int y, const std::string& text, Rgb c);

struct RenderOptions {
    std::size_t cell_w = 3;
    std::size_t cell_h = 6;
    std::size_t arrow_stride_cols = 8;
    std::size_t arrow_stride_rows = 4;
    std::optional<double> vmin;  // default: data range
    std::optional<double> vmax;
};

// Pixel geometry of a heatmap; exposed so tests can address cells.
struct HeatmapLayout {
    std::size_t margin_left = 56;
    std::size_t margin_top = 8;
    std::size_t margin_right = 12;
    std::size_t margin_bottom = 26;
    std::size_t cell_w = 3;
    std::size_t cell_h = 6;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t image_width() const { return margin_left + cols * cell_w + margin_right; }
    std::size_t image_height() const { return margin_top + rows * cell_h + margin_bottom; }
    std::size_t cell_x(std::size_t n) const { return margin_left + n * cell_w; }
    std::size_t cell_y(std::size_t j) const { return margin_top + j * cell_h; }
};

HeatmapLayout heatmap_layout(std::size_t rows, std::size_t cols, const RenderOptions& opt);

struct Arrow {
    std::size_t row = 0;
    std::size_t col = 0;
    double angle = 0.0;  // counterclockwise from rightward
};

/// Arrow lattice for phase overlays: one arrow per stride block, only where
/// the period is below the cone-of-influence curve.
std::vector<Arrow> arrow_lattice(const RealGrid& phase, const std::vector<double>& periods,
                                 const std::vector<double>& coi,
                                 std::size_t stride_rows, std::size_t stride_cols);

/// Heatmap with log2-period y axis (smallest period on top), calendar x axis,
/// dimmed-and-hatched cone of influence, black significance contour at the
/// mask boundary, and phase arrows measured counterclockwise from rightward.
/// mask and phase_grid may be null.
Image render_heatmap(const RealGrid& grid, const std::vector<double>& periods,
                     const std::vector<double>& coi, Month start, double step,
                     const MaskGrid* mask, const RealGrid* phase_grid,
                     const RenderOptions& opt = {}, const std::string& title = "");

Image stack_vertical(const Image& a, const Image& b, std::size_t gap = 4);

}  // namespace wavecoh

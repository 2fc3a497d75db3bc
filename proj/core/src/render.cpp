#include "wavecoh/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// 5x7 glyphs for axis labels; each byte is one row, low 5 bits used.
struct Glyph {
    char ch;
    std::uint8_t rows[7];
};

constexpr Glyph kFont[] = {
    {'0', {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}},
    {'1', {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}},
    {'2', {0x0E, 0x11, 0x01, 0x06, 0x08, 0x10, 0x1F}},
    {'3', {0x0E, 0x11, 0x01, 0x06, 0x01, 0x11, 0x0E}},
    {'4', {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}},
    {'5', {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}},
    {'6', {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}},
    {'7', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},
    {'8', {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}},
    {'9', {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}},
    {'-', {0x00, 0x00, 0x00, 0x1F, 0x00, 0x00, 0x00}},
    {'.', {0x00, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x0C}},
    {' ', {0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},
};

const Glyph* find_glyph(char c) {
    for (const auto& g : kFont) {
        if (g.ch == c) return &g;
    }
    return nullptr;
}

struct Stop {
    double t;
    double r, g, b;
};

// Blue -> teal -> green -> yellow ramp.
constexpr Stop kRamp[] = {
    {0.00, 12.0, 16.0, 138.0},
    {0.35, 28.0, 106.0, 196.0},
    {0.70, 46.0, 178.0, 124.0},
    {1.00, 248.0, 230.0, 58.0},
};

}  // namespace

Image::Image(std::size_t width, std::size_t height, Rgb fill)
    : w_(width), h_(height), px_(width * height * 3) {
    for (std::size_t i = 0; i < width * height; ++i) {
        px_[3 * i] = fill.r;
        px_[3 * i + 1] = fill.g;
        px_[3 * i + 2] = fill.b;
    }
}

Rgb Image::get(std::size_t x, std::size_t y) const {
    if (x >= w_ || y >= h_) return {};
    const std::size_t i = 3 * (y * w_ + x);
    return {px_[i], px_[i + 1], px_[i + 2]};
}

void Image::set(std::size_t x, std::size_t y, Rgb c) {
    if (x >= w_ || y >= h_) return;
    const std::size_t i = 3 * (y * w_ + x);
    px_[i] = c.r;
    px_[i + 1] = c.g;
    px_[i + 2] = c.b;
}

void Image::line(int x0, int y0, int x1, int y1, Rgb c) {
    const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        if (x0 >= 0 && y0 >= 0) set(static_cast<std::size_t>(x0), static_cast<std::size_t>(y0), c);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

void Image::fill_rect(std::size_t x, std::size_t y, std::size_t w, std::size_t h, Rgb c) {
    for (std::size_t yy = y; yy < y + h; ++yy) {
        for (std::size_t xx = x; xx < x + w; ++xx) set(xx, yy, c);
    }
}

void Image::write_ppm(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << "P6\n" << w_ << ' ' << h_ << "\n255\n";
    out.write(reinterpret_cast<const char*>(px_.data()), static_cast<std::streamsize>(px_.size()));
}

Rgb colormap(double t) {
    t = std::clamp(t, 0.0, 1.0);
    std::size_t hi = 1;
    while (hi + 1 < std::size(kRamp) && kRamp[hi].t < t) ++hi;
    const Stop& a = kRamp[hi - 1];
    const Stop& b = kRamp[hi];
    const double f = (t - a.t) / (b.t - a.t);
    auto mix = [f](double x, double y) {
        return static_cast<std::uint8_t>(std::lround(x + f * (y - x)));
    };
    return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

Rgb dim(Rgb c) {
    auto d = [](std::uint8_t v) { return static_cast<std::uint8_t>((v * 55) / 100); };
    return {d(c.r), d(c.g), d(c.b)};
}

void draw_text(Image& img, int x, int y, const std::string& text, Rgb c) {
    for (char ch : text) {
        const Glyph* g = find_glyph(ch);
        if (g) {
            for (int r = 0; r < 7; ++r) {
                for (int b = 0; b < 5; ++b) {
                    if (g->rows[r] & (1 << (4 - b))) {
                        img.set(static_cast<std::size_t>(x + b), static_cast<std::size_t>(y + r), c);
                    }
                }
            }
        }
        x += 6;
    }
}

HeatmapLayout heatmap_layout(std::size_t rows, std::size_t cols, const RenderOptions& opt) {
    HeatmapLayout l;
    l.cell_w = opt.cell_w;
    l.cell_h = opt.cell_h;
    l.rows = rows;
    l.cols = cols;
    return l;
}

std::vector<Arrow> arrow_lattice(const RealGrid& phase, const std::vector<double>& periods,
                                 const std::vector<double>& coi,
                                 std::size_t stride_rows, std::size_t stride_cols) {
    if (phase.rows() != periods.size() || phase.cols() != coi.size()) {
        throw std::invalid_argument("arrow_lattice: grids do not share axes");
    }
    if (stride_rows == 0 || stride_cols == 0) {
        throw std::invalid_argument("arrow_lattice: strides must be >= 1");
    }
    std::vector<Arrow> arrows;
    for (std::size_t j = stride_rows / 2; j < phase.rows(); j += stride_rows) {
        for (std::size_t n = stride_cols / 2; n < phase.cols(); n += stride_cols) {
            if (periods[j] >= coi[n]) continue;  // edge-contaminated
            arrows.push_back({j, n, phase(j, n)});
        }
    }
    return arrows;
}

namespace {

void draw_arrow(Image& img, double cx, double cy, double angle, double len, Rgb c) {
    const double dx = std::cos(angle) * len / 2.0;
    const double dy = -std::sin(angle) * len / 2.0;  // screen y grows downward
    const int x0 = static_cast<int>(std::lround(cx - dx));
    const int y0 = static_cast<int>(std::lround(cy - dy));
    const int x1 = static_cast<int>(std::lround(cx + dx));
    const int y1 = static_cast<int>(std::lround(cy + dy));
    img.line(x0, y0, x1, y1, c);
    for (double side : {0.75 * kPi, -0.75 * kPi}) {
        const double hx = std::cos(angle + side) * len * 0.35;
        const double hy = -std::sin(angle + side) * len * 0.35;
        img.line(x1, y1, static_cast<int>(std::lround(x1 + hx)),
                 static_cast<int>(std::lround(y1 + hy)), c);
    }
}

}  // namespace

Image render_heatmap(const RealGrid& grid, const std::vector<double>& periods,
                     const std::vector<double>& coi, Month start, double step,
                     const MaskGrid* mask, const RealGrid* phase_grid,
                     const RenderOptions& opt, const std::string& title) {
    if (grid.rows() != periods.size() || grid.cols() != coi.size()) {
        throw std::invalid_argument("render_heatmap: grids do not share axes");
    }
    if (mask && !mask->same_shape(grid)) {
        throw std::invalid_argument("render_heatmap: mask shape mismatch");
    }
    if (phase_grid && !phase_grid->same_shape(grid)) {
        throw std::invalid_argument("render_heatmap: phase shape mismatch");
    }

    const HeatmapLayout l = heatmap_layout(grid.rows(), grid.cols(), opt);
    Image img(l.image_width(), l.image_height());

    double vmin = opt.vmin.value_or(*std::min_element(grid.data().begin(), grid.data().end()));
    double vmax = opt.vmax.value_or(*std::max_element(grid.data().begin(), grid.data().end()));
    if (!(vmax > vmin)) vmax = vmin + 1.0;

    // Cells, cone shading, hatch.
    for (std::size_t j = 0; j < grid.rows(); ++j) {
        for (std::size_t n = 0; n < grid.cols(); ++n) {
            const double t = (grid(j, n) - vmin) / (vmax - vmin);
            Rgb c = colormap(t);
            const bool contaminated = periods[j] >= coi[n];
            if (contaminated) c = dim(c);
            const std::size_t x0 = l.cell_x(n), y0 = l.cell_y(j);
            for (std::size_t y = y0; y < y0 + l.cell_h; ++y) {
                for (std::size_t x = x0; x < x0 + l.cell_w; ++x) {
                    Rgb px = c;
                    if (contaminated && (x + y) % 7 == 0) px = dim(px);
                    img.set(x, y, px);
                }
            }
        }
    }

    // Significance contour: black cell borders between masked and unmasked.
    if (mask) {
        const Rgb black{0, 0, 0};
        for (std::size_t j = 0; j < grid.rows(); ++j) {
            for (std::size_t n = 0; n < grid.cols(); ++n) {
                if (!(*mask)(j, n)) continue;
                const std::size_t x0 = l.cell_x(n), y0 = l.cell_y(j);
                const bool top = j == 0 || !(*mask)(j - 1, n);
                const bool bottom = j + 1 == grid.rows() || !(*mask)(j + 1, n);
                const bool left = n == 0 || !(*mask)(j, n - 1);
                const bool right = n + 1 == grid.cols() || !(*mask)(j, n + 1);
                if (top) img.fill_rect(x0, y0, l.cell_w, 1, black);
                if (bottom) img.fill_rect(x0, y0 + l.cell_h - 1, l.cell_w, 1, black);
                if (left) img.fill_rect(x0, y0, 1, l.cell_h, black);
                if (right) img.fill_rect(x0 + l.cell_w - 1, y0, 1, l.cell_h, black);
            }
        }
    }

    // Phase arrows.
    if (phase_grid) {
        const auto arrows =
            arrow_lattice(*phase_grid, periods, coi, opt.arrow_stride_rows, opt.arrow_stride_cols);
        const double len =
            0.8 * static_cast<double>(std::min(opt.arrow_stride_cols * l.cell_w,
                                               opt.arrow_stride_rows * l.cell_h));
        for (const auto& a : arrows) {
            const double cx = static_cast<double>(l.cell_x(a.col)) + 0.5 * l.cell_w;
            const double cy = static_cast<double>(l.cell_y(a.row)) + 0.5 * l.cell_h;
            draw_arrow(img, cx, cy, a.angle, len, Rgb{20, 20, 20});
        }
    }

    // Frame.
    const Rgb black{0, 0, 0};
    const std::size_t px0 = l.margin_left, py0 = l.margin_top;
    const std::size_t pw = l.cols * l.cell_w, ph = l.rows * l.cell_h;
    img.fill_rect(px0, py0 - 1, pw, 1, black);
    img.fill_rect(px0, py0 + ph, pw, 1, black);
    img.fill_rect(px0 - 1, py0, 1, ph, black);
    img.fill_rect(px0 + pw, py0, 1, ph, black);

    // Y axis: ticks at power-of-two periods (log2 spacing is uniform per row).
    const double log2_p0 = std::log2(periods.front());
    const double log2_step =
        periods.size() > 1 ? std::log2(periods[1]) - log2_p0 : 1.0;
    for (double p = 1.0; p <= periods.back() * 1.0001; p *= 2.0) {
        if (p < periods.front() * 0.9999) continue;
        const double row = (std::log2(p) - log2_p0) / log2_step;
        if (row < -0.5 || row > static_cast<double>(l.rows - 1) + 0.5) continue;
        const int y = static_cast<int>(std::lround(static_cast<double>(py0) +
                                                   (row + 0.5) * static_cast<double>(l.cell_h)));
        img.fill_rect(px0 - 5, static_cast<std::size_t>(y), 5, 1, black);
        char label[16];
        std::snprintf(label, sizeof label, "%g", p);
        draw_text(img, static_cast<int>(px0) - 6 - 6 * static_cast<int>(std::strlen(label)),
                  y - 3, label, black);
    }

    // X axis: a handful of calendar ticks.
    const std::size_t tick_every = std::max<std::size_t>(1, l.cols / 5);
    const int istep = static_cast<int>(step);
    for (std::size_t n = 0; n < l.cols; n += tick_every) {
        const std::size_t x = l.cell_x(n);
        img.fill_rect(x, py0 + ph + 1, 1, 4, black);
        draw_text(img, static_cast<int>(x) - 20, static_cast<int>(py0 + ph + 7),
                  start.plus(static_cast<int>(n) * istep).str(), black);
    }

    if (!title.empty()) draw_text(img, static_cast<int>(px0), 0, title, black);
    return img;
}

Image stack_vertical(const Image& a, const Image& b, std::size_t gap) {
    const std::size_t w = std::max(a.width(), b.width());
    Image out(w, a.height() + gap + b.height());
    for (std::size_t y = 0; y < a.height(); ++y) {
        for (std::size_t x = 0; x < a.width(); ++x) out.set(x, y, a.get(x, y));
    }
    for (std::size_t y = 0; y < b.height(); ++y) {
        for (std::size_t x = 0; x < b.width(); ++x) out.set(x, y + a.height() + gap, b.get(x, y));
    }
    return out;
}

}  // namespace wavecoh

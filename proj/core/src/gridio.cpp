#include "wavecoh/gridio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_double(const std::string& cell, const std::filesystem::path& path) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || p != cell.data() + cell.size()) {
        throw DataError("'" + path.string() + "': bad numeric cell '" + cell + "'");
    }
    return v;
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

void write_grid_csv(const std::filesystem::path& path, const RealGrid& g,
                    const std::vector<double>& periods, Month start, double step) {
    if (g.rows() != periods.size()) {
        throw std::invalid_argument("write_grid_csv: periods do not match grid rows");
    }
    auto out = open_out(path);
    const int istep = static_cast<int>(step);
    out << "period";
    for (std::size_t n = 0; n < g.cols(); ++n) {
        out << ',' << start.plus(static_cast<int>(n) * istep).str();
    }
    out << '\n';
    for (std::size_t j = 0; j < g.rows(); ++j) {
        out << format_double(periods[j]);
        for (std::size_t n = 0; n < g.cols(); ++n) out << ',' << format_double(g(j, n));
        out << '\n';
    }
}

void write_mask_csv(const std::filesystem::path& path, const MaskGrid& m,
                    const std::vector<double>& periods, Month start, double step) {
    RealGrid g(m.rows(), m.cols());
    for (std::size_t i = 0; i < g.data().size(); ++i) {
        g.data()[i] = m.data()[i] ? 1.0 : 0.0;
    }
    write_grid_csv(path, g, periods, start, step);
}

Month GridCsv::start() const {
    if (labels.empty()) throw DataError("grid csv has no time labels");
    return Month::parse(labels.front());
}

GridCsv read_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path.string() + "': empty file");
    auto header = split_line(line);
    if (header.size() < 2 || header[0] != "period") {
        throw DataError("'" + path.string() + "': expected a 'period,<months...>' header");
    }
    GridCsv out;
    out.labels.assign(header.begin() + 1, header.end());

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != header.size()) {
            throw DataError("'" + path.string() + "': ragged row with " +
                            std::to_string(cells.size()) + " cells");
        }
        out.periods.push_back(parse_double(cells[0], path));
        std::vector<double> row(cells.size() - 1);
        for (std::size_t i = 1; i < cells.size(); ++i) row[i - 1] = parse_double(cells[i], path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError("'" + path.string() + "': no data rows");
    out.values = RealGrid(rows.size(), out.labels.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t n = 0; n < out.labels.size(); ++n) out.values(j, n) = rows[j][n];
    }
    return out;
}

MaskGrid to_mask(const RealGrid& g) {
    MaskGrid m(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.data().size(); ++i) m.data()[i] = g.data()[i] != 0.0 ? 1 : 0;
    return m;
}

void write_coi_csv(const std::filesystem::path& path, const std::vector<double>& coi,
                   Month start, double step) {
    auto out = open_out(path);
    const int istep = static_cast<int>(step);
    out << "month,coi_period\n";
    for (std::size_t i = 0; i < coi.size(); ++i) {
        out << start.plus(static_cast<int>(i) * istep).str() << ',' << format_double(coi[i])
            << '\n';
    }
}

std::vector<double> read_coi_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path.string() + "': empty file");
    std::vector<double> coi;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != 2) throw DataError("'" + path.string() + "': expected month,value rows");
        coi.push_back(parse_double(cells[1], path));
    }
    if (coi.empty()) throw DataError("'" + path.string() + "': no data rows");
    return coi;
}

void write_series_csv(const std::filesystem::path& path, const std::vector<TimeSeries>& cols,
                      const std::string& time_column) {
    if (cols.empty()) throw std::invalid_argument("write_series_csv: no series");
    for (const auto& s : cols) {
        s.validate();
        if (s.start != cols[0].start || s.step != cols[0].step ||
            s.values.size() != cols[0].values.size()) {
            throw std::invalid_argument("write_series_csv: series do not share an axis");
        }
    }
    auto out = open_out(path);
    out << time_column;
    for (const auto& s : cols) out << ',' << s.name;
    out << '\n';
    const int istep = static_cast<int>(cols[0].step);
    for (std::size_t i = 0; i < cols[0].values.size(); ++i) {
        out << cols[0].start.plus(static_cast<int>(i) * istep).str();
        for (const auto& s : cols) out << ',' << format_double(s.values[i]);
        out << '\n';
    }
}

}  // namespace wavecoh

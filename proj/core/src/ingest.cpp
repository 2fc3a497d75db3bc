#include "wavecoh/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(trim(cur));
    return cells;
}

bool parse_number(const std::string& cell, double& out) {
    const char* b = cell.data();
    const char* e = b + cell.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && p == e && !cell.empty();
}

}  // namespace

TimeSeries load_csv(const std::filesystem::path& path, const std::string& time_column,
                    const std::string& value_column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path.string() + "': empty file");
    // Strip a UTF-8 BOM if present.
    if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF') {
        line.erase(0, 3);
    }
    const auto header = split_csv_line(line);
    auto find_col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw DataError("'" + path.string() + "': column '" + name + "' not found in header");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t tcol = find_col(time_column);
    const std::size_t vcol = find_col(value_column);

    TimeSeries out;
    out.name = value_column;
    out.step = 1.0;

    std::size_t row = 1;  // header is row 1
    Month prev{};
    bool have_prev = false;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() <= std::max(tcol, vcol)) {
            throw DataError("'" + path.string() + "' row " + std::to_string(row) +
                            ": expected at least " + std::to_string(std::max(tcol, vcol) + 1) +
                            " columns, got " + std::to_string(cells.size()));
        }
        Month m;
        if (!Month::try_parse(cells[tcol], m)) {
            throw DataError("'" + path.string() + "' row " + std::to_string(row) +
                            ": invalid month '" + cells[tcol] + "' (expected YYYY-MM)");
        }
        if (have_prev) {
            const int d = m.minus(prev);
            if (d <= 0) {
                throw DataError("'" + path.string() + "' row " + std::to_string(row) +
                                ": timestamps not strictly increasing (" + m.str() + " after " +
                                prev.str() + ")");
            }
            if (d > 1) {
                throw DataError("'" + path.string() + "' row " + std::to_string(row) +
                                ": gap in monthly series, missing " + prev.plus(1).str());
            }
        } else {
            out.start = m;
        }
        prev = m;
        have_prev = true;

        double v = 0.0;
        if (!parse_number(cells[vcol], v) || !std::isfinite(v)) {
            throw DataError("'" + path.string() + "' row " + std::to_string(row) +
                            ": non-numeric value '" + cells[vcol] + "' in column '" +
                            value_column + "'");
        }
        out.values.push_back(v);
    }

    if (out.values.size() < 2) {
        throw DataError("'" + path.string() + "': need at least 2 data rows, got " +
                        std::to_string(out.values.size()));
    }
    return out;
}

TimeSeries log_returns(const TimeSeries& s) {
    s.validate();
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (!(s.values[i] > 0.0)) {
            throw DataError("series '" + s.name + "': non-positive value at index " +
                            std::to_string(i) + "; log returns need strictly positive levels");
        }
    }
    TimeSeries out;
    out.name = s.name;
    out.start = s.start.plus(static_cast<int>(std::lround(s.step)));
    out.step = s.step;
    out.values.resize(s.values.size() - 1);
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        out.values[i] = std::log(s.values[i + 1] / s.values[i]);
    }
    return out;
}

TimeSeries standardize(const TimeSeries& s) {
    s.validate();
    const double sd = sample_sd(s.values);
    if (!(sd > 0.0)) {
        throw DataError("series '" + s.name + "': zero variance, cannot standardize");
    }
    const double m = sample_mean(s.values);
    TimeSeries out = s;
    for (double& v : out.values) v = (v - m) / sd;
    return out;
}

std::pair<TimeSeries, TimeSeries> align(const TimeSeries& a, const TimeSeries& b) {
    a.validate();
    b.validate();
    if (a.step != b.step) {
        throw DataError("align: series '" + a.name + "' and '" + b.name +
                        "' have different sampling steps");
    }
    const int step = static_cast<int>(std::lround(a.step));
    const Month start = std::max(a.start, b.start);
    const Month end = std::min(a.end(), b.end());
    if (end < start) {
        throw DataError("align: no calendar overlap between '" + a.name + "' (" + a.start.str() +
                        ".." + a.end().str() + ") and '" + b.name + "' (" + b.start.str() + ".." +
                        b.end().str() + ")");
    }
    auto slice = [&](const TimeSeries& s) {
        const int off_months = start.minus(s.start);
        if (off_months % step != 0) {
            throw DataError("align: series '" + s.name + "' is phase-shifted against the other");
        }
        const std::size_t off = static_cast<std::size_t>(off_months / step);
        const std::size_t len = static_cast<std::size_t>(end.minus(start) / step) + 1;
        TimeSeries out;
        out.name = s.name;
        out.start = start;
        out.step = s.step;
        out.values.assign(s.values.begin() + off, s.values.begin() + off + len);
        return out;
    };
    auto ra = slice(a);
    auto rb = slice(b);
    if (ra.values.size() < 2) throw DataError("align: overlap shorter than 2 samples");
    return {std::move(ra), std::move(rb)};
}

double lag1_autocorr(const TimeSeries& s) {
    s.validate();
    const double m = sample_mean(s.values);
    double num = 0.0, den = 0.0;
    const auto& v = s.values;
    for (std::size_t i = 0; i < v.size(); ++i) {
        den += (v[i] - m) * (v[i] - m);
        if (i + 1 < v.size()) num += (v[i] - m) * (v[i + 1] - m);
    }
    if (!(den > 0.0)) {
        throw DataError("series '" + s.name + "': zero variance, cannot estimate autocorrelation");
    }
    return num / den;
}

AR1Params fit_ar1(const TimeSeries& s) {
    if (s.values.size() < 8) {
        throw DataError("series '" + s.name + "': need at least 8 samples to fit AR(1)");
    }
    const double r1 = lag1_autocorr(s);  // checks variance
    AR1Params p;
    p.alpha = std::clamp(r1, 0.0, 0.999);
    p.mean = sample_mean(s.values);
    p.sigma = std::sqrt(sample_variance(s.values) * (1.0 - p.alpha * p.alpha));
    return p;
}

}  // namespace wavecoh

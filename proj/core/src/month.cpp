#include "wavecoh/month.hpp"

#include <cctype>
#include <cstdio>

#include "wavecoh/errors.hpp"

namespace wavecoh {

Month Month::plus(int months) const {
    long t = static_cast<long>(year) * 12 + (month - 1) + months;
    long y = t >= 0 ? t / 12 : -((-t + 11) / 12);
    return Month{static_cast<int>(y), static_cast<int>(t - y * 12 + 1)};
}

int Month::minus(const Month& other) const {
    return (year - other.year) * 12 + (month - other.month);
}

std::string Month::str() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

bool Month::try_parse(const std::string& text, Month& out) {
    // "YYYY-MM", tolerating surrounding whitespace.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::size_t dash = text.find('-', b + 1);  // allow a leading sign-free year only
    if (dash == std::string::npos || dash >= e) return false;
    int y = 0, m = 0;
    if (dash - b < 1 || dash - b > 6 || e - dash - 1 < 1 || e - dash - 1 > 2) return false;
    for (std::size_t i = b; i < dash; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        y = y * 10 + (text[i] - '0');
    }
    for (std::size_t i = dash + 1; i < e; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        m = m * 10 + (text[i] - '0');
    }
    if (m < 1 || m > 12) return false;
    out = Month{y, m};
    return true;
}

Month Month::parse(const std::string& text) {
    Month m;
    if (!try_parse(text, m)) {
        throw DataError("invalid month '" + text + "' (expected YYYY-MM)");
    }
    return m;
}

}  // namespace wavecoh

#pragma once

#include <compare>
#include <string>

namespace wavecoh {

// Calendar month, the unit of the time axis for every series here.
struct Month {
    int year = 1970;
    int month = 1;  // 1..12

    friend auto operator<=>(const Month&, const Month&) = default;

    Month plus(int months) const;
    // Signed distance in months: *this - other.
    int minus(const Month& other) const;

    std::string str() const;  // "YYYY-MM"

    static Month parse(const std::string& text);  // throws DataError
    static bool try_parse(const std::string& text, Month& out);
};

}  // namespace wavecoh

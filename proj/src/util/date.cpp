#include "midi/util/date.hpp"

#include "midi/util/text.hpp"

#include <cctype>

namespace midi::util {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(int y, unsigned m) {
    static constexpr unsigned table[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return table[m - 1];
}

}  // namespace

std::optional<civil_date> parse_da(std::string_view s) {
    if (s.size() != 8 || !all_digits(s)) return std::nullopt;
    civil_date d;
    d.year = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
    d.month = static_cast<unsigned>((s[4] - '0') * 10 + (s[5] - '0'));
    d.day = static_cast<unsigned>((s[6] - '0') * 10 + (s[7] - '0'));
    if (d.month < 1 || d.month > 12) return std::nullopt;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return std::nullopt;
    return d;
}

std::string format_da(const civil_date& d) {
    return format("%04d%02u%02u", d.year, d.month, d.day);
}

// Howard Hinnant's civil calendar algorithms.
int64_t days_from_civil(const civil_date& d) {
    int y = d.year;
    unsigned m = d.month;
    unsigned dd = d.day;
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + dd - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<int64_t>(era) * 146097 + static_cast<int64_t>(doe) - 719468;
}

civil_date civil_from_days(int64_t z) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return civil_date{static_cast<int>(y + (m <= 2)), m, d};
}

civil_date shift_date(const civil_date& d, int64_t days) {
    return civil_from_days(days_from_civil(d) + days);
}

bool is_valid_da(std::string_view s) {
    return parse_da(s).has_value();
}

}  // namespace midi::util

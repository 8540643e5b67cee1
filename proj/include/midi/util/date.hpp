#ifndef MIDI_UTIL_DATE_HPP
#define MIDI_UTIL_DATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace midi::util {

struct civil_date {
    int year = 0;
    unsigned month = 0;  // 1..12
    unsigned day = 0;    // 1..31

    bool operator==(const civil_date&) const = default;
};

/// Parses DICOM DA format "YYYYMMDD". Returns nullopt on malformed input or an
/// impossible calendar date.
std::optional<civil_date> parse_da(std::string_view s);

/// Formats as "YYYYMMDD".
std::string format_da(const civil_date& d);

/// Proleptic Gregorian day count (days since 1970-01-01, negative allowed).
int64_t days_from_civil(const civil_date& d);
civil_date civil_from_days(int64_t days);

/// Calendar-correct shift by a signed number of days.
civil_date shift_date(const civil_date& d, int64_t days);

bool is_valid_da(std::string_view s);

}  // namespace midi::util

#endif

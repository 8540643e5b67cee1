#ifndef MIDI_UTIL_TEXT_HPP
#define MIDI_UTIL_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace midi::util {

std::string to_upper(std::string_view s);
std::string trim(std::string_view s);

/// Splits on a single character; empty fields are preserved.
std::vector<std::string> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with(std::string_view s, std::string_view prefix);

/// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

/// printf-style helper for the few places that need formatted text.
std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

/// Fixed two-decimal percentage, half-up rounding ("99.45").
std::string percent_2dp(double ratio_0_to_1);

}  // namespace midi::util

#endif

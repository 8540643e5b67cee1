#ifndef MIDI_UTIL_CSV_HPP
#define MIDI_UTIL_CSV_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace midi::util {

/// RFC 4180-style quoting: fields containing comma, quote, CR or LF are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(std::string_view field);

void csv_write_row(std::ostream& os, const std::vector<std::string>& fields);

/// Parses a full CSV document. Handles quoted fields, doubled quotes and
/// embedded newlines. Throws std::runtime_error with a line number on
/// structural errors (unterminated quote).
std::vector<std::vector<std::string>> csv_parse(std::string_view content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace midi::util

#endif

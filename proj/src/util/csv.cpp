#include "midi/util/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace midi::util {

std::string csv_escape(std::string_view field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quote) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void csv_write_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) os.put(',');
        os << csv_escape(fields[i]);
    }
    os.put('\n');
}

std::vector<std::vector<std::string>> csv_parse(std::string_view content) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    size_t line = 1;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(row);
        row.clear();
    };

    for (size_t i = 0; i < content.size(); ++i) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field_started && field.empty()) {
                    in_quotes = true;
                    field_started = true;
                } else {
                    field.push_back(c);
                }
                break;
            case ',':
                end_field();
                break;
            case '\r':
                break;
            case '\n':
                ++line;
                end_row();
                break;
            default:
                field_started = true;
                field.push_back(c);
        }
    }
    if (in_quotes) {
        throw std::runtime_error("csv: unterminated quoted field at line " + std::to_string(line));
    }
    if (field_started || !field.empty() || !row.empty()) {
        end_row();
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write: " + path);
}

}  // namespace midi::util

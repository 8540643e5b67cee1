#include "midi/dicom/tag.hpp"
#include "midi/dicom/tag_path.hpp"

#include "midi/util/text.hpp"

#include <cctype>
#include <cstdio>

namespace midi::dicom {

namespace {

std::optional<uint16_t> parse_hex4(std::string_view s) {
    if (s.size() != 4) return std::nullopt;
    uint16_t v = 0;
    for (char c : s) {
        v = static_cast<uint16_t>(v << 4);
        if (c >= '0' && c <= '9') v |= static_cast<uint16_t>(c - '0');
        else if (c >= 'A' && c <= 'F') v |= static_cast<uint16_t>(c - 'A' + 10);
        else if (c >= 'a' && c <= 'f') v |= static_cast<uint16_t>(c - 'a' + 10);
        else return std::nullopt;
    }
    return v;
}

}  // namespace

std::string tag::to_string() const {
    return util::format("(%04X,%04X)", group, element);
}

std::optional<tag> tag::parse(std::string_view s) {
    if (s.size() != 11 || s.front() != '(' || s.back() != ')' || s[5] != ',') {
        return std::nullopt;
    }
    auto g = parse_hex4(s.substr(1, 4));
    auto e = parse_hex4(s.substr(6, 4));
    if (!g || !e) return std::nullopt;
    return tag{*g, *e};
}

tag_path& tag_path::into(tag t, uint32_t item) {
    segments.push_back({t, item});
    return *this;
}

tag_path& tag_path::then(tag t) {
    segments.push_back({t, std::nullopt});
    return *this;
}

std::string tag_path::to_string() const {
    std::string out;
    for (size_t i = 0; i < segments.size(); ++i) {
        if (i) out.push_back('/');
        out += segments[i].t.to_string();
        if (segments[i].item) {
            out += util::format("[%u]", *segments[i].item);
        }
    }
    return out;
}

std::optional<tag_path> tag_path::parse(std::string_view s) {
    tag_path path;
    size_t pos = 0;
    while (pos < s.size()) {
        if (pos + 11 > s.size()) return std::nullopt;
        auto t = tag::parse(s.substr(pos, 11));
        if (!t) return std::nullopt;
        pos += 11;
        std::optional<uint32_t> item;
        if (pos < s.size() && s[pos] == '[') {
            size_t close = s.find(']', pos);
            if (close == std::string_view::npos || close == pos + 1) return std::nullopt;
            uint32_t idx = 0;
            for (size_t i = pos + 1; i < close; ++i) {
                char c = s[i];
                if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
                idx = idx * 10 + static_cast<uint32_t>(c - '0');
            }
            item = idx;
            pos = close + 1;
        }
        path.segments.push_back({*t, item});
        if (pos < s.size()) {
            if (s[pos] != '/') return std::nullopt;
            ++pos;
            if (pos == s.size()) return std::nullopt;  // trailing slash
        }
    }
    if (path.segments.empty()) return std::nullopt;
    // Every non-terminal segment needs an item index; the leaf must not have one.
    for (size_t i = 0; i + 1 < path.segments.size(); ++i) {
        if (!path.segments[i].item) return std::nullopt;
    }
    if (path.segments.back().item) return std::nullopt;
    return path;
}

}  // namespace midi::dicom
